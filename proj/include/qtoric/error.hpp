#pragma once

#include <stdexcept>
#include <string>

namespace qtoric {

enum class ErrorKind {
    DivisionByZero,
    IncompatibleField,
    IrreducibilityUnknown,
    ReducibleRadical,
    NotDivisible,
    ZeroPolynomial,
    NotOnCurve,
    FieldLacksRoot,
    UnsupportedShape,
    IncompatibleTypes,
    RelationNotNormalized,
    DegenerateLines,
    NotAPolynomial,
    UnknownCombination,
    MissingTable,
    MissingSingularityData,
    NotSquarefree,
    NotSingular,
    RankUncertified,
    NotCuspidalNodal,
    SyntaxError,
    UnknownConstant,
    InvalidInput,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qtoric
