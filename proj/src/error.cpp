#include "qtoric/error.hpp"

namespace qtoric {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::IncompatibleField: return "IncompatibleField";
        case ErrorKind::IrreducibilityUnknown: return "IrreducibilityUnknown";
        case ErrorKind::ReducibleRadical: return "ReducibleRadical";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::NotOnCurve: return "NotOnCurve";
        case ErrorKind::FieldLacksRoot: return "FieldLacksRoot";
        case ErrorKind::UnsupportedShape: return "UnsupportedShape";
        case ErrorKind::IncompatibleTypes: return "IncompatibleTypes";
        case ErrorKind::RelationNotNormalized: return "RelationNotNormalized";
        case ErrorKind::DegenerateLines: return "DegenerateLines";
        case ErrorKind::NotAPolynomial: return "NotAPolynomial";
        case ErrorKind::UnknownCombination: return "UnknownCombination";
        case ErrorKind::MissingTable: return "MissingTable";
        case ErrorKind::MissingSingularityData: return "MissingSingularityData";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::NotSingular: return "NotSingular";
        case ErrorKind::RankUncertified: return "RankUncertified";
        case ErrorKind::NotCuspidalNodal: return "NotCuspidalNodal";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownConstant: return "UnknownConstant";
        case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Error";
}

}  // namespace qtoric
