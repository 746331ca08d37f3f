#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtoric/multipoly/tripoly.hpp"
#include "qtoric/singularities/local.hpp"

namespace qtoric {

struct Component {
    TriPoly F;
    int eps = 1;
};

struct SingularPoint {
    std::vector<FieldElem> coords;  // may be empty when only the type is known
    SingRecord record;
};

struct CurveSpec {
    std::vector<Component> components;
    std::optional<std::vector<SingularPoint>> singular_points;

    int degree() const;  // sum eps_i deg F_i
    // Throws InvalidInput when the eps are not coprime or a component is not homogeneous.
    void validate() const;
};

enum class CurveDeltaClass { Partial, Total, Neither };
const char* curve_delta_class_name(CurveDeltaClass c);

struct CurveDeltaReport {
    CurveDeltaClass verdict = CurveDeltaClass::Neither;
    bool partial = false;
    bool total = false;
    std::vector<DeltaClass> per_point;
};

// Throws MissingSingularityData when the singular points are not given.
CurveDeltaReport classify_curve_delta(const CurveSpec& curve, const AlexPoly& global_alex, unsigned delta);

struct DivisibilityReport {
    bool first_pass = false;
    std::vector<int> witness;  // smallest exponents k_i (by total, then lexicographic)
    UPoly bound;               // prod local * prod (t^eps_i - 1)^k_i at the witness
    bool second_pass = false;
    int degree = 0;
    std::vector<unsigned> orders;      // k with Phi_k dividing the global polynomial
    std::vector<unsigned> violations;  // those orders not dividing the degree
    bool pass() const { return first_pass && second_pass; }
};

// cap < 0 means r + 1.
DivisibilityReport divisibility_check(const CurveSpec& curve, const AlexPoly& global_alex, int cap = -1);

// Orders k with Phi_k | p, with multiplicity.
std::vector<std::pair<unsigned, int>> cyclotomic_orders(const UPoly& p);

}  // namespace qtoric
