#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qtoric/multipoly/tripoly.hpp"
#include "qtoric/numeric/complex.hpp"

namespace qtoric {

struct FoundPoint {
    bool exact = false;
    std::array<FieldElem, 3> coords;           // exact path
    std::array<numeric::Complex, 3> approx;    // always filled
    double residual_log2 = 0;                  // numeric path: log2 of max |C|, |grad C|
};

struct SingularSearch {
    unsigned bits = 256;
    // Field in which roots are sought; roots in Q(w3) or Q(i) are recognized when this field
    // contains them (a rational curve extends to Q(w3) or Q(i) as needed).
    FieldPtr field;
};

// Singular points of a squarefree homogeneous C. Throws NotSquarefree.
std::vector<FoundPoint> find_singular_points(const TriPoly& C, const SingularSearch& opt = {});

// Exact roots of g in the search field (or a quadratic extension as above); the rest are
// returned in `numeric_roots` at the current precision.
std::vector<FieldElem> exact_roots(const KPoly& g, const FieldPtr& field, std::vector<numeric::Complex>* numeric_roots);

KPoly to_kpoly(const TriPoly& p, Var v);

enum class NodeCusp { Node, Cusp, Other };
const char* node_cusp_name(NodeCusp c);

// Throws NotSingular when P is not a singular point of C.
NodeCusp classify_node_cusp(const TriPoly& C, const std::array<FieldElem, 3>& P);

bool is_singular_point(const TriPoly& C, const std::array<FieldElem, 3>& P);

}  // namespace qtoric
