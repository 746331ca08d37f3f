#pragma once

#include <array>
#include <vector>

#include "qtoric/global/superabundance.hpp"
#include "qtoric/multipoly/tripoly.hpp"

namespace qtoric::curves {

TriPoly conic_c2();      // x^2+y^2+z^2-2(xy+xz+yz)
TriPoly c69();           // conic_c2 at (x^3, y^3, z^3)
TriPoly c43();           // tricuspidal quartic
TriPoly l0();            // its bitangent x+y+z

// The nine cusps [1:w^j:0], [0:1:w^j], [w^j:0:1] over Q(w3).
std::vector<ExactPoint> c69_cusps();

struct C1239 {
    FieldPtr K;                    // Q(zeta9)(b), b^3 = 3
    std::array<TriPoly, 3> lines;  // l0, l1 = -8x+y+z, l2 = x-8y+z
    TriPoly C;
    std::vector<ExactPoint> cusps;  // 27 + 6 + 6
};

// `verify` checks every constructed point is a cusp of C (slow).
C1239 build_c12_39(bool verify = false);

// The same 39 points from numeric cube roots at the current precision.
std::vector<NumericPoint> c12_39_cusps_numeric();

// Cube root of v in K of the form s b^e a^j with s rational; throws FieldLacksRoot.
FieldElem tower_cube_root(const FieldPtr& K, const FieldElem& v);

// f2^3 + f3^2 with f2 = xz - y^2 and f3 meeting the conic at six rational points.
struct TorusSextic {
    TriPoly f2, f3, C;
    std::vector<ExactPoint> cusps;
};
TorusSextic generic_torus_sextic();

}  // namespace qtoric::curves
