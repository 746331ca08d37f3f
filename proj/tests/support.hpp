#pragma once

#include <random>

#include "qtoric/algebra/number_field.hpp"
#include "qtoric/multipoly/tripoly.hpp"

namespace qtoric::testing {

inline Rat random_rat(std::mt19937_64& rng, int range = 9) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 4);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline FieldElem random_elem(std::mt19937_64& rng, const FieldPtr& f, int range = 9) {
    std::vector<Rat> c(f->dim());
    std::bernoulli_distribution keep(0.7);
    for (auto& x : c)
        if (keep(rng)) x = random_rat(rng, range);
    return FieldElem(f, c);
}

// Random polynomial with up to `terms` terms; exponents bounded by maxdeg per variable.
// A negative `hom` gives arbitrary monomials, otherwise all terms have total degree `hom`.
inline TriPoly random_tripoly(std::mt19937_64& rng, const FieldPtr& f, int terms, int maxdeg,
                              int hom = -1, bool use_z = true) {
    std::uniform_int_distribution<int> e(0, maxdeg);
    TriPoly p;
    for (int t = 0; t < terms; ++t) {
        int i = e(rng), j = e(rng), k = use_z ? e(rng) : 0;
        if (hom >= 0) {
            i = std::min(i, hom);
            j = std::min(j, hom - i);
            k = use_z ? hom - i - j : 0;
            if (!use_z) j = hom - i;
        }
        FieldElem c = f ? random_elem(rng, f, 5) : FieldElem(random_rat(rng, 5));
        p += TriPoly::monomial(c, i, j, k);
    }
    return p;
}

inline FieldElem random_point_coord(std::mt19937_64& rng, const FieldPtr& f) {
    return f ? random_elem(rng, f, 7) : FieldElem(random_rat(rng, 7));
}

}  // namespace qtoric::testing
