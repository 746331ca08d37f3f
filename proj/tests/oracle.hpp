#pragma once

#include "qtoric/mw/section.hpp"

namespace qtoric::testing {

// Chord-tangent law on y^2 = x^3 + F with x = -A, y = B, written from scratch.
struct WPoint {
    bool inf = true;
    RatFunc x, y;
};

inline WPoint to_w(const Section& s) {
    if (s.is_infinity()) return {};
    return {false, reduce_full(-s.A()), reduce_full(s.B())};
}

inline WPoint w_add(const WPoint& p, const WPoint& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    RatFunc lambda;
    if (ratfunc_eq(p.x, q.x)) {
        if (!ratfunc_eq(p.y, q.y) || p.y.is_zero()) return {};
        lambda = RatFunc(FieldElem(3)) * p.x * p.x / (RatFunc(FieldElem(2)) * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    lambda = reduce_full(lambda);
    RatFunc x3 = reduce_full(lambda * lambda - p.x - q.x);
    RatFunc y3 = reduce_full(lambda * (p.x - x3) - p.y);
    return {false, x3, y3};
}

inline bool agrees(const Section& s, const WPoint& w) {
    if (s.is_infinity() || w.inf) return s.is_infinity() && w.inf;
    return ratfunc_eq(-s.A(), w.x) && ratfunc_eq(s.B(), w.y);
}

}  // namespace qtoric::testing
