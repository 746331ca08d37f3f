#pragma once

#include <string>

#include "qtoric/algebra/alexpoly.hpp"
#include "qtoric/multipoly/ratfunc.hpp"

namespace qtoric {

// The threefold A^3 + B^2 = F over K(x, y), chart z = 1.
struct CurveF {
    TriPoly F;        // as supplied (homogeneous of degree 6k, or affine)
    TriPoly affine;   // F(x, y, 1)
    int k = 0;        // deg F / 6 for homogeneous input, 0 for affine input
    FieldPtr field;   // active field (for the automorphism), may be null for Q

    // Homogeneous F of degree divisible by 6.
    static CurveF make(const TriPoly& F, const FieldPtr& field = nullptr);
    // Any polynomial in x, y.
    static CurveF affine_chart(const TriPoly& Fa, const FieldPtr& field = nullptr);
};

// A section in weighted form: A = f / h^2, B = g / h^3 with f, g, h polynomials in x, y.
class Section {
public:
    Section() = default;  // Infinity
    static Section infinity() { return Section(); }
    // Does not check the curve equation.
    static Section weighted(TriPoly f, TriPoly g, TriPoly h);
    static Section from_ratfuncs(const RatFunc& A, const RatFunc& B);
    // Checked constructor: throws NotOnCurve unless A^3 + B^2 = F.
    static Section make(const RatFunc& A, const RatFunc& B, const CurveF& C);

    bool is_infinity() const { return inf_; }
    const TriPoly& f() const { return f_; }
    const TriPoly& g() const { return g_; }
    const TriPoly& h() const { return h_; }
    RatFunc A() const;
    RatFunc B() const;
    std::size_t size() const { return f_.size() + g_.size() + h_.size(); }

    std::string to_string() const;

private:
    bool inf_ = true;
    TriPoly f_, g_, h_;
};

struct GroupOptions {
    NormalizePolicy policy;
    bool check_closure = true;  // verify on_curve after every operation
};

bool on_curve(const Section& s, const CurveF& C);
// A1 = A2 and B1 = B2 as rational functions.
bool section_eq(const Section& a, const Section& b);

Section negate(const Section& s, const CurveF& C);
Section add(const Section& a, const Section& b, const CurveF& C, const GroupOptions& opt = {});
Section double_section(const Section& s, const CurveF& C, const GroupOptions& opt = {});
inline Section subtract(const Section& a, const Section& b, const CurveF& C, const GroupOptions& opt = {}) {
    return add(a, negate(b, C), C, opt);
}
// (A, B) -> (w3 A, -B) with w3 = w6^2; this is the action of w6.
Section omega_action(const Section& s, const CurveF& C);
Section int_scalar(long n, const Section& s, const CurveF& C, const GroupOptions& opt = {});
// (a + b w6) s = a s + b (omega s)
Section zomega_scalar(long a, long b, const Section& s, const CurveF& C, const GroupOptions& opt = {});

// Weighted reduction: removes common factors G (G | h, G^2 | f, G^3 | g) and makes h monic.
// Full gcd-based reduction runs only past the policy threshold.
Section reduce(const Section& s, const NormalizePolicy& policy = {});
Section reduce_full(const Section& s);

// Rank of the Mordell-Weil group read off an Alexander polynomial (t^2 - t + 1)^s: 2s.
int mw_rank_from_alexander(const AlexPoly& delta);

}  // namespace qtoric
