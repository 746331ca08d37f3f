#include "qtoric/multipoly/ratfunc.hpp"

#include <algorithm>

#include "qtoric/multipoly/gcd.hpp"

namespace qtoric {

namespace {

void require_xy(const TriPoly& p) {
    if (!p.is_free_of(Var::Z))
        throw Error(ErrorKind::InvalidInput, "rational functions live in the chart z = 1");
}

}  // namespace

RatFunc::RatFunc(const TriPoly& num) : num_(num), den_(FieldElem(1)) { require_xy(num_); }

RatFunc::RatFunc(const TriPoly& num, const TriPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    require_xy(num_);
    require_xy(den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::raw_tag{});
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::raw_tag{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_, RatFunc::raw_tag{});
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of the zero rational function");
    return RatFunc(den_, num_, raw_tag{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(unsigned e) const { return RatFunc(num_.pow(e), den_.pow(e), raw_tag{}); }

std::string RatFunc::to_string() const {
    if (den_ == TriPoly(FieldElem(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string to_string(const RatFunc& r) { return r.to_string(); }

bool ratfunc_eq(const RatFunc& r, const RatFunc& s) {
    if (r.den() == s.den()) return r.num() == s.num();
    return r.num() * s.den() == s.num() * r.den();
}

RatFunc normalize(const RatFunc& r, const NormalizePolicy& policy) {
    if (r.num_.is_zero()) return RatFunc();
    Exp mn = r.num_.monomial_content(), md = r.den_.monomial_content();
    Exp m{std::min(mn[0], md[0]), std::min(mn[1], md[1]), 0};
    TriPoly num = r.num_.divide_monomial(m), den = r.den_.divide_monomial(m);
    if (num.size() + den.size() > policy.threshold && !den.is_constant()) {
        TriPoly g = poly_gcd(num, den);
        if (!g.is_constant()) {
            num = divexact(num, g);
            den = divexact(den, g);
        }
    }
    FieldElem inv = den.lead_term().second.inverse();
    if (!inv.is_one()) {
        num = inv * num;
        den = inv * den;
    }
    return RatFunc(std::move(num), std::move(den), RatFunc::raw_tag{});
}

RatFunc reduce_full(const RatFunc& r) { return normalize(r, NormalizePolicy::always()); }

}  // namespace qtoric
