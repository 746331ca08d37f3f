#pragma once

#include <string>

#include "qtoric/multipoly/tripoly.hpp"

namespace qtoric {

struct NormalizePolicy {
    // Full gcd reduction runs once num and den together exceed this many terms.
    std::size_t threshold = 2000;
    static NormalizePolicy always() { return {0}; }
    static NormalizePolicy never() { return {static_cast<std::size_t>(-1)}; }
};

// Element of K(x, y): a quotient of polynomials free of z.
class RatFunc {
public:
    RatFunc() : num_(), den_(FieldElem(1)) {}
    RatFunc(const TriPoly& num);
    RatFunc(const TriPoly& num, const TriPoly& den);
    RatFunc(long c) : RatFunc(TriPoly(c)) {}

    const TriPoly& num() const { return num_; }
    const TriPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    std::size_t size() const { return num_.size() + den_.size(); }

    RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc inverse() const;
    RatFunc pow(unsigned e) const;
    RatFunc scale(const FieldElem& c) const { return RatFunc(c * num_, den_, raw_tag{}); }

    std::string to_string() const;

private:
    struct raw_tag {};
    RatFunc(TriPoly num, TriPoly den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}
    friend RatFunc normalize(const RatFunc& r, const NormalizePolicy& policy);
    TriPoly num_, den_;
};

// num_r * den_s == num_s * den_r
bool ratfunc_eq(const RatFunc& r, const RatFunc& s);

// Strips common monomials and makes den lex-monic; full gcd reduction past the threshold.
RatFunc normalize(const RatFunc& r, const NormalizePolicy& policy = {});
RatFunc reduce_full(const RatFunc& r);

std::string to_string(const RatFunc& r);

}  // namespace qtoric
