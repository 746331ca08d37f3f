#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/algebra/number_field.hpp"

namespace qtoric {

using Exp = std::array<int, 3>;

// Exponent triples packed 21 bits each so that key order is lexicographic in (i, j, k)
// and multiplying monomials is adding keys.
inline std::uint64_t pack(int i, int j, int k) {
    return (static_cast<std::uint64_t>(i) << 42) | (static_cast<std::uint64_t>(j) << 21) |
           static_cast<std::uint64_t>(k);
}
inline Exp unpack(std::uint64_t key) {
    return {static_cast<int>(key >> 42), static_cast<int>((key >> 21) & 0x1FFFFF),
            static_cast<int>(key & 0x1FFFFF)};
}

enum class Var { X = 0, Y = 1, Z = 2 };

class TriPoly {
public:
    using Terms = std::map<std::uint64_t, FieldElem>;

    TriPoly() = default;
    TriPoly(const FieldElem& c);
    TriPoly(long c) : TriPoly(FieldElem(c)) {}

    static TriPoly var(Var v);
    static TriPoly x() { return var(Var::X); }
    static TriPoly y() { return var(Var::Y); }
    static TriPoly z() { return var(Var::Z); }
    static TriPoly monomial(const FieldElem& c, int i, int j, int k);

    const Terms& terms() const { return t_; }
    size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    FieldElem constant_value() const;  // coefficient of 1
    FieldElem coeff(int i, int j, int k) const;

    int degree() const;       // total degree, -1 for zero
    int min_degree() const;   // smallest total degree of a term
    int degree_in(Var v) const;
    int min_degree_in(Var v) const;
    bool is_homogeneous() const;
    bool is_free_of(Var v) const { return degree_in(v) <= 0; }

    // Lexicographic leading term (largest x exponent, then y, then z).
    std::pair<Exp, FieldElem> lead_term() const;
    FieldPtr field() const;  // field of the first non-rational coefficient, may be null

    TriPoly& operator+=(const TriPoly& o);
    TriPoly& operator-=(const TriPoly& o);
    TriPoly& operator*=(const TriPoly& o);
    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const FieldElem& c, const TriPoly& a);
    TriPoly operator-() const;
    friend bool operator==(const TriPoly& a, const TriPoly& b);
    friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

    TriPoly pow(unsigned e) const;
    TriPoly shift(int i, int j, int k) const;  // multiply by x^i y^j z^k

    FieldElem eval(const FieldElem& x, const FieldElem& y, const FieldElem& z) const;
    TriPoly substitute(const TriPoly& gx, const TriPoly& gy, const TriPoly& gz) const;
    TriPoly partial(Var v) const;
    TriPoly set_var(Var v, const FieldElem& value) const;
    TriPoly dehomogenize() const { return set_var(Var::Z, FieldElem(1)); }
    // For f free of z with total degree <= d: z^d f(x/z, y/z).
    TriPoly homogenize(int d) const;
    // Swap variables according to a permutation: result variable perm[v] takes the role of v.
    TriPoly permute(Var to_x, Var to_y, Var to_z) const;

    // Divides by the largest monomial dividing every term; returns that monomial's exponents.
    Exp monomial_content() const;
    TriPoly divide_monomial(const Exp& e) const;
    // Scale so that the lexicographic leading coefficient is 1.
    TriPoly monic() const;

    std::string to_string() const;

private:
    void add_term(std::uint64_t key, const FieldElem& c);
    Terms t_;
};

std::string to_string(const TriPoly& p);

std::array<TriPoly, 3> partials(const TriPoly& f);

// Exact multivariate division; nullopt when g does not divide f.
std::optional<TriPoly> try_divexact(const TriPoly& f, const TriPoly& g);
TriPoly divexact(const TriPoly& f, const TriPoly& g);

// Sylvester resultant eliminating v, computed by fraction-free elimination.
TriPoly resultant(const TriPoly& f, const TriPoly& g, Var v);

// Coefficients of f as a polynomial in v: result[e] is the coefficient of v^e.
std::vector<TriPoly> coefficients_in(const TriPoly& f, Var v);

}  // namespace qtoric
