#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/algebra/rational.hpp"
#include "qtoric/algebra/upoly.hpp"

namespace qtoric {

struct RadicalSpec {
    unsigned k = 2;
    std::vector<Rat> r;  // coordinates of r in Q[a]/(Phi_n), length phi(n)
};

struct FieldSpec {
    unsigned n = 1;
    std::optional<RadicalSpec> radical;
    bool trust = false;  // skip the irreducibility check of b^k - r

    static FieldSpec cyclotomic(unsigned n) { return FieldSpec{n, std::nullopt, false}; }
    static FieldSpec with_radical(unsigned n, unsigned k, std::vector<Rat> r, bool trust = false);
    static FieldSpec with_radical(unsigned n, unsigned k, const Rat& r, bool trust = false);
};

bool same_field(const FieldSpec& a, const FieldSpec& b);

class NumberField;
class FieldElem;
FieldElem operator*(const FieldElem& a, const FieldElem& b);
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[a]/(Phi_n(a)) [b]/(b^k - r). Immutable once built.
class NumberField {
public:
    // Throws ReducibleRadical / IrreducibilityUnknown unless spec.trust.
    static FieldPtr make(const FieldSpec& spec);
    static FieldPtr cyclotomic(unsigned n) { return make(FieldSpec::cyclotomic(n)); }

    const FieldSpec& spec() const { return spec_; }
    unsigned n() const { return spec_.n; }
    int base_degree() const { return d0_; }
    int radical_degree() const { return k_; }
    int dim() const { return d0_ * k_; }
    bool has_radical() const { return k_ > 1; }
    const FieldPtr& base() const { return base_; }  // null when there is no radical layer
    const UPoly& modulus() const { return phi_; }

    std::string describe() const;

    // Raw product slots (index j*(2*d0-1) + i for a^i b^j, j <= 2k-2) reduced in place
    // to d0*k coordinates; den picks up the radical denominator.
    void reduce_product(std::vector<Int>& slots, Int& den) const;

private:
    friend class FieldElem;
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    NumberField() = default;
    void reduce_base(std::vector<Int>& v) const;  // length <= 2*d0-1 -> d0

    FieldSpec spec_;
    int d0_ = 1;
    int k_ = 1;
    UPoly phi_;
    std::vector<Int> phi_int_;
    std::vector<std::vector<Int>> red_;  // red_[e - d0] = a^e mod Phi_n
    std::vector<Int> rnum_;
    Int rden_ = 1;
    FieldPtr base_;
};

// Element of a NumberField, stored as an integer coordinate vector over a common positive
// denominator in lowest terms. An element without a field is a plain rational constant; it
// combines with any field.
class FieldElem {
public:
    FieldElem() : num_(1), den_(1) {}
    FieldElem(long v) : num_(1, Int(v)), den_(1) {}
    FieldElem(const Rat& v) : num_(1, v.get_num()), den_(v.get_den()) {
        if (den_ != 1) normalize_rational();
    }
    FieldElem(FieldPtr f, const std::vector<Rat>& coords);

    static FieldElem zero(const FieldPtr& f);
    static FieldElem one(const FieldPtr& f);
    static FieldElem from_rat(const FieldPtr& f, const Rat& v);
    // Integer coordinates over den (> 0), reduced to lowest terms.
    static FieldElem from_integers(const FieldPtr& f, std::vector<Int> nums, Int den);
    static FieldElem gen_a(const FieldPtr& f);
    static FieldElem gen_b(const FieldPtr& f);
    // a^(n/m); throws FieldLacksRoot when m does not divide n
    static FieldElem root_of_unity(const FieldPtr& f, unsigned m);

    const FieldPtr& field() const { return field_; }
    int dim() const { return static_cast<int>(num_.size()); }
    Rat coord(int idx) const;
    Rat coord(int i, int j) const;  // coefficient of a^i b^j
    std::vector<Rat> coords() const;
    const std::vector<Int>& numerators() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return rational_; }
    Rat rational_value() const;  // requires is_rational()

    FieldElem promote(const FieldPtr& f) const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);
    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    FieldElem inverse() const;
    FieldElem pow(long e) const;
    FieldElem mul_rat(const Rat& s) const;

    std::string to_string() const;

private:
    void normalize();
    void normalize_rational();
    static FieldPtr common_field(const FieldElem& a, const FieldElem& b);

    FieldPtr field_;
    std::vector<Int> num_;
    Int den_;
    bool rational_ = true;
};

inline bool is_zero(const FieldElem& x) { return x.is_zero(); }

using KPoly = UPolyT<FieldElem>;

std::string to_string(const FieldElem& x);

}  // namespace qtoric
