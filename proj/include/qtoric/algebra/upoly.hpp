#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/algebra/rational.hpp"
#include "qtoric/error.hpp"

namespace qtoric {

namespace detail {
template <class T>
bool coeff_is_zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail

// Dense univariate polynomial over a field T, lowest degree first.
// T() must be the zero element and T(long) an integer constant.
template <class T>
class UPolyT {
public:
    UPolyT() = default;
    explicit UPolyT(std::vector<T> c) : c_(std::move(c)) { trim(); }
    UPolyT(std::initializer_list<T> c) : c_(c) { trim(); }

    static UPolyT constant(const T& v) { return UPolyT(std::vector<T>{v}); }
    static UPolyT monomial(const T& v, int deg) {
        std::vector<T> c(deg + 1);
        c[deg] = v;
        return UPolyT(std::move(c));
    }
    // t - r
    static UPolyT linear_root(const T& r) { return UPolyT(std::vector<T>{-r, T(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(); }
    const std::vector<T>& coeffs() const { return c_; }
    const T& lead() const { return c_.back(); }

    UPolyT& operator+=(const UPolyT& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    UPolyT& operator-=(const UPolyT& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend UPolyT operator+(UPolyT a, const UPolyT& b) { return a += b; }
    friend UPolyT operator-(UPolyT a, const UPolyT& b) { return a -= b; }
    friend UPolyT operator-(const UPolyT& a) {
        std::vector<T> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
        return UPolyT(std::move(c));
    }
    friend UPolyT operator*(const UPolyT& a, const UPolyT& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return UPolyT(std::move(c));
    }
    friend UPolyT operator*(const T& s, const UPolyT& a) {
        std::vector<T> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
        return UPolyT(std::move(c));
    }
    UPolyT& operator*=(const UPolyT& o) { return *this = *this * o; }
    friend bool operator==(const UPolyT& a, const UPolyT& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPolyT& a, const UPolyT& b) { return !(a == b); }

    T eval(const T& x) const {
        T acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UPolyT derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = T(static_cast<long>(i)) * c_[i];
        return UPolyT(std::move(c));
    }

    UPolyT monic() const {
        if (is_zero()) return {};
        T inv = T(1) / lead();
        return inv * *this;
    }

    UPolyT pow(unsigned e) const {
        UPolyT r = constant(T(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
std::pair<UPolyT<T>, UPolyT<T>> divmod(const UPolyT<T>& f, const UPolyT<T>& g) {
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    int dg = g.degree();
    if (f.degree() < dg) return {UPolyT<T>(), f};
    std::vector<T> r = f.coeffs();
    std::vector<T> q(f.degree() - dg + 1);
    T inv = T(1) / g.lead();
    const auto& gc = g.coeffs();
    for (int i = f.degree(); i >= dg; --i) {
        if (detail::coeff_is_zero(r[i])) continue;
        T c = r[i] * inv;
        q[i - dg] = c;
        for (int j = 0; j <= dg; ++j) r[i - dg + j] = r[i - dg + j] - c * gc[j];
    }
    r.resize(dg);
    return {UPolyT<T>(std::move(q)), UPolyT<T>(std::move(r))};
}

template <class T>
std::optional<UPolyT<T>> try_divexact(const UPolyT<T>& f, const UPolyT<T>& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

template <class T>
UPolyT<T> divexact(const UPolyT<T>& f, const UPolyT<T>& g) {
    auto q = try_divexact(f, g);
    if (!q) throw Error(ErrorKind::NotDivisible, "polynomial division leaves a remainder");
    return *q;
}

// true iff g divides f
template <class T>
bool divides(const UPolyT<T>& g, const UPolyT<T>& f) {
    return divmod(f, g).second.is_zero();
}

// Monic gcd; gcd(0,0) = 0.
template <class T>
UPolyT<T> gcd(UPolyT<T> a, UPolyT<T> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
std::tuple<UPolyT<T>, UPolyT<T>, UPolyT<T>> ext_gcd(const UPolyT<T>& a, const UPolyT<T>& b) {
    UPolyT<T> r0 = a, r1 = b;
    UPolyT<T> s0 = UPolyT<T>::constant(T(1)), s1;
    UPolyT<T> t0, t1 = UPolyT<T>::constant(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    T inv = T(1) / r0.lead();
    return {inv * r0, inv * s0, inv * t0};
}

using UPoly = UPolyT<Rat>;

UPoly cyclotomic_polynomial(unsigned n);

// "t^2 - t + 1"
std::string to_string(const UPoly& p, const std::string& var = "t");

// Monic roots-of-unity test: every root of p is a delta-th root of unity.
bool all_roots_are_roots_of_unity(const UPoly& p, unsigned delta);

}  // namespace qtoric
