#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <vector>

#include "qtoric/algebra/number_field.hpp"
#include "qtoric/multipoly/tripoly.hpp"

namespace qtoric::numeric {

using Real = boost::multiprecision::mpfr_float;

// Sets the working precision (in bits) of newly created Reals; restores on exit.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned prev_;
};

unsigned current_bits();
Real two_pow(int e);
Real to_real(const Int& v);
Real to_real(const Rat& v);

struct Complex {
    Real re, im;
    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(long v) : re(v), im(0) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    Complex operator-() const { return Complex(-re, -im); }
    Complex conj() const { return Complex(re, -im); }
    Real norm2() const { return re * re + im * im; }
    Real abs() const;
    Complex pow(unsigned e) const;
    std::string to_string(int digits = 20) const;
};

Complex polar(const Real& r, const Real& theta);
// Principal k-th root.
Complex root(const Complex& z, unsigned k);
Complex unit_root(unsigned n, long j);  // exp(2 pi i j / n)

// Complex embedding of a field: a -> exp(2 pi i / n), b -> principal k-th root of r(a).
class Embedding {
public:
    explicit Embedding(FieldPtr f);
    Complex operator()(const FieldElem& x) const;
    const FieldPtr& field() const { return f_; }

private:
    FieldPtr f_;
    std::vector<Complex> apow_, bpow_;
};

Complex eval(const TriPoly& p, const Complex& x, const Complex& y, const Complex& z, const Embedding& E);

// All complex roots of a polynomial given by coefficients (lowest degree first), by Aberth iteration.
// Roots are refined until the correction falls below 2^-(bits - 8) relative to the root size.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);

// Continued-fraction recognition of x as p/q with q <= max_den and |x - p/q| <= tol.
std::optional<Rat> recognize_rational(const Real& x, const Int& max_den, const Real& tol);

}  // namespace qtoric::numeric
