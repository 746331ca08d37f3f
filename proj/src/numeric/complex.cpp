#include "qtoric/numeric/complex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qtoric/error.hpp"

namespace qtoric::numeric {

namespace {

unsigned bits_to_digits(unsigned bits) { return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1; }

Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits) : prev_(Real::default_precision()) {
    Real::default_precision(bits_to_digits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(prev_); }

unsigned current_bits() {
    return static_cast<unsigned>(std::floor(Real::default_precision() / 0.30103));
}

Real two_pow(int e) {
    Real r = 1;
    mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
    return r;
}

Real to_real(const Int& v) {
    Real r;
    mpfr_set_z(r.backend().data(), v.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real to_real(const Rat& v) {
    Real r;
    mpfr_set_q(r.backend().data(), v.get_mpq_t(), MPFR_RNDN);
    return r;
}

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.norm2();
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "complex division by zero");
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
}

Real Complex::abs() const { return boost::multiprecision::hypot(re, im); }

Complex Complex::pow(unsigned e) const {
    Complex r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::string Complex::to_string(int digits) const {
    std::ostringstream os;
    os.precision(digits);
    os << re;
    if (im >= 0) os << "+";
    os << im << "*i";
    return os.str();
}

Complex polar(const Real& r, const Real& theta) { return Complex(r * cos(theta), r * sin(theta)); }

Complex root(const Complex& z, unsigned k) {
    if (k == 0) throw Error(ErrorKind::InvalidInput, "zeroth root");
    Real r = z.abs();
    if (r == 0) return Complex();
    Real th = atan2(z.im, z.re);
    return polar(pow(r, Real(1) / Real(k)), th / Real(k));
}

Complex unit_root(unsigned n, long j) {
    long jj = ((j % static_cast<long>(n)) + n) % n;
    if (jj == 0) return Complex(1);
    // exact values for the usual small orders keep the recognition step clean
    if (4 * jj == static_cast<long>(n)) return Complex(Real(0), Real(1));
    if (2 * jj == static_cast<long>(n)) return Complex(-1);
    if (4 * jj == 3 * static_cast<long>(n)) return Complex(Real(0), Real(-1));
    return polar(Real(1), 2 * pi() * Real(jj) / Real(n));
}

Embedding::Embedding(FieldPtr f) : f_(std::move(f)) {
    if (!f_) {
        apow_ = {Complex(1)};
        bpow_ = {Complex(1)};
        return;
    }
    int d0 = f_->base_degree(), k = f_->radical_degree();
    Complex a = unit_root(f_->n(), 1);
    apow_.resize(d0);
    apow_[0] = Complex(1);
    for (int i = 1; i < d0; ++i) apow_[i] = apow_[i - 1] * a;
    bpow_.assign(k, Complex(1));
    if (k > 1) {
        Complex r;
        const auto& rc = f_->spec().radical->r;
        for (size_t i = 0; i < rc.size(); ++i) r += Complex(to_real(rc[i])) * apow_[i];
        Complex b = root(r, static_cast<unsigned>(k));
        for (int j = 1; j < k; ++j) bpow_[j] = bpow_[j - 1] * b;
    }
}

Complex Embedding::operator()(const FieldElem& x) const {
    if (x.is_rational()) return Complex(to_real(x.rational_value()));
    int d0 = static_cast<int>(apow_.size()), k = static_cast<int>(bpow_.size());
    if (x.dim() != d0 * k) throw Error(ErrorKind::IncompatibleField, "element does not belong to the embedded field");
    const auto& num = x.numerators();
    Complex s;
    for (int j = 0; j < k; ++j) {
        Complex t;
        for (int i = 0; i < d0; ++i)
            if (num[j * d0 + i] != 0) t += Complex(to_real(num[j * d0 + i])) * apow_[i];
        s += t * bpow_[j];
    }
    Real den = to_real(x.denominator());
    return Complex(s.re / den, s.im / den);
}

Complex eval(const TriPoly& p, const Complex& x, const Complex& y, const Complex& z, const Embedding& E) {
    Complex s;
    for (const auto& [key, c] : p.terms()) {
        Exp e = unpack(key);
        s += E(c) * x.pow(e[0]) * y.pow(e[1]) * z.pow(e[2]);
    }
    return s;
}

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && c.back().norm2() == 0) c.pop_back();
    if (c.empty()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return {};
    Complex lead = c.back();
    for (auto& v : c) v /= lead;
    // Cauchy bound for the starting circle
    Real bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, c[i].abs());
    bound += 1;
    Real rad = bound / 2;
    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i) z[i] = polar(rad, 2 * pi() * (Real(i) + Real(0.4)) / Real(n));
    auto horner = [&](const Complex& x, Complex& p, Complex& dp) {
        p = c[n];
        dp = Complex();
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + c[i];
        }
    };
    const unsigned bits = current_bits();
    Real tol = two_pow(-static_cast<int>(bits) + 8);
    std::vector<bool> done(n, false);
    for (int it = 0; it < 20 * static_cast<int>(bits) + 200; ++it) {
        bool all = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            Complex p, dp;
            horner(z[i], p, dp);
            if (p.norm2() == 0) {
                done[i] = true;
                continue;
            }
            Complex ratio = p / dp;
            Complex s;
            for (int j = 0; j < n; ++j)
                if (j != i) s += Complex(1) / (z[i] - z[j]);
            Complex w = ratio / (Complex(1) - ratio * s);
            z[i] -= w;
            Real scale = std::max(Real(1), z[i].abs());
            if (w.abs() <= tol * scale)
                done[i] = true;
            else
                all = false;
        }
        if (all) break;
    }
    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return z;
}

std::optional<Rat> recognize_rational(const Real& x, const Int& max_den, const Real& tol) {
    // convergents h/k of the continued fraction of x
    Int h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    Real r = x;
    for (int it = 0; it < 400; ++it) {
        Int a;
        Real fl = floor(r);
        mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDN);
        Int h2 = a * h0 + h1, k2 = a * k0 + k1;
        if (k2 > max_den) break;
        h1 = h0;
        h0 = h2;
        k1 = k0;
        k0 = k2;
        Rat q(h0, k0);
        q.canonicalize();
        if (abs(x - to_real(q)) <= tol) return q;
        Real frac = r - fl;
        if (frac == 0) break;
        r = Real(1) / frac;
    }
    return std::nullopt;
}

}  // namespace qtoric::numeric
