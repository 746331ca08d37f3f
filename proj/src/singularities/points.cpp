#include "qtoric/singularities/points.hpp"

#include <algorithm>
#include <cmath>

#include "qtoric/error.hpp"
#include "qtoric/multipoly/gcd.hpp"

namespace qtoric {

using numeric::Complex;
using numeric::Real;

namespace {

FieldPtr field_of(const KPoly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return c.field();
    return nullptr;
}

FieldPtr field_of(const FieldElem& x) { return x.is_rational() ? nullptr : x.field(); }

FieldPtr wider(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b) return a;
    return a->dim() >= b->dim() ? a : b;
}

std::vector<Complex> embed_coeffs(const KPoly& p) {
    numeric::Embedding E(field_of(p));
    std::vector<Complex> c;
    for (const auto& v : p.coeffs()) c.push_back(E(v));
    return c;
}

KPoly squarefree(const KPoly& g) {
    KPoly d = g.derivative();
    if (d.is_zero()) return g.monic();
    KPoly h = kpoly_gcd(g, d);
    return h.degree() > 0 ? divexact(g, h).monic() : g.monic();
}

// Field holding a primitive m-th root of unity next to `f`, if available.
FieldPtr with_root_of_unity(const FieldPtr& f, unsigned m) {
    if (!f) return NumberField::cyclotomic(m);
    if (f->n() % m == 0) return f;
    return nullptr;
}

std::optional<FieldElem> recognize(const Complex& z, const FieldPtr& field, const KPoly& g) {
    const unsigned bits = numeric::current_bits();
    Real tol = numeric::two_pow(-static_cast<int>(bits / 2));
    Int maxden = Int(1) << 64;
    auto check = [&](const FieldElem& x) -> std::optional<FieldElem> {
        if (g.eval(x).is_zero()) return x;
        return std::nullopt;
    };
    auto p = numeric::recognize_rational(z.re, maxden, tol);
    if (!p) return std::nullopt;
    if (abs(z.im) <= tol) {
        if (auto r = check(FieldElem(*p))) return r;
    }
    Real sqrt3 = sqrt(Real(3));
    if (FieldPtr f3 = with_root_of_unity(field, 3)) {
        if (auto q = numeric::recognize_rational(z.im / sqrt3, maxden, tol)) {
            // 2 w3 + 1 = sqrt(-3)
            FieldElem s = FieldElem::root_of_unity(f3, 3) * FieldElem(2) + FieldElem(1);
            if (auto r = check(FieldElem(*p) + FieldElem(*q) * s)) return r;
        }
    }
    if (FieldPtr f4 = with_root_of_unity(field, 4)) {
        if (auto q = numeric::recognize_rational(z.im, maxden, tol)) {
            if (auto r = check(FieldElem(*p) + FieldElem(*q) * FieldElem::root_of_unity(f4, 4))) return r;
        }
    }
    return std::nullopt;
}

Complex embed(const FieldElem& x) { return numeric::Embedding(field_of(x))(x); }

Real residual(const std::array<TriPoly, 4>& polys, const std::array<Complex, 3>& p, const numeric::Embedding& E) {
    Real m = 0;
    for (const auto& q : polys) m = std::max(m, numeric::eval(q, p[0], p[1], p[2], E).abs());
    return m;
}

double log2_of(const Real& r) {
    if (r == 0) return -HUGE_VAL;
    return static_cast<double>(log2(r));
}

void check_squarefree(const TriPoly& C, const std::array<TriPoly, 3>& d) {
    TriPoly g = C;
    for (const auto& p : d) {
        if (g.degree() <= 0) return;
        if (p.is_zero()) continue;
        g = poly_gcd(g, p);
    }
    if (g.degree() > 0) throw Error(ErrorKind::NotSquarefree, "curve has the repeated factor " + g.to_string());
}

KPoly fold_gcd(const std::vector<KPoly>& ps) {
    KPoly g;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.monic() : kpoly_gcd(g, p);
    }
    return g;
}

}  // namespace

KPoly to_kpoly(const TriPoly& p, Var v) {
    std::vector<FieldElem> c(std::max(0, p.degree_in(v) + 1));
    for (const auto& [key, val] : p.terms()) {
        Exp e = unpack(key);
        for (int i = 0; i < 3; ++i)
            if (i != static_cast<int>(v) && e[i] != 0) throw Error(ErrorKind::InvalidInput, "polynomial is not univariate");
        c[e[static_cast<int>(v)]] += val;
    }
    return KPoly(std::move(c));
}

std::vector<FieldElem> exact_roots(const KPoly& g, const FieldPtr& field, std::vector<Complex>* numeric_roots) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    KPoly s = squarefree(g);
    std::vector<FieldElem> out;
    if (s.degree() <= 0) return out;
    if (s.degree() == 1) {
        out.push_back(-s.coeff(0) / s.coeff(1));
        return out;
    }
    FieldPtr f = wider(field, field_of(s));
    for (const auto& z : numeric::poly_roots(embed_coeffs(s))) {
        if (auto x = recognize(z, f, s))
            out.push_back(*x);
        else if (numeric_roots)
            numeric_roots->push_back(z);
    }
    return out;
}

std::vector<FoundPoint> find_singular_points(const TriPoly& C, const SingularSearch& opt) {
    if (C.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero curve");
    if (!C.is_homogeneous()) throw Error(ErrorKind::InvalidInput, "curve must be homogeneous");
    std::vector<FoundPoint> out;
    if (C.degree() <= 1) return out;
    const std::array<TriPoly, 3> d = partials(C);
    check_squarefree(C, d);
    const std::array<TriPoly, 4> all = {C, d[0], d[1], d[2]};
    const FieldPtr ambient = opt.field ? opt.field : C.field();

    numeric::PrecisionScope scope(2 * opt.bits + 64);
    const Real accept = numeric::two_pow(-static_cast<int>(opt.bits / 2));
    const Real sep = numeric::two_pow(-static_cast<int>(opt.bits / 4));
    numeric::Embedding E(C.field());

    auto add_exact = [&](const FieldElem& x, const FieldElem& y, const FieldElem& z) {
        FoundPoint p;
        p.exact = true;
        p.coords = {x, y, z};
        p.approx = {embed(x), embed(y), embed(z)};
        p.residual_log2 = -HUGE_VAL;
        out.push_back(p);
    };
    auto add_numeric = [&](const std::array<Complex, 3>& a) {
        Real r = residual(all, a, E);
        if (r > accept) return;
        for (const auto& q : out) {
            Real dist = 0;
            for (int i = 0; i < 3; ++i) dist = std::max(dist, (q.approx[i] - a[i]).abs());
            if (dist < sep) return;
        }
        FoundPoint p;
        p.approx = a;
        p.residual_log2 = log2_of(r);
        out.push_back(p);
    };

    // chart z = 1
    const TriPoly f = C.dehomogenize(), fx = d[0].dehomogenize(), fy = d[1].dehomogenize();
    KPoly R = fold_gcd({to_kpoly(resultant(fx, fy, Var::Y), Var::X), to_kpoly(resultant(f, fx, Var::Y), Var::X),
                        to_kpoly(resultant(f, fy, Var::Y), Var::X)});
    if (R.is_zero()) throw Error(ErrorKind::UnsupportedShape, "elimination degenerated in the affine chart");
    if (R.degree() > 0) {
        std::vector<Complex> nx;
        for (const auto& x0 : exact_roots(R, ambient, &nx)) {
            KPoly G = fold_gcd({to_kpoly(f.set_var(Var::X, x0), Var::Y), to_kpoly(fx.set_var(Var::X, x0), Var::Y),
                                to_kpoly(fy.set_var(Var::X, x0), Var::Y)});
            if (G.is_zero()) throw Error(ErrorKind::NotSquarefree, "a vertical line is singular");
            if (G.degree() <= 0) continue;
            std::vector<Complex> ny;
            for (const auto& y0 : exact_roots(G, wider(ambient, field_of(x0)), &ny)) add_exact(x0, y0, FieldElem(1));
            for (const auto& y : ny) add_numeric({embed(x0), y, Complex(1)});
        }
        // candidates from every slice that does not vanish identically
        const std::vector<std::vector<TriPoly>> slices = {coefficients_in(f, Var::Y), coefficients_in(fx, Var::Y),
                                                          coefficients_in(fy, Var::Y)};
        for (const auto& x : nx)
            for (const auto& coeffs_y : slices) {
                std::vector<Complex> c;
                for (const auto& q : coeffs_y) c.push_back(numeric::eval(q, x, Complex(0), Complex(1), E));
                while (!c.empty() && c.back().abs() < accept) c.pop_back();
                if (c.size() < 2) continue;
                for (const auto& y : numeric::poly_roots(c)) add_numeric({x, y, Complex(1)});
            }
    }

    // line z = 0, chart y = 1
    {
        std::vector<KPoly> ps;
        for (const auto& p : all) ps.push_back(to_kpoly(p.set_var(Var::Y, FieldElem(1)).set_var(Var::Z, FieldElem(0)), Var::X));
        KPoly G = fold_gcd(ps);
        if (G.is_zero()) throw Error(ErrorKind::NotSquarefree, "the line z = 0 is singular");
        if (G.degree() > 0) {
            std::vector<Complex> nx;
            for (const auto& x0 : exact_roots(G, ambient, &nx)) add_exact(x0, FieldElem(1), FieldElem(0));
            for (const auto& x : nx) add_numeric({x, Complex(1), Complex(0)});
        }
    }

    // [1:0:0]
    {
        bool sing = true;
        for (const auto& p : all) sing = sing && p.eval(FieldElem(1), FieldElem(0), FieldElem(0)).is_zero();
        if (sing) add_exact(FieldElem(1), FieldElem(0), FieldElem(0));
    }

    std::stable_sort(out.begin(), out.end(), [](const FoundPoint& a, const FoundPoint& b) {
        for (int i = 2; i >= 0; --i) {
            if (a.approx[i].re != b.approx[i].re) return a.approx[i].re > b.approx[i].re;
            if (a.approx[i].im != b.approx[i].im) return a.approx[i].im < b.approx[i].im;
        }
        return false;
    });
    return out;
}

const char* node_cusp_name(NodeCusp c) {
    switch (c) {
        case NodeCusp::Node: return "node";
        case NodeCusp::Cusp: return "cusp";
        case NodeCusp::Other: return "other";
    }
    return "?";
}

bool is_singular_point(const TriPoly& C, const std::array<FieldElem, 3>& P) {
    if (P[0].is_zero() && P[1].is_zero() && P[2].is_zero()) throw Error(ErrorKind::InvalidInput, "[0:0:0] is not a point");
    if (!C.eval(P[0], P[1], P[2]).is_zero()) return false;
    for (const auto& q : partials(C))
        if (!q.eval(P[0], P[1], P[2]).is_zero()) return false;
    return true;
}

NodeCusp classify_node_cusp(const TriPoly& C, const std::array<FieldElem, 3>& P) {
    if (!is_singular_point(C, P)) throw Error(ErrorKind::NotSingular, "point is not singular on the curve");
    int idx = !P[2].is_zero() ? 2 : !P[1].is_zero() ? 1 : 0;
    FieldElem inv = P[idx].inverse();
    std::array<TriPoly, 3> sub;
    const Var vars[3] = {Var::X, Var::Y, Var::Z};
    for (int i = 0; i < 3; ++i) {
        sub[i] = TriPoly::var(vars[i]);
        if (i != idx && !P[i].is_zero()) sub[i] += (P[i] * inv) * TriPoly::var(vars[idx]);
    }
    TriPoly g = C.substitute(sub[0], sub[1], sub[2]).set_var(vars[idx], FieldElem(1));
    int o1 = idx == 0 ? 1 : 0, o2 = idx == 2 ? 1 : 2;
    auto coeff = [&](int i, int j) {
        Exp e = {0, 0, 0};
        e[o1] = i;
        e[o2] = j;
        return g.coeff(e[0], e[1], e[2]);
    };
    FieldElem a = coeff(2, 0), b = coeff(1, 1), c = coeff(0, 2);
    if (a.is_zero() && b.is_zero() && c.is_zero()) return NodeCusp::Other;
    if (!(b * b - FieldElem(4) * a * c).is_zero()) return NodeCusp::Node;
    // kernel direction of the rank-one quadratic form
    FieldElem v1 = FieldElem(1), v2 = FieldElem(0);
    if (!a.is_zero()) {
        v1 = -b;
        v2 = FieldElem(2) * a;
    }
    FieldElem c3;
    for (int i = 0; i <= 3; ++i) c3 += coeff(i, 3 - i) * v1.pow(i) * v2.pow(3 - i);
    return c3.is_zero() ? NodeCusp::Other : NodeCusp::Cusp;
}

}  // namespace qtoric
