#include "qtoric/mw/section.hpp"

#include <algorithm>
#include <climits>

#include "qtoric/multipoly/gcd.hpp"

namespace qtoric {

namespace {

void require_xy(const TriPoly& p, const char* what) {
    if (!p.is_free_of(Var::Z))
        throw Error(ErrorKind::InvalidInput, std::string(what) + " must be a polynomial in x, y");
}

int valuation(const TriPoly& p, Var v) { return p.is_zero() ? INT_MAX : p.min_degree_in(v); }

Section checked(const Section& s, const CurveF& C, const GroupOptions& opt, const char* op) {
    if (opt.check_closure && !on_curve(s, C))
        throw Error(ErrorKind::NotOnCurve, std::string(op) + " produced a point off the curve");
    return s;
}

void require_on_curve(const Section& s, const CurveF& C, const char* op) {
    if (!on_curve(s, C)) throw Error(ErrorKind::NotOnCurve, std::string(op) + ": section is not on the curve");
}

TriPoly square(const TriPoly& p) { return p * p; }

}  // namespace

CurveF CurveF::make(const TriPoly& F, const FieldPtr& field) {
    if (F.is_zero() || !F.is_homogeneous() || F.degree() % 6 != 0 || F.degree() == 0)
        throw Error(ErrorKind::InvalidInput, "F must be homogeneous of degree 6k, k > 0");
    CurveF c;
    c.F = F;
    c.affine = F.dehomogenize();
    c.k = F.degree() / 6;
    c.field = field ? field : F.field();
    return c;
}

CurveF CurveF::affine_chart(const TriPoly& Fa, const FieldPtr& field) {
    require_xy(Fa, "F");
    CurveF c;
    c.F = Fa;
    c.affine = Fa;
    c.k = 0;
    c.field = field ? field : Fa.field();
    return c;
}

Section Section::weighted(TriPoly f, TriPoly g, TriPoly h) {
    require_xy(f, "f");
    require_xy(g, "g");
    require_xy(h, "h");
    if (h.is_zero()) throw Error(ErrorKind::DivisionByZero, "section with zero denominator");
    Section s;
    s.inf_ = false;
    s.f_ = std::move(f);
    s.g_ = std::move(g);
    s.h_ = std::move(h);
    return s;
}

Section Section::from_ratfuncs(const RatFunc& A, const RatFunc& B) {
    const TriPoly &p = A.den(), &q = B.den();
    if (p.is_constant() && q.is_constant()) {
        return weighted(p.constant_value().inverse() * A.num(), q.constant_value().inverse() * B.num(),
                        TriPoly(FieldElem(1)));
    }
    // h = p q makes both A h^2 and B h^3 polynomial
    TriPoly q2 = square(q);
    Section s = weighted(A.num() * p * q2, B.num() * p.pow(3) * q2, p * q);
    return reduce_full(s);
}

Section Section::make(const RatFunc& A, const RatFunc& B, const CurveF& C) {
    if (!ratfunc_eq(A.pow(3) + B.pow(2), RatFunc(C.affine)))
        throw Error(ErrorKind::NotOnCurve, "A^3 + B^2 != F");
    return from_ratfuncs(A, B);
}

RatFunc Section::A() const {
    if (inf_) throw Error(ErrorKind::InvalidInput, "the section at infinity has no coordinates");
    return RatFunc(f_, square(h_));
}

RatFunc Section::B() const {
    if (inf_) throw Error(ErrorKind::InvalidInput, "the section at infinity has no coordinates");
    return RatFunc(g_, h_.pow(3));
}

std::string Section::to_string() const {
    if (inf_) return "Infinity";
    return "A = " + A().to_string() + ", B = " + B().to_string();
}

bool on_curve(const Section& s, const CurveF& C) {
    if (s.is_infinity()) return true;
    return s.f().pow(3) + square(s.g()) == C.affine * s.h().pow(6);
}

bool section_eq(const Section& a, const Section& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
    TriPoly a2 = square(a.h()), b2 = square(b.h());
    if (a.f() * b2 != b.f() * a2) return false;
    return a.g() * b2 * b.h() == b.g() * a2 * a.h();
}

Section reduce_full(const Section& s) {
    if (s.is_infinity()) return s;
    TriPoly f = s.f(), g = s.g(), h = s.h();
    if (!h.is_constant()) {
        TriPoly h2 = square(h), h3 = h2 * h;
        TriPoly a, p, b, q;
        if (!f.is_zero()) {
            TriPoly G2 = poly_gcd(f, h2);
            a = divexact(f, G2);
            p = divexact(h2, G2);
        }
        if (!g.is_zero()) {
            TriPoly G3 = poly_gcd(g, h3);
            b = divexact(g, G3);
            q = divexact(h3, G3);
        }
        if (f.is_zero() || g.is_zero()) {
            // then A or B alone is a polynomial up to a constant
            const TriPoly& den = f.is_zero() ? q : p;
            if (den.is_constant()) {
                FieldElem inv = den.constant_value().inverse();
                return Section::weighted(f.is_zero() ? TriPoly() : inv * a, g.is_zero() ? TriPoly() : inv * b,
                                         TriPoly(FieldElem(1)));
            }
        } else if (p.is_constant() && q.is_constant()) {
            return Section::weighted(p.constant_value().inverse() * a, q.constant_value().inverse() * b,
                                     TriPoly(FieldElem(1)));
        } else if (auto hn = try_divexact(q, p)) {
            TriPoly hh = square(*hn);
            auto fn = try_divexact(a * hh, p);
            auto gn = try_divexact(b * hh * *hn, q);
            if (fn && gn) {
                FieldElem lam = hn->lead_term().second.inverse();
                FieldElem lam2 = lam * lam;
                return Section::weighted(lam2 * *fn, lam2 * lam * *gn, lam * *hn);
            }
        }
    }
    return reduce(s, NormalizePolicy::never());
}

Section reduce(const Section& s, const NormalizePolicy& policy) {
    if (s.is_infinity()) return s;
    if (s.size() > policy.threshold) return reduce_full(s);
    Exp m{0, 0, 0};
    for (int i = 0; i < 2; ++i) {
        Var v = static_cast<Var>(i);
        int e = std::min({valuation(s.h(), v), valuation(s.f(), v) / 2, valuation(s.g(), v) / 3});
        m[i] = e == INT_MAX ? 0 : e;
    }
    TriPoly f = s.f(), g = s.g(), h = s.h();
    if (m[0] > 0 || m[1] > 0) {
        h = h.divide_monomial(m);
        f = f.divide_monomial({2 * m[0], 2 * m[1], 0});
        g = g.divide_monomial({3 * m[0], 3 * m[1], 0});
    }
    FieldElem lam = h.lead_term().second.inverse();
    if (!lam.is_one()) {
        FieldElem lam2 = lam * lam;
        f = lam2 * f;
        g = (lam2 * lam) * g;
        h = lam * h;
    }
    return Section::weighted(std::move(f), std::move(g), std::move(h));
}

Section negate(const Section& s, const CurveF& C) {
    require_on_curve(s, C, "negate");
    if (s.is_infinity()) return s;
    return Section::weighted(s.f(), -s.g(), s.h());
}

Section double_section(const Section& s, const CurveF& C, const GroupOptions& opt) {
    require_on_curve(s, C, "double");
    if (s.is_infinity() || s.g().is_zero()) return Section::infinity();
    const TriPoly &u = s.f(), &w = s.g();
    TriPoly u3 = u.pow(3), w2 = square(w);
    TriPoly X = -(u * (FieldElem(9) * u3 + FieldElem(8) * w2));
    TriPoly Y = -(FieldElem(27) * square(u3) + FieldElem(36) * u3 * w2 + FieldElem(8) * square(w2));
    TriPoly Z = FieldElem(2) * w * s.h();
    return checked(reduce(Section::weighted(std::move(X), std::move(Y), std::move(Z)), opt.policy), C, opt,
                   "double");
}

Section add(const Section& a, const Section& b, const CurveF& C, const GroupOptions& opt) {
    require_on_curve(a, C, "add");
    require_on_curve(b, C, "add");
    if (a.is_infinity()) return b;
    if (b.is_infinity()) return a;
    TriPoly h1s = square(a.h()), h2s = square(b.h());
    TriPoly u1 = a.f() * h2s, u2 = b.f() * h1s;
    TriPoly s1 = a.g() * h2s * b.h(), s2 = b.g() * h1s * a.h();
    TriPoly W = u1 - u2;
    if (W.is_zero()) {
        if (s1 == s2) return double_section(a, C, opt);
        return Section::infinity();
    }
    TriPoly H = a.h() * b.h();
    TriPoly FH6 = C.affine * square(H.pow(3));
    TriPoly u12 = u1 * u2, s12 = s1 * s2;
    TriPoly X = u12 * (u1 + u2) + FieldElem(2) * s12 - FieldElem(2) * FH6;
    TriPoly Y = (s2 - s1) * (X - u1 * square(W)) - s1 * W.pow(3);
    TriPoly Z = H * W;
    return checked(reduce(Section::weighted(std::move(X), std::move(Y), std::move(Z)), opt.policy), C, opt, "add");
}

Section omega_action(const Section& s, const CurveF& C) {
    require_on_curve(s, C, "omega");
    if (!C.field) throw Error(ErrorKind::FieldLacksRoot, "w3 is not in Q");
    FieldElem w3 = FieldElem::root_of_unity(C.field, 3);
    if (s.is_infinity()) return s;
    return Section::weighted(w3 * s.f(), -s.g(), s.h());
}

Section int_scalar(long n, const Section& s, const CurveF& C, const GroupOptions& opt) {
    if (n < 0) return int_scalar(-n, negate(s, C), C, opt);
    Section r = Section::infinity();
    if (n == 0) return r;
    int top = 63;
    while (!((n >> top) & 1)) --top;
    for (int i = top; i >= 0; --i) {
        r = double_section(r, C, opt);
        if ((n >> i) & 1) r = add(r, s, C, opt);
    }
    return r;
}

Section zomega_scalar(long a, long b, const Section& s, const CurveF& C, const GroupOptions& opt) {
    Section left = int_scalar(a, s, C, opt);
    if (b == 0) return left;
    Section right = int_scalar(b, omega_action(s, C), C, opt);
    return add(left, right, C, opt);
}

int mw_rank_from_alexander(const AlexPoly& delta) {
    if (delta.extra.degree() > 0)
        throw Error(ErrorKind::UnsupportedShape, "Alexander polynomial has factors other than Phi_6");
    for (const auto& [k, s] : delta.cyclo)
        if (k != 6 && s != 0)
            throw Error(ErrorKind::UnsupportedShape, "Alexander polynomial has factors other than Phi_6");
    return 2 * delta.s(6);
}

}  // namespace qtoric
