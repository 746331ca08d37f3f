#include "qtoric/quasitoric/qtrel.hpp"

#include <algorithm>

namespace qtoric {

namespace {

TriPoly term(const QTRel& r, int i) { return r.h[i].pow(static_cast<unsigned>(r.type[i])) * r.F[i]; }

// k-th root of a constant, only when it is rational or 1.
std::optional<FieldElem> constant_root(const FieldElem& c, unsigned k) {
    if (c.is_one()) return c;
    if (!c.is_rational()) return std::nullopt;
    Rat r;
    if (!rat_root(c.rational_value(), k, r)) return std::nullopt;
    return FieldElem(r);
}

TriPoly as_constant_ratio(const TriPoly& num, const TriPoly& den, bool& ok) {
    auto q = try_divexact(num, den);
    ok = q && q->is_constant();
    return ok ? *q : TriPoly();
}

}  // namespace

TriPoly QTRel::sum() const {
    TriPoly s;
    for (int i = 0; i < 3; ++i) s += term(*this, i);
    return s;
}

std::string QTRel::type_string() const {
    return "(" + std::to_string(type[0]) + "," + std::to_string(type[1]) + "," + std::to_string(type[2]) + ")";
}

const char* elliptic_type_name(EllipticType t) {
    switch (t) {
        case EllipticType::T236: return "(2,3,6)";
        case EllipticType::T333: return "(3,3,3)";
        case EllipticType::T244: return "(2,4,4)";
        case EllipticType::T2222: return "(2,2,2,2)";
    }
    return "?";
}

std::optional<EllipticType> qt_elliptic_type(const std::vector<int>& m) {
    if (m.size() < 3) return std::nullopt;
    Rat s = 0;
    for (int v : m) {
        if (v < 2) return std::nullopt;
        s += Rat(1, v);
    }
    if (s != static_cast<long>(m.size()) - 2) return std::nullopt;
    std::vector<int> v = m;
    std::sort(v.begin(), v.end());
    if (v == std::vector<int>{2, 3, 6}) return EllipticType::T236;
    if (v == std::vector<int>{3, 3, 3}) return EllipticType::T333;
    if (v == std::vector<int>{2, 4, 4}) return EllipticType::T244;
    if (v == std::vector<int>{2, 2, 2, 2}) return EllipticType::T2222;
    return std::nullopt;
}

const char* qt_verdict_name(QTVerdict v) {
    switch (v) {
        case QTVerdict::Ok: return "ok";
        case QTVerdict::FailsSum: return "fails_sum";
        case QTVerdict::FailsDegrees: return "fails_degrees";
        case QTVerdict::NotHomogeneous: return "not_homogeneous";
    }
    return "?";
}

QTReport qt_verify(const QTRel& rel) {
    QTReport rep;
    rep.elliptic = qt_elliptic_type({rel.type[0], rel.type[1], rel.type[2]});
    for (int i = 0; i < 3; ++i) {
        if (rel.type[i] < 1) throw Error(ErrorKind::InvalidInput, "relation exponents must be positive");
        if ((!rel.F[i].is_zero() && !rel.F[i].is_homogeneous()) ||
            (!rel.h[i].is_zero() && !rel.h[i].is_homogeneous())) {
            rep.verdict = QTVerdict::NotHomogeneous;
            return rep;
        }
    }
    // zero terms carry no degree information
    for (int i = 0; i < 3; ++i) {
        if (rel.F[i].is_zero() || rel.h[i].is_zero()) continue;
        int k = rel.type[i] * rel.h[i].degree() + rel.F[i].degree();
        if (rep.kappa && *rep.kappa != k) {
            rep.verdict = QTVerdict::FailsDegrees;
            return rep;
        }
        rep.kappa = k;
    }
    if (rep.kappa && rep.elliptic) {
        Rat hs = 0, fs = 0;
        for (int i = 0; i < 3; ++i) {
            hs += rel.h[i].is_zero() ? 0 : rel.h[i].degree();
            fs += Rat(rel.F[i].is_zero() ? 0 : rel.F[i].degree()) / rel.type[i];
        }
        rep.omega = Rat(*rep.kappa) - hs;
        rep.omega_matches = *rep.omega == fs;
    }
    rep.residual = rel.sum();
    if (!rep.residual.is_zero()) rep.verdict = QTVerdict::FailsSum;
    return rep;
}

bool qt_equivalent(const QTRel& a, const QTRel& b) {
    if (a.type != b.type) throw Error(ErrorKind::IncompatibleTypes, a.type_string() + " vs " + b.type_string());
    std::array<TriPoly, 3> ta, tb;
    int pivot = -1;
    for (int i = 0; i < 3; ++i) {
        ta[i] = term(a, i);
        tb[i] = term(b, i);
        if (ta[i].is_zero() != tb[i].is_zero()) return false;
        if (pivot < 0 && !ta[i].is_zero()) pivot = i;
    }
    if (pivot < 0) return a.h[0] * a.h[1] * a.h[2] == b.h[0] * b.h[1] * b.h[2];
    // lambda = tb[pivot] / ta[pivot]
    const TriPoly &N = tb[pivot], &D = ta[pivot];
    for (int i = 0; i < 3; ++i)
        if (i != pivot && tb[i] * D != N * ta[i]) return false;
    return b.h[0] * b.h[1] * b.h[2] * D == N * (a.h[0] * a.h[1] * a.h[2]);
}

QTRel qt_normal_form_236(const QTRel& rel) {
    if (rel.type != std::array<int, 3>{2, 3, 6})
        throw Error(ErrorKind::IncompatibleTypes, "normal form needs type (2,3,6), got " + rel.type_string());
    const TriPoly &F1 = rel.F[0], &F2 = rel.F[1];
    QTRel out;
    out.type = rel.type;
    TriPoly F12 = F1 * F2;
    out.F = {TriPoly(1), TriPoly(1), F1.pow(3) * F2.pow(2) * rel.F[2]};
    out.h = {F12 * F1 * rel.h[0], F12 * rel.h[1], rel.h[2]};
    return out;
}

Section section_from_qt(const QTRel& rel, const CurveF& C) {
    if (rel.type != std::array<int, 3>{2, 3, 6})
        throw Error(ErrorKind::IncompatibleTypes, "sections need type (2,3,6), got " + rel.type_string());
    if (!rel.F[0].is_constant() || !rel.F[1].is_constant() || rel.F[0].is_zero() || rel.F[1].is_zero())
        throw Error(ErrorKind::RelationNotNormalized, "F1 and F2 must be nonzero constants");
    if (rel.h[2].is_zero()) throw Error(ErrorKind::RelationNotNormalized, "h3 must be nonzero");
    TriPoly F3 = rel.F[2].dehomogenize();
    bool ok = false;
    TriPoly nu = as_constant_ratio(-F3, C.affine, ok);
    if (!ok || nu.is_zero()) throw Error(ErrorKind::RelationNotNormalized, "F3 is not a constant multiple of -F");
    FieldElem inv = nu.constant_value().inverse();
    auto a = constant_root(rel.F[1].constant_value() * inv, 3);
    auto b = constant_root(rel.F[0].constant_value() * inv, 2);
    if (!a || !b) throw Error(ErrorKind::RelationNotNormalized, "constants are not cubes/squares in the field");
    Section s = Section::weighted(*a * rel.h[1].dehomogenize(), *b * rel.h[0].dehomogenize(), rel.h[2].dehomogenize());
    if (!on_curve(s, C)) throw Error(ErrorKind::NotOnCurve, "relation does not give a section of this curve");
    return reduce(s);
}

Section section_from_qt(const QTRel& rel) {
    TriPoly F = -rel.F[2];
    if (F.is_homogeneous() && F.degree() > 0 && F.degree() % 6 == 0) return section_from_qt(rel, CurveF::make(F));
    return section_from_qt(rel, CurveF::affine_chart(F.dehomogenize()));
}

QTRel qt_from_section(const Section& s, const CurveF& C) {
    if (C.k <= 0) throw Error(ErrorKind::InvalidInput, "relation needs a homogeneous F of degree 6k");
    if (s.is_infinity()) throw Error(ErrorKind::InvalidInput, "the section at infinity has no relation");
    if (!on_curve(s, C)) throw Error(ErrorKind::NotOnCurve, "section is not on the curve");
    Section r = reduce_full(s);
    const int k = C.k;
    auto deg = [](const TriPoly& p) { return std::max(p.degree(), 0); };
    int e = std::max({deg(r.h()), (deg(r.f()) + 1) / 2 - k, (deg(r.g()) + 2) / 3 - k, 0});
    QTRel rel;
    rel.type = {2, 3, 6};
    rel.h = {r.g().homogenize(3 * (e + k)), r.f().homogenize(2 * (e + k)), r.h().homogenize(e)};
    rel.F = {TriPoly(1), TriPoly(1), -C.F};
    return rel;
}

TriPoly kummer_pullback(const TriPoly& C, int m, const std::optional<std::array<TriPoly, 3>>& lines) {
    if (m < 1) throw Error(ErrorKind::InvalidInput, "Kummer exponent must be positive");
    std::array<TriPoly, 3> L = lines ? *lines : std::array<TriPoly, 3>{TriPoly::x(), TriPoly::y(), TriPoly::z()};
    // rows of M are the coefficient vectors of the lines
    std::array<std::array<FieldElem, 3>, 3> M, inv;
    for (int i = 0; i < 3; ++i) {
        if (!L[i].is_zero() && (!L[i].is_homogeneous() || L[i].degree() != 1))
            throw Error(ErrorKind::DegenerateLines, "lines must be linear forms");
        M[i] = {L[i].coeff(1, 0, 0), L[i].coeff(0, 1, 0), L[i].coeff(0, 0, 1)};
    }
    FieldElem det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                    M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                    M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    if (det.is_zero()) throw Error(ErrorKind::DegenerateLines, "lines are linearly dependent");
    FieldElem di = det.inverse();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r1 = (j + 1) % 3, r2 = (j + 2) % 3, c1 = (i + 1) % 3, c2 = (i + 2) % 3;
            inv[i][j] = (M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1]) * di;
        }
    const TriPoly P[3] = {TriPoly::x().pow(m), TriPoly::y().pow(m), TriPoly::z().pow(m)};
    std::array<TriPoly, 3> sub;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!inv[i][j].is_zero()) sub[i] += inv[i][j] * P[j];
    return C.substitute(sub[0], sub[1], sub[2]);
}

}  // namespace qtoric
