#include <doctest.h>

#include "qtoric/cli/parser.hpp"
#include "qtoric/multipoly/gcd.hpp"
#include "qtoric/quasitoric/qtrel.hpp"
#include "support.hpp"

using namespace qtoric;
using qtoric::testing::random_tripoly;

namespace {

const FieldPtr Q6 = NumberField::cyclotomic(6);
const FieldPtr K4 = NumberField::make(FieldSpec::with_radical(6, 3, Rat(4)));

TriPoly P(const std::string& s, const FieldPtr& f = Q6) { return parse_expression(s, f); }

QTRel rel(std::array<int, 3> type, std::array<TriPoly, 3> F, std::array<TriPoly, 3> h) {
    QTRel r;
    r.type = type;
    r.F = std::move(F);
    r.h = std::move(h);
    return r;
}

// Homogeneous q2, q3 with F = q2^3 + q3^2 and the section (q2, q3) in the chart z = 1.
struct Torus {
    TriPoly q2, q3;
    CurveF C;
    Section s;
};

Torus random_torus(std::mt19937_64& rng) {
    TriPoly q2, q3;
    while (q2.is_zero() || q3.is_zero()) {
        q2 = random_tripoly(rng, Q6, 3, 2, 2);
        q3 = random_tripoly(rng, Q6, 3, 3, 3);
    }
    CurveF C = CurveF::make(q2.pow(3) + q3.pow(2), Q6);
    return {q2, q3, C, Section::weighted(q2.dehomogenize(), q3.dehomogenize(), TriPoly(1))};
}

bool proportional(const TriPoly& a, const TriPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.monic() == b.monic();
}

}  // namespace

TEST_CASE("elliptic types") {
    CHECK(qt_elliptic_type({2, 3, 6}) == EllipticType::T236);
    CHECK(qt_elliptic_type({6, 2, 3}) == EllipticType::T236);
    CHECK(qt_elliptic_type({3, 3, 3}) == EllipticType::T333);
    CHECK(qt_elliptic_type({4, 2, 4}) == EllipticType::T244);
    CHECK(qt_elliptic_type({2, 2, 2, 2}) == EllipticType::T2222);
    CHECK_FALSE(qt_elliptic_type({2, 3, 7}));
    CHECK_FALSE(qt_elliptic_type({2, 3, 5}));
    CHECK_FALSE(qt_elliptic_type({1, 3, 6}));
    // brute force over small triples: Sum 1/m = 1 only for the three listed types
    int found = 0;
    for (int p = 2; p <= 12; ++p)
        for (int q = p; q <= 12; ++q)
            for (int r = q; r <= 12; ++r)
                if (Rat(1, p) + Rat(1, q) + Rat(1, r) == 1) {
                    ++found;
                    CHECK(qt_elliptic_type({p, q, r}));
                }
    CHECK(found == 3);
}

TEST_CASE("verify: Fermat-type (3,3,3) relation") {
    QTRel r = rel({3, 3, 3}, {P("y^3-z^3"), P("z^3-x^3"), P("x^3-y^3")}, {P("x"), P("y"), P("z")});
    QTReport rep = qt_verify(r);
    CHECK(rep.verdict == QTVerdict::Ok);
    CHECK(*rep.kappa == 6);
    CHECK(*rep.omega == 3);
    CHECK(rep.omega_matches);
}

TEST_CASE("verify: sextic with nine cusps over the cube root of 4") {
    TriPoly C2 = P("x^2+y^2+z^2-2*(x*y+x*z+y*z)", K4);
    TriPoly C69 = C2.substitute(P("x^3", K4), P("y^3", K4), P("z^3", K4));
    QTRel r = rel({2, 3, 6}, {TriPoly(1), TriPoly(1), -C69}, {P("-x^3+y^3-z^3", K4), P("-rad*x*z", K4), TriPoly(1)});
    QTReport rep = qt_verify(r);
    CHECK(rep.verdict == QTVerdict::Ok);
    CHECK(*rep.kappa == 6);
    // the same relation with a wrong sign is caught
    r.h[0] = P("x^3+y^3-z^3", K4);
    CHECK(qt_verify(r).verdict == QTVerdict::FailsSum);
}

TEST_CASE("verify: (2,4,4) relation variants") {
    TriPoly C4 = P("2*x*y^3+3*x^2*y^2+108*y^2*z^2-x^4");
    TriPoly C2 = P("3*x^2+2*x*y+108*z^2");
    QTRel printed = rel({2, 4, 4}, {C2, TriPoly(1), -C4}, {P("y"), P("x"), TriPoly(1)});
    QTReport rp = qt_verify(printed);
    CHECK(rp.verdict == QTVerdict::FailsSum);
    CHECK(rp.residual == P("2*x^4"));
    QTRel fixed = rel({2, 4, 4}, {C2, TriPoly(-1), -C4}, {P("y"), P("x"), TriPoly(1)});
    CHECK(qt_verify(fixed).verdict == QTVerdict::Ok);
}

TEST_CASE("verify: degree and homogeneity failures") {
    QTRel r = rel({2, 3, 6}, {TriPoly(1), TriPoly(1), TriPoly(-2)}, {P("x^3"), P("x^2"), P("x")});
    CHECK(qt_verify(r).verdict == QTVerdict::Ok);
    r.h[2] = P("x^2");
    CHECK(qt_verify(r).verdict == QTVerdict::FailsDegrees);
    r.h[2] = P("x+1");
    CHECK(qt_verify(r).verdict == QTVerdict::NotHomogeneous);
}

TEST_CASE("equivalence and (2,3,6) normal form") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 10; ++it) {
        TriPoly F1 = random_tripoly(rng, Q6, 2, 1, 1), F2 = random_tripoly(rng, Q6, 2, 2, 2);
        TriPoly h1 = random_tripoly(rng, Q6, 2, 2, 2), h2 = random_tripoly(rng, Q6, 2, 1, 1);
        if (F1.is_zero() || F2.is_zero() || h1.is_zero() || h2.is_zero()) continue;
        // F3 h3^6 = -(F1 h1^2 + F2 h2^3) with h3 = 1
        TriPoly F3 = -(F1 * h1.pow(2) + F2 * h2.pow(3));
        QTRel r = rel({2, 3, 6}, {F1, F2, F3}, {h1, h2, TriPoly(1)});
        REQUIRE(qt_verify(r).verdict == QTVerdict::Ok);
        CHECK(qt_equivalent(r, r));
        QTRel n = qt_normal_form_236(r);
        CHECK(qt_verify(n).verdict == QTVerdict::Ok);
        CHECK(n.F[0] == TriPoly(1));
        CHECK(n.F[1] == TriPoly(1));
        CHECK(n.F[2] == F3 * F2.pow(2) * F1.pow(3));
        CHECK(qt_equivalent(r, n));
        CHECK(qt_equivalent(n, r));
        CHECK(qt_normal_form_236(n).F == n.F);
        // a relation with a different support
        QTRel other = rel({2, 3, 6}, {TriPoly(1), TriPoly(1), -(h1.pow(2) + h2.pow(3))}, {h1, h2, TriPoly(1)});
        CHECK_FALSE(qt_equivalent(r, other));
    }
    QTRel a = rel({3, 3, 3}, {P("y^3-z^3"), P("z^3-x^3"), P("x^3-y^3")}, {P("x"), P("y"), P("z")});
    QTRel b = rel({2, 3, 6}, {TriPoly(1), TriPoly(1), TriPoly(-1)}, {P("x^3"), P("x^2"), P("x")});
    CHECK_THROWS_AS(qt_equivalent(a, b), Error);
    CHECK_THROWS_AS(qt_normal_form_236(a), Error);
}

TEST_CASE("normal form of the tricuspidal quartic relation") {
    TriPoly C43 = P("x^2*y^2+y^2*z^2+z^2*x^2-2*x*y*z*(x+y+z)");
    TriPoly L0 = P("x+y+z");
    TriPoly C2 = P("z*x + w3*y*z - (1+w3)*x*y");
    TriPoly C3 = P("x^2*y-x^2*z-y^2*x-3*(1+2*w3)*x*y*z+y^2*z+z^2*x-y*z^2");
    QTRel r = rel({2, 3, 6}, {TriPoly(1), TriPoly(4), -(C43 * L0.pow(2))}, {C3, C2, TriPoly(1)});
    REQUIRE(qt_verify(r).verdict == QTVerdict::Ok);
    QTRel n = qt_normal_form_236(r);
    CHECK(qt_verify(n).verdict == QTVerdict::Ok);
    CHECK(qt_equivalent(r, n));
    CHECK(n.F[2] == FieldElem(-16) * C43 * L0.pow(2));
    Section s = section_from_qt(n);
    CHECK(on_curve(s, CurveF::make(FieldElem(16) * C43 * L0.pow(2), Q6)));
}

TEST_CASE("section from relation") {
    QTRel triv = rel({2, 3, 6}, {TriPoly(1), TriPoly(1), TriPoly(-1)}, {TriPoly(1), TriPoly(), TriPoly(1)});
    Section s = section_from_qt(triv, CurveF::affine_chart(TriPoly(1)));
    CHECK(s.f().is_zero());
    CHECK(s.g() == TriPoly(1));

    TriPoly C2 = P("x^2+y^2+z^2-2*(x*y+x*z+y*z)", K4);
    TriPoly C69 = C2.substitute(P("x^3", K4), P("y^3", K4), P("z^3", K4));
    CurveF C = CurveF::make(C69, K4);
    QTRel r = rel({2, 3, 6}, {TriPoly(1), TriPoly(1), -C69}, {P("-x^3+y^3-z^3", K4), P("-rad*x*z", K4), TriPoly(1)});
    Section s0 = section_from_qt(r, C);
    CHECK(on_curve(s0, C));
    CHECK(s0.f() == P("-rad*x", K4));
    CHECK(s0.g() == P("-x^3+y^3-1", K4));

    // constants that need roots outside the field
    QTRel bad = r;
    bad.F[1] = TriPoly(2);
    bad.h[1] = P("-x*z", K4);
    CHECK_THROWS_AS(section_from_qt(bad, C), Error);
    bad = r;
    bad.F[0] = P("x", K4);
    CHECK_THROWS_AS(section_from_qt(bad, C), Error);
}

TEST_CASE("relation from section") {
    std::mt19937_64 rng(32);
    for (int it = 0; it < 20; ++it) {
        Torus T = random_torus(rng);
        QTRel r = qt_from_section(T.s, T.C);
        QTReport rep = qt_verify(r);
        CHECK(rep.verdict == QTVerdict::Ok);
        CHECK(r.h[2].degree() == 0);
        CHECK(proportional(r.h[1], T.q2));
        // round trips on a few multiples
        std::vector<Section> family = {T.s, double_section(T.s, T.C), add(T.s, omega_action(T.s, T.C), T.C)};
        for (const Section& s : family) {
            if (s.is_infinity()) continue;
            QTRel q = qt_from_section(s, T.C);
            QTReport qr = qt_verify(q);
            CHECK(qr.verdict == QTVerdict::Ok);
            CHECK(q.h[1].degree() == 2 * (q.h[2].degree() + T.C.k));
            CHECK(q.h[0].degree() == 3 * (q.h[2].degree() + T.C.k));
            Section back = section_from_qt(q, T.C);
            CHECK(section_eq(back, s));
            CHECK(qt_equivalent(q, qt_from_section(back, T.C)));
        }
    }
}

TEST_CASE("doubling clears the denominator 2 q3") {
    std::mt19937_64 rng(33);
    int checked = 0;
    while (checked < 5) {
        Torus T = random_torus(rng);
        // a common factor of q2 and q3 (or z | q3) legitimately cancels from h
        if (!poly_gcd(T.q2, T.q3).is_constant() || T.q3.min_degree_in(Var::Z) > 0) continue;
        ++checked;
        QTRel r = qt_from_section(double_section(T.s, T.C), T.C);
        CHECK(qt_verify(r).verdict == QTVerdict::Ok);
        CHECK(proportional(r.h[2], T.q3));
    }
}

TEST_CASE("Kummer pullback") {
    TriPoly C2 = P("x^2+y^2+z^2-2*(x*y+x*z+y*z)");
    TriPoly C69 = kummer_pullback(C2, 3);
    CHECK(C69.degree() == 6);
    CHECK(C69 == C2.substitute(P("x^3"), P("y^3"), P("z^3")));
    CHECK(kummer_pullback(C2, 1) == C2);

    TriPoly C43 = P("x^2*y^2+y^2*z^2+z^2*x^2-2*x*y*z*(x+y+z)");
    std::array<TriPoly, 3> L = {P("x+y+z"), P("-8*x+y+z"), P("x-8*y+z")};
    TriPoly C12 = kummer_pullback(C43, 3, L);
    CHECK(C12.degree() == 12);
    CHECK(C12.is_homogeneous());
    // undoing the coordinate change recovers C
    TriPoly lin = kummer_pullback(C43, 1, L);
    CHECK(lin.substitute(L[0], L[1], L[2]) == C43);
    CHECK(C12 == lin.substitute(P("x^3"), P("y^3"), P("z^3")));
    CHECK_THROWS_AS(kummer_pullback(C43, 3, std::array<TriPoly, 3>{P("x"), P("y"), P("x+y")}), Error);

    // multiplicative and degree-scaling on random inputs
    std::mt19937_64 rng(34);
    for (int it = 0; it < 10; ++it) {
        TriPoly a = random_tripoly(rng, Q6, 3, 3, 3), b = random_tripoly(rng, Q6, 3, 2, 2);
        std::array<TriPoly, 3> M = {random_tripoly(rng, Q6, 3, 1, 1), random_tripoly(rng, Q6, 3, 1, 1),
                                    random_tripoly(rng, Q6, 3, 1, 1)};
        int m = 2 + it % 2;
        TriPoly ka, kb;
        try {
            ka = kummer_pullback(a, m, M);
            kb = kummer_pullback(b, m, M);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DegenerateLines);
            continue;
        }
        CHECK(kummer_pullback(a * b, m, M) == ka * kb);
        if (!a.is_zero()) CHECK(ka.degree() == m * a.degree());
    }
}
