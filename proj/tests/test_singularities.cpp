#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qtoric/cli/parser.hpp"
#include "qtoric/singularities/curve.hpp"
#include "qtoric/singularities/local.hpp"
#include "qtoric/singularities/points.hpp"

using namespace qtoric;

namespace {

TriPoly P(const std::string& s, const FieldPtr& f = nullptr) { return parse_expression(s, f); }

UPoly U(const std::string& s) { return parse_upoly(s); }

// normalized product (t-1) prod (1-t^N)^(-chi), evaluated by repeated division by hand
UPoly acampo_oracle(const std::vector<std::pair<int, int>>& divs) {
    UPoly num = U("t-1"), den = U("1");
    for (auto [N, chi] : divs) {
        UPoly f = UPoly::constant(Rat(1)) - UPoly::monomial(Rat(1), N);
        for (int i = 0; i < -chi; ++i) num *= f;
        for (int i = 0; i < chi; ++i) den *= f;
    }
    UPoly q = divexact(num, den);
    return q.coeff(0) == 0 ? q.monic() : Rat(1) / q.coeff(0) * q;
}

SingRecord rec(const std::string& t, std::vector<int> eps) {
    SingRecord s;
    s.type = t;
    s.eps = std::move(eps);
    return s;
}

CurveSpec curve(std::vector<Component> comps, std::vector<SingRecord> sings) {
    CurveSpec c;
    c.components = std::move(comps);
    std::vector<SingularPoint> pts;
    for (auto& s : sings) pts.push_back(SingularPoint{{}, s});
    c.singular_points = pts;
    return c;
}

std::vector<std::vector<int>> permutations_of(std::vector<int> v) {
    std::vector<std::vector<int>> out;
    std::sort(v.begin(), v.end());
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST_CASE("A'Campo examples") {
    ResolutionData node{{Divisor{2, 0, {}, {}}}};
    CHECK(acampo_alexander(node).s_vector({1, 2, 3, 6}) == std::vector<int>{1, 0, 0, 0});
    ResolutionData cusp{{Divisor{2, 1, {}, {}}, Divisor{3, 1, {}, {}}, Divisor{6, -1, {}, {}}}};
    CHECK(acampo_alexander(cusp).expand() == U("t^2-t+1"));
    ResolutionData d4{{Divisor{3, -1, {}, {}}}};
    CHECK(acampo_alexander(d4).s_vector({1, 2, 3, 6}) == std::vector<int>{2, 0, 1, 0});
    ResolutionData bad{{Divisor{2, 1, {}, {}}}};
    CHECK_THROWS_AS(acampo_alexander(bad), Error);
    CHECK_THROWS_AS(acampo_alexander(ResolutionData{}), Error);
}

TEST_CASE("A'Campo against the oracle on random resolution shapes") {
    // catalog shapes with arbitrary multiplicities
    for (const auto& t : catalog_types()) {
        int r = catalog_branches(t);
        for (int seed = 0; seed < 6; ++seed) {
            std::vector<int> eps(r);
            int g = 0;
            for (int j = 0; j < r; ++j) g = std::gcd(g, eps[j] = 1 + (seed * 7 + j * 3) % 4);
            if (g != 1) continue;
            ResolutionData res = catalog_resolution(t, eps);
            std::vector<std::pair<int, int>> divs;
            int deg = 1;
            for (const auto& d : res.divisors) {
                divs.emplace_back(d.N, d.chi);
                deg -= d.chi * d.N;
            }
            AlexPoly a = acampo_alexander(res);
            CHECK(a.expand() == acampo_oracle(divs));
            CHECK(a.degree() == deg);
        }
    }
}

TEST_CASE("table regeneration") {
    int rows = 0, mismatches = 0;
    for (const auto& row : catalog_rows()) {
        std::vector<std::vector<int>> reps = row.eps;
        if (reps.empty()) reps = {{1, 1}, {2, 1}, {1, 3}, {5, 2}};
        for (const auto& e : reps) {
            auto perms = row.type == "D6" ? std::vector<std::vector<int>>{e} : permutations_of(e);
            for (const auto& p : perms) {
                CatalogResult r = catalog_lookup(row.type, p);
                for (const auto& c : r.checks) {
                    if (c.table != row.table) continue;
                    ++rows;
                    CHECK(c.expected == row.s);
                    if (row.type == "A3" && row.table == 1) {
                        // printed (2,0,0,1); the frozen resolution gives (t-1)(t+1)(t^2-t+1)
                        CHECK(c.computed == std::vector<int>{1, 1, 0, 1});
                        CHECK_FALSE(c.match);
                        ++mismatches;
                    } else {
                        CHECK_MESSAGE(c.match, row.type);
                    }
                }
            }
        }
    }
    CHECK(rows > 40);
    CHECK(mismatches == 2);
}

TEST_CASE("catalog lookups") {
    CHECK(catalog_local_alexander("A5", {1, 1}).s_vector({1, 2, 3, 6}) == std::vector<int>{1, 0, 1, 1});
    CHECK(catalog_local_alexander("ord6", {1, 1, 1, 1, 1, 1}).s_vector({1, 2, 3, 6}) == std::vector<int>{5, 4, 4, 4});
    CHECK(catalog_local_alexander("D6", {1, 1, 2}).s_vector({1, 2, 3, 6}) == std::vector<int>{2, 1, 1, 1});
    CHECK_THROWS_AS(catalog_local_alexander("D6", {2, 1, 1}), Error);
    CHECK_THROWS_AS(catalog_local_alexander("A5", {2, 1}), Error);
    CHECK_THROWS_AS(catalog_local_alexander("E8", {1}), Error);
    CHECK_THROWS_AS(catalog_local_alexander("D4", {1, 1}), Error);
    // any eps for nodes in the 4- and 3-essential tables
    CHECK(catalog_local_alexander("A1", {7, 3}).expand() == U("1-t"));
}

TEST_CASE("quasi-adjunction spectrum") {
    CHECK(quasi_adjunction_spectrum(*catalog_quasi_adjunction("A2", {1})) == std::set<Rat>{Rat(5, 6)});
    CHECK(quasi_adjunction_spectrum(*catalog_quasi_adjunction("A1", {1, 1})).empty());
    CHECK(quasi_adjunction_spectrum(*catalog_quasi_adjunction("D4", {4, 1, 1})) == std::set<Rat>{Rat(2, 3), Rat(5, 6)});
    CHECK(quasi_adjunction_spectrum(*catalog_quasi_adjunction("D4", {1, 4, 1})) == std::set<Rat>{Rat(2, 3), Rat(5, 6)});
    CHECK_FALSE(catalog_quasi_adjunction("A5", {1, 1}));
    CHECK_THROWS_AS(quasi_adjunction_spectrum(catalog_resolution("A2", {1})), Error);

    // saturation: monomials past degree N change nothing, and values stay in (0,1)
    for (auto [t, e] : std::vector<std::pair<std::string, std::vector<int>>>{{"A2", {1}}, {"D4", {4, 1, 1}}, {"A1", {2, 3}}}) {
        auto small = quasi_adjunction_spectrum(*catalog_quasi_adjunction(t, e, 6));
        auto big = quasi_adjunction_spectrum(*catalog_quasi_adjunction(t, e, 14));
        CHECK(small == big);
        for (const auto& v : big) CHECK((v > 0 && v < 1));
    }
    // the built-in cases agree with the table column
    CHECK(*catalog_lookup("A2", {1}).spectrum == std::vector<Rat>{Rat(5, 6)});
    CHECK(*catalog_lookup("D4", {1, 1, 4}).spectrum == std::vector<Rat>{Rat(2, 3), Rat(5, 6)});
}

TEST_CASE("delta classification of germs") {
    CHECK(classify_delta(rec("A2", {1}), 6) == DeltaClass::Essential);
    CHECK(classify_delta(rec("A3", {1, 1}), 4) == DeltaClass::Essential);
    CHECK(classify_delta(rec("A2", {1}), 4) == DeltaClass::Coprime);
    CHECK(classify_delta(rec("A5", {1, 1}), 3) == DeltaClass::Neither);
    CHECK(classify_delta(rec("A2", {1}), 3) == DeltaClass::Coprime);

    // essential at delta stays essential at multiples, over the whole catalog
    for (const auto& row : catalog_rows())
        for (const auto& e : row.eps)
            for (unsigned d = 1; d <= 12; ++d)
                if (classify_delta(rec(row.type, e), d) == DeltaClass::Essential)
                    for (unsigned m = 2; m <= 4; ++m) CHECK(classify_delta(rec(row.type, e), m * d) == DeltaClass::Essential);

    // rows of each table are essential for its delta
    for (const auto& row : catalog_rows()) {
        unsigned delta = row.table == 1 ? 6 : row.table == 2 ? 4 : 3;
        for (const auto& e : row.eps) CHECK(classify_delta(rec(row.type, e), delta) == DeltaClass::Essential);
    }
}

TEST_CASE("delta classification of curves") {
    TriPoly C2 = P("x^2+y^2+z^2-2*(x*y+x*z+y*z)");
    TriPoly C69 = C2.substitute(P("x^3"), P("y^3"), P("z^3"));
    CurveSpec c69 = curve({{C69, 1}}, std::vector<SingRecord>(9, rec("A2", {1})));
    AlexPoly d69 = parse_alexander("(t^2-t+1)^3");
    CHECK(classify_curve_delta(c69, d69, 6).verdict == CurveDeltaClass::Total);

    std::vector<SingRecord> s;
    for (int i = 0; i < 2; ++i) s.push_back(rec("A2", {1}));
    for (int i = 0; i < 3; ++i) s.push_back(rec("A5", {1, 1}));
    CurveSpec c = curve({{P("x^6+y^6+z^6"), 1}}, s);
    AlexPoly d = parse_alexander("(t^2-t+1)^2*(t^2+t+1)");
    CHECK(classify_curve_delta(c, d, 6).verdict == CurveDeltaClass::Total);
    // A5 with eps (1,1) has roots of order 3 and 6, so the literal definition fails at delta 3
    auto r3 = classify_curve_delta(c, d, 3);
    CHECK(r3.verdict == CurveDeltaClass::Neither);
    CHECK(r3.per_point[0] == DeltaClass::Coprime);
    CHECK(r3.per_point[4] == DeltaClass::Neither);

    CurveSpec smooth = curve({{P("x^3+y^3+z^3"), 1}}, {});
    CHECK(classify_curve_delta(smooth, AlexPoly{}, 5).verdict == CurveDeltaClass::Total);

    CurveSpec unknown;
    unknown.components = {{C69, 1}};
    CHECK_THROWS_AS(classify_curve_delta(unknown, d69, 6), Error);
    CHECK_THROWS_AS(divisibility_check(unknown, d69), Error);
}

TEST_CASE("divisibility") {
    TriPoly C69 = P("x^6+y^6+z^6-2*(x^3*y^3+x^3*z^3+y^3*z^3)");
    CurveSpec c69 = curve({{C69, 1}}, std::vector<SingRecord>(9, rec("A2", {1})));
    auto r = divisibility_check(c69, parse_alexander("(t^2-t+1)^3"));
    CHECK(r.pass());
    CHECK(r.witness == std::vector<int>{0});
    CHECK(r.orders == std::vector<unsigned>{6});

    auto bad = divisibility_check(c69, parse_alexander("t^2+1"));
    CHECK_FALSE(bad.first_pass);
    CHECK_FALSE(bad.second_pass);
    CHECK(bad.violations == std::vector<unsigned>{4});

    std::vector<SingRecord> s;
    for (int i = 0; i < 2; ++i) s.push_back(rec("A2", {1}));
    for (int i = 0; i < 3; ++i) s.push_back(rec("A5", {1, 1}));
    CurveSpec c = curve({{P("x^6+y^6+z^6"), 1}}, s);
    auto r2 = divisibility_check(c, parse_alexander("(t^2-t+1)^2*(t^2+t+1)"));
    CHECK(r2.pass());
    CHECK(divides(parse_alexander("(t^2-t+1)^2*(t^2+t+1)").expand(), r2.bound));

    // a factor (t-1) beyond the local product needs the component term
    CurveSpec two = curve({{P("x"), 1}, {P("y"), 2}}, {rec("A1", {1, 2})});
    auto r3 = divisibility_check(two, AlexPoly::from_multiplicities({{1, 2}}));
    CHECK(r3.first_pass);
    CHECK(r3.witness == std::vector<int>{0, 1});
}

TEST_CASE("cyclotomic orders") {
    auto o = cyclotomic_orders(U("(t^2-t+1)^2*(t+1)*(t^4+1)*(t^2+t+1)"));
    CHECK(o == std::vector<std::pair<unsigned, int>>{{2, 1}, {3, 1}, {6, 2}, {8, 1}});
    CHECK(cyclotomic_orders(U("t^2-3")).empty());
}

TEST_CASE("singular points") {
    CHECK(find_singular_points(P("x^4+y^4+z^4")).empty());

    TriPoly C43 = P("x^2*y^2+y^2*z^2+z^2*x^2-2*x*y*z*(x+y+z)");
    auto pts = find_singular_points(C43);
    REQUIRE(pts.size() == 3);
    for (const auto& p : pts) {
        CHECK(p.exact);
        int nz = 0;
        for (const auto& c : p.coords) nz += !c.is_zero();
        CHECK(nz == 1);
        CHECK(classify_node_cusp(C43, p.coords) == NodeCusp::Cusp);
    }

    TriPoly C69 = P("x^6+y^6+z^6-2*(x^3*y^3+x^3*z^3+y^3*z^3)");
    auto p69 = find_singular_points(C69);
    REQUIRE(p69.size() == 9);
    int on_axes[3] = {0, 0, 0};
    for (const auto& p : p69) {
        CHECK(p.exact);
        CHECK(is_singular_point(C69, p.coords));
        CHECK(classify_node_cusp(C69, p.coords) == NodeCusp::Cusp);
        for (int i = 0; i < 3; ++i) on_axes[i] += p.coords[i].is_zero();
        // each coordinate ratio is a cube root of unity
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!p.coords[i].is_zero() && !p.coords[j].is_zero())
                    CHECK((p.coords[i] / p.coords[j]).pow(3) == FieldElem(1));
    }
    CHECK(on_axes[0] == 3);
    CHECK(on_axes[1] == 3);
    CHECK(on_axes[2] == 3);

    CHECK_THROWS_AS(find_singular_points(P("x^2*(x+y+z)")), Error);
}

TEST_CASE("numeric singular points") {
    // four nodes at (+-sqrt2, +-sqrt3) plus [1:0:0] and [0:1:0]
    TriPoly C = P("(x^2-2*z^2)*(y^2-3*z^2)");
    auto pts = find_singular_points(C);
    REQUIRE(pts.size() == 6);
    int exact = 0;
    for (const auto& p : pts) {
        if (p.exact) {
            ++exact;
            CHECK(classify_node_cusp(C, p.coords) == NodeCusp::Node);
            continue;
        }
        CHECK(p.residual_log2 < -128);
        numeric::PrecisionScope s(256);
        numeric::Real x2 = (p.approx[0] * p.approx[0]).re, y2 = (p.approx[1] * p.approx[1]).re;
        CHECK(abs(x2 - 2) < numeric::two_pow(-100));
        CHECK(abs(y2 - 3) < numeric::two_pow(-100));
    }
    CHECK(exact == 2);
}

TEST_CASE("node and cusp germs") {
    auto O = std::array<FieldElem, 3>{FieldElem(0), FieldElem(0), FieldElem(1)};
    CHECK(classify_node_cusp(P("x^2*z-y^2*z+x^3"), O) == NodeCusp::Node);
    CHECK(classify_node_cusp(P("x^2*z-y^3"), O) == NodeCusp::Cusp);
    CHECK(classify_node_cusp(P("x^2*z^3-y^5"), O) == NodeCusp::Other);
    CHECK(classify_node_cusp(P("x^3-y^3+x*y*z*0+x^2*y"), O) == NodeCusp::Other);
    CHECK_THROWS_AS(classify_node_cusp(P("x*z-y^2"), O), Error);
    // translated cusp over Q(w3)
    FieldPtr Q3 = NumberField::cyclotomic(3);
    TriPoly C = P("(x-w3*z)^2*z-(y-2*z)^3", Q3);
    CHECK(classify_node_cusp(C, {parse_constant("w3", Q3), FieldElem(2), FieldElem(1)}) == NodeCusp::Cusp);
    // same point on a different chart representative
    CHECK(classify_node_cusp(C, {parse_constant("3*w3", Q3), FieldElem(6), FieldElem(3)}) == NodeCusp::Cusp);
}
