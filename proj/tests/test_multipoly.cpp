#include <doctest.h>

#include "qtoric/cli/parser.hpp"
#include "qtoric/multipoly/gcd.hpp"
#include "qtoric/multipoly/ratfunc.hpp"
#include "support.hpp"

using namespace qtoric;
using qtoric::testing::random_point_coord;
using qtoric::testing::random_tripoly;

namespace {

const TriPoly X = TriPoly::x(), Y = TriPoly::y(), Z = TriPoly::z();

TriPoly P(const std::string& s, const FieldPtr& f = nullptr) { return parse_expression(s, f); }

TriPoly conic_c2() { return P("x^2+y^2+z^2-2*(x*y+x*z+y*z)"); }

TriPoly cube_pullback(const TriPoly& f) { return f.substitute(X.pow(3), Y.pow(3), Z.pow(3)); }

}  // namespace

TEST_CASE("tripoly arithmetic examples") {
    CHECK((X + Y) * (X - Y) == X.pow(2) - Y.pow(2));
    TriPoly rel = X.pow(3) * (Y.pow(3) - Z.pow(3)) + Y.pow(3) * (Z.pow(3) - X.pow(3)) +
                  Z.pow(3) * (X.pow(3) - Y.pow(3));
    CHECK(rel.is_zero());
    TriPoly c69 = cube_pullback(conic_c2());
    TriPoly sq = (X.pow(3) - Y.pow(3) + Z.pow(3)).pow(2) - FieldElem(4) * (X * Z).pow(3);
    CHECK(c69 == sq);
    // The variant with the signs of y^3 and z^3 exchanged is a different sextic.
    TriPoly other = (X.pow(3) + Y.pow(3) - Z.pow(3)).pow(2) + FieldElem(4) * (X * Z).pow(3);
    CHECK(other != c69);
    CHECK(c69.degree() == 6);
    CHECK(c69.is_homogeneous());
    CHECK(TriPoly().degree() == -1);
}

TEST_CASE("substitute examples") {
    TriPoly f = X.pow(2) + Y.pow(2);
    CHECK(f.substitute(X, Y, Z) == f);
    CHECK(X.substitute(X + Y + Z, FieldElem(-8) * X + Y + Z, X - FieldElem(8) * Y + Z) == X + Y + Z);
    TriPoly c69 = cube_pullback(conic_c2());
    CHECK(c69 == P("x^6+y^6+z^6-2*x^3*y^3-2*x^3*z^3-2*y^3*z^3"));
}

TEST_CASE("partials") {
    auto d = partials(X.pow(2));
    CHECK(d[0] == FieldElem(2) * X);
    CHECK(d[1].is_zero());
    CHECK(d[2].is_zero());
    auto e = partials(X * Y * Z);
    CHECK(e[0] == Y * Z);
    CHECK(e[1] == X * Z);
    CHECK(e[2] == X * Y);

    // Euler identity on the nine-cusp sextic, compared with an expansion done term by term.
    TriPoly c69 = cube_pullback(conic_c2());
    auto g = partials(c69);
    TriPoly euler = X * g[0] + Y * g[1] + Z * g[2];
    TriPoly expected;
    for (const auto& [key, c] : c69.terms()) {
        Exp ex = unpack(key);
        expected += TriPoly::monomial(c.mul_rat(Rat(ex[0] + ex[1] + ex[2])), ex[0], ex[1], ex[2]);
    }
    CHECK(euler == expected);
    CHECK(euler == FieldElem(6) * c69);
}

TEST_CASE("resultant examples") {
    CHECK(resultant(X - Y, X + Y, Var::X) == FieldElem(2) * Y);
    CHECK(resultant(X.pow(2) - Y.pow(2), X - Y, Var::X).is_zero());
    // Res_x(x^2 + a, x - b) = b^2 + a
    CHECK(resultant(X.pow(2) + Z, X - Y, Var::X) == Y.pow(2) + Z);

    TriPoly c43 = P("x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x+y+z)");
    auto d = partials(c43);
    TriPoly r = resultant(d[0], d[1], Var::Z);
    REQUIRE(!r.is_zero());
    CHECK(r.is_free_of(Var::Z));
    // cusps at [1:0:0], [0:1:0], [0:0:1] project to (1,0), (0,1), (0,0)
    CHECK(r.eval(FieldElem(1), FieldElem(0), FieldElem(0)).is_zero());
    CHECK(r.eval(FieldElem(0), FieldElem(1), FieldElem(0)).is_zero());
    CHECK(r.eval(FieldElem(0), FieldElem(0), FieldElem(0)).is_zero());
}

TEST_CASE("resultant vanishes exactly on common factors") {
    std::mt19937_64 rng(11);
    auto f6 = NumberField::cyclotomic(6);
    int zero_hits = 0, nonzero_hits = 0;
    for (int it = 0; it < 20; ++it) {
        TriPoly a = random_tripoly(rng, f6, 3, 2, -1, false) + X.pow(2);
        TriPoly b = random_tripoly(rng, f6, 3, 2, -1, false) + X;
        TriPoly h = random_tripoly(rng, f6, 2, 1, -1, false) + X;
        bool with = it % 2 == 0;
        TriPoly f = with ? a * h : a;
        TriPoly g = with ? b * h : b;
        TriPoly r = resultant(f, g, Var::X);
        TriPoly gg = poly_gcd(f, g);
        bool common = gg.degree_in(Var::X) > 0;
        CHECK(r.is_zero() == common);
        if (with) CHECK(common);
        (r.is_zero() ? zero_hits : nonzero_hits)++;
    }
    CHECK(zero_hits >= 10);
    CHECK(nonzero_hits >= 5);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    auto f6 = NumberField::cyclotomic(6);
    for (int it = 0; it < 100; ++it) {
        TriPoly a = random_tripoly(rng, f6, 4, 3), b = random_tripoly(rng, f6, 4, 3),
                c = random_tripoly(rng, f6, 4, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * TriPoly(FieldElem(1)) == a);
        // evaluation is a ring homomorphism; independent check of the product
        FieldElem px = random_point_coord(rng, f6), py = random_point_coord(rng, f6),
                  pz = random_point_coord(rng, f6);
        CHECK((a * b).eval(px, py, pz) == a.eval(px, py, pz) * b.eval(px, py, pz));
        CHECK((a + c).eval(px, py, pz) == a.eval(px, py, pz) + c.eval(px, py, pz));
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937_64 rng(8);
    auto f6 = NumberField::cyclotomic(6);
    for (int it = 0; it < 30; ++it) {
        TriPoly a = random_tripoly(rng, f6, 4, 2), b = random_tripoly(rng, f6, 4, 2);
        TriPoly gx = random_tripoly(rng, f6, 3, 2, 2), gy = random_tripoly(rng, f6, 3, 2, 2),
                gz = random_tripoly(rng, f6, 3, 2, 2);
        CHECK((a * b).substitute(gx, gy, gz) == a.substitute(gx, gy, gz) * b.substitute(gx, gy, gz));
        CHECK((a + b).substitute(gx, gy, gz) == a.substitute(gx, gy, gz) + b.substitute(gx, gy, gz));
        FieldElem px = random_point_coord(rng, f6), py = random_point_coord(rng, f6),
                  pz = random_point_coord(rng, f6);
        CHECK(a.substitute(gx, gy, gz).eval(px, py, pz) ==
              a.eval(gx.eval(px, py, pz), gy.eval(px, py, pz), gz.eval(px, py, pz)));
        TriPoly h = random_tripoly(rng, f6, 4, 3, 3);
        TriPoly s = h.substitute(gx, gy, gz);
        if (!s.is_zero()) {
            CHECK(s.is_homogeneous());
            CHECK(s.degree() == 6);
        }
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(9);
    auto f12 = NumberField::cyclotomic(12);
    for (int it = 0; it < 30; ++it) {
        TriPoly a = random_tripoly(rng, f12, 4, 3), b = random_tripoly(rng, f12, 4, 3);
        if (b.is_zero()) continue;
        CHECK(divexact(a * b, b) == a);
        TriPoly c = a * b + TriPoly(FieldElem(1));
        if (b.degree() > 0) CHECK(!try_divexact(c, b).has_value());
    }
    CHECK_THROWS_AS(divexact(X, Y), Error);
}

TEST_CASE("bivariate gcd") {
    std::mt19937_64 rng(10);
    auto f6 = NumberField::cyclotomic(6);
    CHECK(poly_gcd(X.pow(2) - Y.pow(2), X - Y) == X - Y);
    CHECK(poly_gcd(X * Y, X * Y * Y) == X * Y);
    CHECK(poly_gcd(X + Y, X - Y) == TriPoly(FieldElem(1)));
    for (int it = 0; it < 25; ++it) {
        TriPoly a = random_tripoly(rng, f6, 3, 3, -1, false) + TriPoly(FieldElem(1));
        TriPoly b = random_tripoly(rng, f6, 3, 3, -1, false) + TriPoly(FieldElem(2));
        TriPoly h = random_tripoly(rng, f6, 3, 2, -1, false);
        if (h.is_zero()) continue;
        TriPoly g = poly_gcd(a * h, b * h);
        // g must be divisible by h and divide both inputs
        CHECK(try_divexact(g, h).has_value());
        CHECK(try_divexact(a * h, g).has_value());
        CHECK(try_divexact(b * h, g).has_value());
        CHECK(poly_gcd(divexact(a * h, g), divexact(b * h, g)).is_constant());
    }
    // homogeneous inputs
    for (int it = 0; it < 10; ++it) {
        TriPoly a = random_tripoly(rng, f6, 4, 3, 3), b = random_tripoly(rng, f6, 4, 3, 3);
        TriPoly h = random_tripoly(rng, f6, 3, 2, 2);
        if (a.is_zero() || b.is_zero() || h.is_zero()) continue;
        TriPoly g = poly_gcd(a * h, b * h);
        CHECK(g.is_homogeneous());
        CHECK(try_divexact(g, h).has_value());
        CHECK(try_divexact(a * h, g).has_value());
        CHECK(try_divexact(b * h, g).has_value());
    }
}

TEST_CASE("rational function examples") {
    RatFunc rx(X), ry(Y);
    RatFunc s = rx / ry + ry / rx;
    CHECK(ratfunc_eq(s, RatFunc(X.pow(2) + Y.pow(2), X * Y)));
    CHECK(ratfunc_eq(RatFunc(X.pow(2) - Y.pow(2), X - Y), RatFunc(X + Y)));
    RatFunc w(TriPoly(FieldElem(2)) - FieldElem(2) * X.pow(3) - TriPoly(FieldElem(2)), X.pow(2));
    CHECK(ratfunc_eq(w, RatFunc(FieldElem(-2) * X)));
    RatFunc wn = normalize(w);
    CHECK(wn.num() == FieldElem(-2) * X);
    CHECK(wn.den() == TriPoly(FieldElem(1)));
    CHECK_THROWS_AS(rx / RatFunc(), Error);
    CHECK_THROWS_AS(RatFunc(X, TriPoly()), Error);
}

TEST_CASE("normalize") {
    RatFunc a(FieldElem(2) * X.pow(2) * Y, FieldElem(4) * X * Y);
    RatFunc na = normalize(a);
    CHECK(na.num() == FieldElem(Rat(1, 2)) * X);
    CHECK(na.den() == TriPoly(FieldElem(1)));
    RatFunc b(X.pow(2) - Y.pow(2), X - Y);
    RatFunc nb = reduce_full(b);
    CHECK(nb.num() == X + Y);
    CHECK(nb.den() == TriPoly(FieldElem(1)));
    // without full reduction the value is kept but not simplified
    RatFunc lazy = normalize(b, NormalizePolicy::never());
    CHECK(ratfunc_eq(lazy, b));
    CHECK(!lazy.is_polynomial());

    std::mt19937_64 rng(12);
    auto f6 = NumberField::cyclotomic(6);
    for (int it = 0; it < 100; ++it) {
        TriPoly n = random_tripoly(rng, f6, 3, 3, -1, false);
        TriPoly d = random_tripoly(rng, f6, 3, 3, -1, false);
        if (d.is_zero()) continue;
        TriPoly h = random_tripoly(rng, f6, 2, 2, -1, false);
        if (h.is_zero()) h = X;
        RatFunc r(n * h, d * h);
        NormalizePolicy pol = it % 2 ? NormalizePolicy::always() : NormalizePolicy{};
        RatFunc once = normalize(r, pol);
        RatFunc twice = normalize(once, pol);
        CHECK(once.num() == twice.num());
        CHECK(once.den() == twice.den());
        CHECK(ratfunc_eq(once, r));
    }
}

TEST_CASE("rational function arithmetic consistency") {
    std::mt19937_64 rng(13);
    auto f6 = NumberField::cyclotomic(6);
    for (int it = 0; it < 40; ++it) {
        auto rnd = [&] {
            TriPoly d = random_tripoly(rng, f6, 2, 2, -1, false);
            if (d.is_zero()) d = Y;
            return RatFunc(random_tripoly(rng, f6, 3, 2, -1, false), d);
        };
        RatFunc r = rnd(), s = rnd(), t = rnd();
        CHECK(ratfunc_eq((r + s) - s, r));
        CHECK(ratfunc_eq(r * (s + t), r * s + r * t));
        CHECK(ratfunc_eq(r, r));
        if (!s.is_zero()) CHECK(ratfunc_eq((r / s) * s, r));
    }
}

TEST_CASE("parser examples") {
    CHECK(P("x^2 - y^3") == X.pow(2) - Y.pow(3));
    CHECK(P("x^2+y^2+z^2-2*(x*y+x*z+y*z)") ==
          X.pow(2) + Y.pow(2) + Z.pow(2) - FieldElem(2) * (X * Y + X * Z + Y * Z));
    auto f3 = NumberField::cyclotomic(3);
    FieldElem w3 = FieldElem::gen_a(f3);
    CHECK(P("z*x + w3*y*z - (1+w3)*x*y", f3) == Z * X + w3 * (Y * Z) - (FieldElem(1) + w3) * (X * Y));
    CHECK(P("z*x + w{3}*y*z", f3) == Z * X + w3 * (Y * Z));
    CHECK(P("-x^2") == -(X.pow(2)));
    CHECK(P("5/2*x") == FieldElem(Rat(5, 2)) * X);
    CHECK(P(" ( x + y ) ^ 2 ") == (X + Y).pow(2));
    auto f12 = NumberField::cyclotomic(12);
    CHECK(P("w6^6", f12) == TriPoly(FieldElem(1)));
    CHECK(P("w4^2", f12) == TriPoly(FieldElem(-1)));
    auto rad = NumberField::make(FieldSpec::with_radical(6, 3, Rat(4)));
    CHECK(P("rad^3", rad) == TriPoly(FieldElem(4)));
}

TEST_CASE("parser errors") {
    auto code = [](const std::string& s, const FieldPtr& f = nullptr) {
        try {
            parse_expression(s, f);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidInput;
    };
    CHECK(code("x +") == ErrorKind::SyntaxError);
    CHECK(code("2x") == ErrorKind::SyntaxError);
    CHECK(code("x^2^3") == ErrorKind::SyntaxError);
    CHECK(code("x/y") == ErrorKind::SyntaxError);
    CHECK(code("(x") == ErrorKind::SyntaxError);
    CHECK(code("q") == ErrorKind::SyntaxError);
    CHECK(code("w3*x") == ErrorKind::UnknownConstant);
    CHECK(code("w4", NumberField::cyclotomic(6)) == ErrorKind::UnknownConstant);
    CHECK(code("rad", NumberField::cyclotomic(6)) == ErrorKind::UnknownConstant);
    try {
        parse_expression("x +\n  * y", nullptr);
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("column 3") != std::string::npos);
        CHECK(msg.find("'*'") != std::string::npos);
    }
}

TEST_CASE("print and parse round trip") {
    std::mt19937_64 rng(14);
    auto rad = NumberField::make(FieldSpec::with_radical(6, 3, Rat(4)));
    std::vector<FieldPtr> fields{nullptr, NumberField::cyclotomic(12), rad};
    for (int it = 0; it < 100; ++it) {
        const FieldPtr& f = fields[it % fields.size()];
        TriPoly p = random_tripoly(rng, f, 5, 4);
        CHECK(parse_expression(p.to_string(), f) == p);
    }
    CHECK(P("0").to_string() == "0");
    CHECK((X - Y).to_string() == "x - y");
    CHECK((FieldElem(Rat(-3, 2)) * X.pow(2) * Y + TriPoly(FieldElem(1))).to_string() == "-3/2*x^2*y + 1");
}

TEST_CASE("univariate parsing") {
    UPoly p = parse_upoly("(t^2-t+1)^3");
    CHECK(p.degree() == 6);
    AlexPoly a = parse_alexander("(t^2-t+1)^3");
    CHECK(a.s(6) == 3);
    CHECK(a.s(1) == 0);
}
