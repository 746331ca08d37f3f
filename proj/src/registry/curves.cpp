#include "qtoric/registry/curves.hpp"

#include "qtoric/cli/parser.hpp"
#include "qtoric/error.hpp"
#include "qtoric/quasitoric/qtrel.hpp"
#include "qtoric/singularities/points.hpp"

namespace qtoric::curves {

using numeric::Complex;

namespace {

TriPoly P(const std::string& s, const FieldPtr& f = nullptr) { return parse_expression(s, f); }

// special points of the quartic: three cusps, the bitangency points, the tangency points of l1, l2
template <class T>
std::vector<std::array<T, 3>> special_points(const T& w) {
    T one(1), zero(0);
    return {{one, zero, zero}, {zero, one, zero}, {zero, zero, one},
            {one, w, w * w},   {one, w * w, w},   {T(1), T(4), T(4)}, {T(4), T(1), T(4)}};
}

template <class T>
std::array<T, 3> line_coords(const std::array<T, 3>& p) {
    return {p[0] + p[1] + p[2], T(-8) * p[0] + p[1] + p[2], p[0] + T(-8) * p[1] + p[2]};
}

// all [r0 w^i : r1 w^j : r2 w^k] up to scaling, for cube roots r of the coordinates
template <class T, class IsZero>
std::vector<std::array<T, 3>> preimages(const std::array<T, 3>& roots, const T& w, IsZero is_zero) {
    int lead = is_zero(roots[0]) ? (is_zero(roots[1]) ? 2 : 1) : 0;
    std::vector<std::array<T, 3>> acc = {roots};
    for (int v = lead + 1; v < 3; ++v) {
        if (is_zero(roots[v])) continue;
        std::vector<std::array<T, 3>> next;
        for (const auto& p : acc) {
            T f(1);
            for (int i = 0; i < 3; ++i) {
                auto q = p;
                q[v] = q[v] * f;
                next.push_back(q);
                f = f * w;
            }
        }
        acc = next;
    }
    return acc;
}

}  // namespace

TriPoly conic_c2() { return P("x^2+y^2+z^2-2*(x*y+x*z+y*z)"); }

TriPoly c69() { return conic_c2().substitute(P("x^3"), P("y^3"), P("z^3")); }

TriPoly c43() { return P("x^2*y^2+y^2*z^2+z^2*x^2-2*x*y*z*(x+y+z)"); }

TriPoly l0() { return P("x+y+z"); }

std::vector<ExactPoint> c69_cusps() {
    FieldPtr Q3 = NumberField::cyclotomic(3);
    FieldElem w = FieldElem::gen_a(Q3), one(1), zero(0);
    std::vector<ExactPoint> out;
    FieldElem wj(1);
    for (int j = 0; j < 3; ++j) {
        out.push_back({one, wj, zero});
        out.push_back({zero, one, wj});
        out.push_back({wj, zero, one});
        wj *= w;
    }
    return out;
}

FieldElem tower_cube_root(const FieldPtr& K, const FieldElem& v) {
    if (v.is_zero()) return v;
    FieldElem a = FieldElem::gen_a(K), b = FieldElem::gen_b(K), w = FieldElem::root_of_unity(K, 3);
    for (int e = 0; e < 3; ++e)
        for (int j = 0; j < 3; ++j) {
            FieldElem u = v / (FieldElem(Rat(1)) * b.pow(3 * e) * w.pow(j));
            if (!u.is_rational()) continue;
            Rat s;
            if (!rat_root(u.rational_value(), 3, s)) continue;
            FieldElem r = FieldElem(s) * b.pow(e) * a.pow(j * static_cast<long>(K->n()) / 9);
            if (r.pow(3) == v) return r;
        }
    throw Error(ErrorKind::FieldLacksRoot, "no cube root of " + v.to_string() + " of the expected shape");
}

C1239 build_c12_39(bool verify) {
    C1239 out;
    out.K = NumberField::make(FieldSpec::with_radical(9, 3, Rat(3)));
    out.lines = {P("x+y+z"), P("-8*x+y+z"), P("x-8*y+z")};
    out.C = kummer_pullback(c43(), 3, out.lines);
    FieldElem w = FieldElem::root_of_unity(out.K, 3);
    auto zero = [](const FieldElem& x) { return x.is_zero(); };
    for (const auto& p : special_points(w)) {
        auto img = line_coords(p);
        std::array<FieldElem, 3> r;
        for (int i = 0; i < 3; ++i) r[i] = tower_cube_root(out.K, img[i]);
        for (const auto& q : preimages(r, w, zero)) out.cusps.push_back(q);
    }
    if (verify)
        for (const auto& q : out.cusps)
            if (classify_node_cusp(out.C, q) != NodeCusp::Cusp)
                throw Error(ErrorKind::NotCuspidalNodal, "constructed point is not a cusp");
    return out;
}

std::vector<NumericPoint> c12_39_cusps_numeric() {
    Complex w = numeric::unit_root(3, 1);
    // 1 + w + w^2 only vanishes up to rounding
    const numeric::Real tiny = numeric::two_pow(-static_cast<int>(numeric::current_bits() / 2));
    auto zero = [](const Complex& x) { return x.norm2() == 0; };
    std::vector<NumericPoint> out;
    for (const auto& p : special_points(w)) {
        auto img = line_coords(p);
        std::array<Complex, 3> r;
        for (int i = 0; i < 3; ++i) r[i] = img[i].abs() < tiny ? Complex() : numeric::root(img[i], 3);
        for (const auto& q : preimages(r, w, zero)) out.push_back(q);
    }
    return out;
}

TorusSextic generic_torus_sextic() {
    TorusSextic t;
    t.f2 = P("x*z-y^2");
    // binary sextic prod (s - r t) pulled back along [s^2 : s t : t^2]
    const int roots[6] = {1, 2, 3, -1, -2, -3};
    UPoly g = UPoly::constant(Rat(1));
    for (int r : roots) g *= UPoly({Rat(-r), Rat(1)});  // s - r, in s with t = 1
    // coefficient of s^(6-k) t^k is g.coeff(6-k)
    TriPoly f3;
    for (int k = 0; k <= 6; ++k) {
        int c = k / 2;
        TriPoly m = (k % 2 == 0) ? TriPoly::monomial(FieldElem(1), 3 - c, 0, c) : TriPoly::monomial(FieldElem(1), 2 - c, 1, c);
        f3 += FieldElem(g.coeff(6 - k)) * m;
    }
    t.f3 = f3 + t.f2 * P("x+2*y-z");
    t.C = t.f2.pow(3) + t.f3.pow(2);
    for (int r : roots) t.cusps.push_back({FieldElem(r * r), FieldElem(r), FieldElem(1)});
    return t;
}

}  // namespace qtoric::curves
