#include "qtoric/singularities/curve.hpp"

#include <numeric>

#include "qtoric/error.hpp"

namespace qtoric {

namespace {

const std::vector<SingularPoint>& points_of(const CurveSpec& c) {
    if (!c.singular_points) throw Error(ErrorKind::MissingSingularityData, "curve has no singular point data");
    return *c.singular_points;
}

}  // namespace

int CurveSpec::degree() const {
    int d = 0;
    for (const auto& c : components) d += c.eps * c.F.degree();
    return d;
}

void CurveSpec::validate() const {
    if (components.empty()) throw Error(ErrorKind::InvalidInput, "curve needs at least one component");
    int g = 0;
    for (const auto& c : components) {
        if (c.eps < 1) throw Error(ErrorKind::InvalidInput, "component multiplicity must be positive");
        if (c.F.is_zero() || !c.F.is_homogeneous()) throw Error(ErrorKind::InvalidInput, "components must be homogeneous");
        g = std::gcd(g, c.eps);
    }
    if (g != 1) throw Error(ErrorKind::InvalidInput, "component multiplicities must be coprime");
}

const char* curve_delta_class_name(CurveDeltaClass c) {
    switch (c) {
        case CurveDeltaClass::Partial: return "partial";
        case CurveDeltaClass::Total: return "total";
        case CurveDeltaClass::Neither: return "neither";
    }
    return "?";
}

CurveDeltaReport classify_curve_delta(const CurveSpec& curve, const AlexPoly& global_alex, unsigned delta) {
    CurveDeltaReport rep;
    rep.partial = true;
    for (const auto& p : points_of(curve)) {
        DeltaClass c = classify_delta(p.record, delta);
        rep.per_point.push_back(c);
        if (c == DeltaClass::Neither) rep.partial = false;
    }
    rep.total = rep.partial && all_roots_are_roots_of_unity(global_alex.expand(), delta);
    rep.verdict = rep.total ? CurveDeltaClass::Total : rep.partial ? CurveDeltaClass::Partial : CurveDeltaClass::Neither;
    return rep;
}

std::vector<std::pair<unsigned, int>> cyclotomic_orders(const UPoly& p) {
    std::vector<std::pair<unsigned, int>> out;
    if (p.degree() <= 0) return out;
    UPoly rest = p;
    // phi(k) >= sqrt(k/2), so k <= 2 deg^2
    const unsigned kmax = 2u * static_cast<unsigned>(p.degree() * p.degree()) + 2;
    for (unsigned k = 1; k <= kmax && rest.degree() > 0; ++k) {
        UPoly phi = cyclotomic_polynomial(k);
        if (phi.degree() > rest.degree()) continue;
        int m = 0;
        while (auto q = try_divexact(rest, phi)) {
            rest = *q;
            ++m;
        }
        if (m) out.emplace_back(k, m);
    }
    return out;
}

DivisibilityReport divisibility_check(const CurveSpec& curve, const AlexPoly& global_alex, int cap) {
    const auto& pts = points_of(curve);
    DivisibilityReport rep;
    rep.degree = curve.degree();
    const int r = static_cast<int>(curve.components.size());
    if (cap < 0) cap = r + 1;
    UPoly local = UPoly::constant(Rat(1));
    for (const auto& p : pts) local *= local_alexander(p.record).expand();
    UPoly target = global_alex.expand();

    // exponent vectors ordered by total, then lexicographically
    for (int total = 0; total <= cap * r && !rep.first_pass; ++total) {
        std::vector<std::vector<int>> vecs;
        std::vector<int> cur(r, 0);
        auto gen = [&](auto&& self, int i, int left) -> void {
            if (i == r - 1) {
                if (left <= cap) {
                    cur[i] = left;
                    vecs.push_back(cur);
                }
                return;
            }
            for (int v = 0; v <= std::min(cap, left); ++v) {
                cur[i] = v;
                self(self, i + 1, left - v);
            }
        };
        if (r == 0) {
            if (total == 0) vecs.push_back({});
        } else {
            gen(gen, 0, total);
        }
        for (const auto& kv : vecs) {
            UPoly b = local;
            for (int i = 0; i < r; ++i)
                if (kv[i] > 0)
                    b *= (UPoly::monomial(Rat(1), curve.components[i].eps) - UPoly::constant(Rat(1)))
                             .pow(static_cast<unsigned>(kv[i]));
            if (divides(target, b)) {
                rep.first_pass = true;
                rep.witness = kv;
                rep.bound = b;
                break;
            }
        }
    }
    rep.second_pass = true;
    for (auto [k, m] : cyclotomic_orders(target)) {
        rep.orders.push_back(k);
        if (rep.degree % static_cast<int>(k) != 0) {
            rep.violations.push_back(k);
            rep.second_pass = false;
        }
    }
    return rep;
}

}  // namespace qtoric
