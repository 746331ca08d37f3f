#include "qtoric/algebra/alexpoly.hpp"

namespace qtoric {

const std::set<unsigned>& default_tracked() {
    static const std::set<unsigned> t{1, 2, 3, 4, 6};
    return t;
}

int AlexPoly::s(unsigned k) const {
    auto it = cyclo.find(k);
    return it == cyclo.end() ? 0 : it->second;
}

UPoly AlexPoly::expand() const {
    UPoly p = extra;
    for (auto [k, m] : cyclo)
        if (m > 0) p *= cyclotomic_polynomial(k).pow(static_cast<unsigned>(m));
    return p;
}

std::vector<int> AlexPoly::s_vector(const std::vector<unsigned>& keys) const {
    std::vector<int> out;
    for (unsigned k : keys) out.push_back(s(k));
    return out;
}

std::string AlexPoly::to_string() const {
    std::string out;
    for (auto [k, m] : cyclo) {
        if (m == 0) continue;
        if (!out.empty()) out += "*";
        out += "(" + qtoric::to_string(cyclotomic_polynomial(k)) + ")";
        if (m > 1) out += "^" + std::to_string(m);
    }
    if (extra != UPoly::constant(Rat(1))) {
        if (!out.empty()) out += "*";
        out += "(" + qtoric::to_string(extra) + ")";
    }
    return out.empty() ? "1" : out;
}

AlexPoly AlexPoly::from_multiplicities(const std::map<unsigned, int>& s) {
    UPoly p = UPoly::constant(Rat(1));
    for (auto [k, m] : s)
        if (m > 0) p *= cyclotomic_polynomial(k).pow(static_cast<unsigned>(m));
    std::set<unsigned> tracked = default_tracked();
    for (auto [k, m] : s) tracked.insert(k);
    return alex_from_upoly(p, tracked);
}

bool operator==(const AlexPoly& a, const AlexPoly& b) { return a.expand() == b.expand(); }

AlexPoly alex_from_upoly(const UPoly& p, const std::set<unsigned>& tracked) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Alexander polynomial cannot be zero");
    Rat c0 = p.coeff(0);
    UPoly q = is_zero(c0) ? p.monic() : (Rat(1) / c0) * p;
    AlexPoly a;
    for (unsigned k : tracked) {
        UPoly phi = cyclotomic_polynomial(k);
        int m = 0;
        while (q.degree() >= phi.degree()) {
            auto d = try_divexact(q, phi);
            if (!d) break;
            q = std::move(*d);
            ++m;
        }
        a.cyclo[k] = m;
    }
    a.extra = q;
    return a;
}

}  // namespace qtoric
