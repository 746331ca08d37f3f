#include "qtoric/singularities/local.hpp"

#include <algorithm>
#include <numeric>

#include "qtoric/error.hpp"

namespace qtoric {

namespace {

struct RawDivisor {
    std::vector<int> m;
    int chi;
};

const std::map<std::string, std::vector<RawDivisor>>& raw_catalog() {
    // branch multiplicities m_ij along each exceptional divisor, and chi(E_i^0)
    static const std::map<std::string, std::vector<RawDivisor>> data = {
        {"A1", {{{1, 1}, 0}}},
        {"A2", {{{2}, 1}, {{3}, 1}, {{6}, -1}}},
        {"A3", {{{1, 1}, 1}, {{2, 2}, -1}}},
        {"A5", {{{1, 1}, 1}, {{2, 2}, 0}, {{3, 3}, -1}}},
        {"D4", {{{1, 1, 1}, -1}}},
        // branches x = y^2, x = -y^2, y = 0
        {"D6", {{{1, 1, 1}, 0}, {{2, 2, 1}, -1}}},
        {"x3y6", {{{1, 1, 1}, 1}, {{2, 2, 2}, -2}}},
        {"ord4", {{{1, 1, 1, 1}, -2}}},
        // branches x = y^2, x = -y^2, y = x^2, y = -x^2
        {"tac2", {{{1, 1, 1, 1}, 0}, {{2, 2, 1, 1}, -1}, {{1, 1, 2, 2}, -1}}},
        {"ord5", {{{1, 1, 1, 1, 1}, -3}}},
        {"ord6", {{{1, 1, 1, 1, 1, 1}, -4}}},
    };
    return data;
}

UPoly one_minus_tn(int n) { return UPoly::constant(Rat(1)) - UPoly::monomial(Rat(1), n); }

std::vector<Rat> rats(std::initializer_list<std::pair<int, int>> v) {
    std::vector<Rat> out;
    for (auto [p, q] : v) out.emplace_back(p, q);
    return out;
}

}  // namespace

bool ResolutionData::has_table() const {
    if (divisors.empty()) return false;
    for (const auto& d : divisors)
        if (!d.c || d.e.empty()) return false;
    return true;
}

AlexPoly acampo_alexander(const ResolutionData& res) {
    if (res.divisors.empty()) throw Error(ErrorKind::InvalidInput, "resolution data needs at least one divisor");
    UPoly num = UPoly({Rat(-1), Rat(1)}), den = UPoly::constant(Rat(1));
    int expect = 1;
    for (const auto& d : res.divisors) {
        if (d.N < 1) throw Error(ErrorKind::InvalidInput, "divisor multiplicity must be positive");
        if (d.chi < 0) num *= one_minus_tn(d.N).pow(static_cast<unsigned>(-d.chi));
        if (d.chi > 0) den *= one_minus_tn(d.N).pow(static_cast<unsigned>(d.chi));
        expect -= d.chi * d.N;
    }
    auto q = try_divexact(num, den);
    if (!q) throw Error(ErrorKind::NotAPolynomial, "resolution data does not give a polynomial");
    if (q->degree() != expect) throw Error(ErrorKind::NotAPolynomial, "degree bookkeeping mismatch");
    return alex_from_upoly(*q);
}

std::set<Rat> quasi_adjunction_spectrum(const ResolutionData& res) {
    if (!res.has_table()) throw Error(ErrorKind::MissingTable, "quasi-adjunction table missing");
    std::set<std::pair<int, int>> monomials;
    for (const auto& d : res.divisors)
        for (const auto& [m, v] : d.e) monomials.insert(m);
    std::set<Rat> out;
    for (const auto& m : monomials) {
        Rat kappa = 0;
        for (const auto& d : res.divisors) {
            auto it = d.e.find(m);
            if (it == d.e.end()) throw Error(ErrorKind::MissingTable, "monomial missing from a divisor");
            Rat v(d.N - it->second - *d.c - 1, d.N);
            v.canonicalize();
            kappa = std::max(kappa, v);
        }
        if (kappa > 0 && kappa != Rat(1, 2)) out.insert(1 - kappa);
    }
    return out;
}

void fill_linear_table(Divisor& d, int c, int ex, int ey, int maxdeg) {
    d.c = c;
    d.e.clear();
    for (int a = 0; a <= maxdeg; ++a)
        for (int b = 0; a + b <= maxdeg; ++b) d.e[{a, b}] = a * ex + b * ey;
}

const std::vector<std::string>& catalog_types() {
    static const std::vector<std::string> t = {"A1", "A2", "A3", "A5", "D4", "D6",
                                               "x3y6", "ord4", "tac2", "ord5", "ord6"};
    return t;
}

int catalog_branches(const std::string& type) {
    auto it = raw_catalog().find(type);
    if (it == raw_catalog().end()) throw Error(ErrorKind::UnknownCombination, "unknown singularity type " + type);
    return static_cast<int>(it->second.front().m.size());
}

ResolutionData catalog_resolution(const std::string& type, const std::vector<int>& eps) {
    auto it = raw_catalog().find(type);
    if (it == raw_catalog().end()) throw Error(ErrorKind::UnknownCombination, "unknown singularity type " + type);
    if (static_cast<int>(eps.size()) != catalog_branches(type))
        throw Error(ErrorKind::UnknownCombination, type + " has " + std::to_string(catalog_branches(type)) + " branches");
    for (int e : eps)
        if (e < 1) throw Error(ErrorKind::InvalidInput, "multiplicities must be positive");
    ResolutionData res;
    for (const auto& rd : it->second) {
        Divisor d;
        d.N = 0;
        for (size_t j = 0; j < eps.size(); ++j) d.N += rd.m[j] * eps[j];
        d.chi = rd.chi;
        res.divisors.push_back(d);
    }
    return res;
}

const std::vector<TableRow>& catalog_rows() {
    static const std::vector<TableRow> rows = {
        {1, "A2", {{1}}, {0, 0, 0, 1}, rats({{5, 6}})},
        {1, "A1", {{1, 1}}, {1, 0, 0, 0}, {}},
        {1, "A3", {{2, 1}}, {2, 0, 0, 1}, rats({{5, 6}})},
        {1, "A5", {{1, 1}}, {1, 0, 1, 1}, rats({{2, 3}, {5, 6}})},
        {1, "D4", {{4, 1, 1}, {3, 2, 1}, {2, 2, 2}}, {2, 1, 1, 1}, rats({{2, 3}, {5, 6}})},
        {1, "D4", {{1, 1, 1}}, {2, 0, 1, 0}, rats({{2, 3}})},
        {1, "D6", {{1, 1, 2}}, {2, 1, 1, 1}, rats({{2, 3}, {5, 6}})},
        {1, "x3y6", {{1, 1, 1}}, {2, 2, 1, 2}, rats({{2, 3}, {5, 6}})},
        {1, "ord4", {{3, 1, 1, 1}, {2, 2, 1, 1}}, {3, 2, 2, 2}, rats({{1, 3}, {2, 3}, {5, 6}})},
        {1, "tac2", {{1, 1, 1, 1}}, {3, 2, 2, 2}, rats({{1, 3}, {2, 3}, {5, 6}})},
        {1, "ord5", {{2, 1, 1, 1, 1}}, {4, 3, 3, 3}, rats({{1, 3}, {2, 3}, {5, 6}})},
        {1, "ord6", {{1, 1, 1, 1, 1, 1}}, {5, 4, 4, 4}, rats({{1, 3}, {2, 3}, {5, 6}})},
        {2, "A1", {}, {1, 0, 0}, {}},
        {2, "A3", {{1, 1}}, {1, 0, 1}, rats({{3, 4}})},
        {2, "D4", {{2, 1, 1}}, {2, 1, 1}, rats({{3, 4}})},
        {2, "ord4", {{1, 1, 1, 1}}, {3, 2, 2}, rats({{3, 4}})},
        {3, "A1", {}, {1, 0}, {}},
        {3, "D4", {{1, 1, 1}}, {2, 1}, rats({{2, 3}})},
    };
    return rows;
}

std::vector<unsigned> table_keys(int table) {
    switch (table) {
        case 1: return {1, 2, 3, 6};
        case 2: return {1, 2, 4};
        case 3: return {1, 3};
    }
    throw Error(ErrorKind::InvalidInput, "no table " + std::to_string(table));
}

bool eps_matches(const std::string& type, const std::vector<int>& listed, const std::vector<int>& eps) {
    if (listed.size() != eps.size()) return false;
    // the distinguished branch of D6 is not interchangeable
    if (type == "D6") return listed == eps;
    std::vector<int> a = listed, b = eps;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool CatalogResult::all_match() const {
    return std::all_of(checks.begin(), checks.end(), [](const TableCheck& c) { return c.match; });
}

CatalogResult catalog_lookup(const std::string& type, const std::vector<int>& eps) {
    CatalogResult out;
    bool found = false;
    for (const auto& row : catalog_rows()) {
        if (row.type != type) continue;
        bool hit = false;
        if (row.eps.empty())
            hit = static_cast<int>(eps.size()) == catalog_branches(type) &&
                  std::all_of(eps.begin(), eps.end(), [](int e) { return e >= 1; });
        for (const auto& l : row.eps) hit = hit || eps_matches(type, l, eps);
        if (!hit) continue;
        if (!found) {
            out.alex = acampo_alexander(catalog_resolution(type, eps));
            out.spectrum = row.spectrum;
            found = true;
        }
        TableCheck c;
        c.table = row.table;
        c.expected = row.s;
        c.computed = out.alex.s_vector(table_keys(row.table));
        // the other tracked factors must be absent for the row's key set to describe it
        std::vector<unsigned> keys = table_keys(row.table);
        AlexPoly rest = out.alex;
        for (unsigned k : keys) rest.cyclo.erase(k);
        c.match = c.expected == c.computed && rest.expand().degree() == 0;
        out.checks.push_back(c);
    }
    if (!found) {
        std::string e;
        for (size_t i = 0; i < eps.size(); ++i) e += (i ? "," : "") + std::to_string(eps[i]);
        throw Error(ErrorKind::UnknownCombination, "no table row for " + type + " with eps (" + e + ")");
    }
    return out;
}

AlexPoly catalog_local_alexander(const std::string& type, const std::vector<int>& eps) {
    return catalog_lookup(type, eps).alex;
}

std::optional<ResolutionData> catalog_quasi_adjunction(const std::string& type, const std::vector<int>& eps,
                                                       int maxdeg) {
    if (type == "A1" && eps.size() == 2) {
        ResolutionData r = catalog_resolution(type, eps);
        fill_linear_table(r.divisors[0], 1, 1, 1, maxdeg);
        return r;
    }
    if (type == "A2" && eps == std::vector<int>{1}) {
        ResolutionData r = catalog_resolution(type, eps);
        fill_linear_table(r.divisors[0], 1, 1, 1, maxdeg);
        fill_linear_table(r.divisors[1], 2, 1, 2, maxdeg);
        fill_linear_table(r.divisors[2], 4, 2, 3, maxdeg);
        return r;
    }
    if (type == "D4" && eps_matches(type, {4, 1, 1}, eps)) {
        ResolutionData r = catalog_resolution(type, eps);
        fill_linear_table(r.divisors[0], 2, 1, 1, maxdeg);
        return r;
    }
    return std::nullopt;
}

AlexPoly local_alexander(const SingRecord& s) {
    if (s.resolution) return acampo_alexander(*s.resolution);
    if (s.type == "custom") throw Error(ErrorKind::MissingSingularityData, "custom singularity needs resolution data");
    return acampo_alexander(catalog_resolution(s.type, s.eps));
}

const char* delta_class_name(DeltaClass c) {
    switch (c) {
        case DeltaClass::Essential: return "essential";
        case DeltaClass::Coprime: return "coprime";
        case DeltaClass::Neither: return "neither";
    }
    return "?";
}

DeltaClass classify_delta(const AlexPoly& local, unsigned delta) {
    if (delta == 0) throw Error(ErrorKind::InvalidInput, "delta must be positive");
    UPoly p = local.expand();
    if (all_roots_are_roots_of_unity(p, delta)) return DeltaClass::Essential;
    UPoly t1 = UPoly({Rat(-1), Rat(1)});
    while (p.degree() > 0 && divides(t1, p)) p = divexact(p, t1);
    UPoly target = UPoly::monomial(Rat(1), static_cast<int>(delta)) - UPoly::constant(Rat(1));
    if (gcd(p, target).degree() == 0) return DeltaClass::Coprime;
    return DeltaClass::Neither;
}

DeltaClass classify_delta(const SingRecord& s, unsigned delta) { return classify_delta(local_alexander(s), delta); }

}  // namespace qtoric
