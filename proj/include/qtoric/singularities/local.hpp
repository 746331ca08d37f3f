#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/algebra/alexpoly.hpp"

namespace qtoric {

// One exceptional divisor E_i: N = sum_j m_ij eps_j, chi = Euler characteristic of E_i minus
// the other components. c and e(phi) are the quasi-adjunction data, when known.
struct Divisor {
    int N = 1;
    int chi = 0;
    std::optional<int> c;
    std::map<std::pair<int, int>, int> e;  // (a, b) -> multiplicity of x^a y^b
};

struct ResolutionData {
    std::vector<Divisor> divisors;
    bool has_table() const;
};

// (t-1) prod (1 - t^N_i)^(-chi_i), normalized. Throws NotAPolynomial.
AlexPoly acampo_alexander(const ResolutionData& res);

// kappa_phi = max_k max(0, (N_k - e_k(phi) - c_k - 1) / N_k) over the listed monomials; returns
// { 1 - kappa : kappa > 0, kappa != 1/2 }. Throws MissingTable.
std::set<Rat> quasi_adjunction_spectrum(const ResolutionData& res);

// Fills e for every monomial x^a y^b with a + b <= maxdeg from e(x), e(y).
void fill_linear_table(Divisor& d, int c, int ex, int ey, int maxdeg);

const std::vector<std::string>& catalog_types();
int catalog_branches(const std::string& type);

// Frozen resolution data of a catalog type for an arbitrary eps of the right length.
ResolutionData catalog_resolution(const std::string& type, const std::vector<int>& eps);

struct TableRow {
    int table = 1;  // 1: (s1,s2,s3,s6), 2: (s1,s2,s4), 3: (s1,s3)
    std::string type;
    std::vector<std::vector<int>> eps;  // listed representatives; empty means any eps
    std::vector<int> s;
    std::vector<Rat> spectrum;
};

const std::vector<TableRow>& catalog_rows();
std::vector<unsigned> table_keys(int table);

// Whether eps matches a representative up to the permutations the row allows.
bool eps_matches(const std::string& type, const std::vector<int>& listed, const std::vector<int>& eps);

struct TableCheck {
    int table = 1;
    std::vector<int> expected, computed;
    bool match = false;
};

struct CatalogResult {
    AlexPoly alex;
    std::vector<TableCheck> checks;
    std::optional<std::vector<Rat>> spectrum;  // table value
    bool all_match() const;
};

// Only listed (type, eps) combinations; throws UnknownCombination otherwise.
CatalogResult catalog_lookup(const std::string& type, const std::vector<int>& eps);
AlexPoly catalog_local_alexander(const std::string& type, const std::vector<int>& eps);

// Built-in quasi-adjunction data (A1, A2, D4 with eps (4,1,1)); nullopt otherwise.
std::optional<ResolutionData> catalog_quasi_adjunction(const std::string& type, const std::vector<int>& eps,
                                                       int maxdeg = 8);

struct SingRecord {
    std::string type = "custom";
    std::vector<int> eps;
    std::optional<ResolutionData> resolution;  // required for custom
};

// Local Alexander polynomial for any eps (catalog types use the frozen data).
AlexPoly local_alexander(const SingRecord& s);

enum class DeltaClass { Essential, Coprime, Neither };
const char* delta_class_name(DeltaClass c);

DeltaClass classify_delta(const AlexPoly& local, unsigned delta);
DeltaClass classify_delta(const SingRecord& s, unsigned delta);

}  // namespace qtoric
