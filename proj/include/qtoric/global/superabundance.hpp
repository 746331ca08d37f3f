#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/algebra/alexpoly.hpp"
#include "qtoric/multipoly/tripoly.hpp"
#include "qtoric/numeric/complex.hpp"

namespace qtoric {

using ExactPoint = std::array<FieldElem, 3>;
using NumericPoint = std::array<numeric::Complex, 3>;

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Exponents of the degree-m monomials, x-degree descending then y-degree descending.
std::vector<Exp> monomials_of_degree(int m);
int monomial_count(int m);  // C(m+2, 2)

// One row per point, one column per degree-m monomial.
Matrix<FieldElem> interpolation_matrix(const std::vector<ExactPoint>& pts, int m);
Matrix<numeric::Complex> interpolation_matrix(const std::vector<NumericPoint>& pts, int m);

// Throws InvalidInput for [0:0:0] or repeated points.
void check_distinct(const std::vector<ExactPoint>& pts);

int exact_rank(Matrix<FieldElem> M);

struct RankCertificate {
    int rank = 0;
    unsigned bits = 0;
    int tau_log2 = 0;
    double max_residual_log2 = 0;   // largest entry left after the kept pivots
    double min_pivot_log2 = 0;      // smallest kept pivot
};

// Complete pivoting on row-normalized entries at `bits` precision. Pivots above tau count;
// a pivot within [tau/2, 2 tau] throws RankUncertified.
RankCertificate numeric_rank(const Matrix<numeric::Complex>& M, unsigned bits = 256, int tau_log2 = -64);

struct Superabundance {
    int m = 0;
    int points = 0;
    int columns = 0;
    int rank = 0;
    int h0 = 0, chi = 0, h1 = 0;
    std::optional<RankCertificate> certificate;  // numeric path only
};

Superabundance superabundance_from_rank(int points, int m, int rank);
Superabundance superabundance(const std::vector<ExactPoint>& pts, int m);
// Points are embedded at the given precision (exact points through their field embedding).
Superabundance superabundance_numeric(const std::vector<NumericPoint>& pts, int m, unsigned bits = 256,
                                      int tau_log2 = -64);

std::vector<NumericPoint> embed_points(const std::vector<ExactPoint>& pts);

struct CuspidalResult {
    AlexPoly alex;
    int degree = 0;
    int s = 0;
    int cusps = 0;
    int nodes = 0;
    std::optional<Superabundance> sup;
    std::string warning;
};

// Degree d - 3 - d/6 through the cusps. Cusps are located and classified unless supplied.
// Throws NotCuspidalNodal when a singular point is neither a node nor a cusp.
CuspidalResult alexander_cuspidal(const TriPoly& C, const std::optional<std::vector<ExactPoint>>& cusps = std::nullopt);

struct BoundReport {
    int degree = 0;        // d
    int alex_degree = 0;   // deg Delta
    int bound = 0;         // floor(5d/3 - 2)
    bool pass = false;
    int slack = 0;
    struct Mode {
        unsigned delta = 0;
        int value = 0;     // s3, s4 or s3 + s6
        int bound = 0;     // floor(5d/6 - 1)
        bool pass = false;
    };
    std::vector<Mode> modes;
    bool all_pass() const;
};

// delta in {3, 4, 6}; 0 checks all three modes.
BoundReport check_degree_bound(int d, const AlexPoly& alex, unsigned delta = 0);

}  // namespace qtoric
