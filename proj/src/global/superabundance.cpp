#include "qtoric/global/superabundance.hpp"

#include <algorithm>
#include <cmath>

#include "qtoric/error.hpp"
#include "qtoric/singularities/points.hpp"

namespace qtoric {

using numeric::Complex;
using numeric::Real;

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

double log2_of(const Real& r) {
    if (r == 0) return -HUGE_VAL;
    return static_cast<double>(log2(r));
}

bool same_point(const ExactPoint& a, const ExactPoint& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

}  // namespace

std::vector<Exp> monomials_of_degree(int m) {
    if (m < 0) throw Error(ErrorKind::InvalidInput, "negative degree");
    std::vector<Exp> out;
    for (int i = m; i >= 0; --i)
        for (int j = m - i; j >= 0; --j) out.push_back({i, j, m - i - j});
    return out;
}

int monomial_count(int m) { return m < 0 ? 0 : (m + 1) * (m + 2) / 2; }

Matrix<FieldElem> interpolation_matrix(const std::vector<ExactPoint>& pts, int m) {
    auto mons = monomials_of_degree(m);
    Matrix<FieldElem> M;
    for (const auto& p : pts) {
        std::array<std::vector<FieldElem>, 3> pw;
        for (int v = 0; v < 3; ++v) {
            pw[v].push_back(FieldElem(1));
            for (int e = 1; e <= m; ++e) pw[v].push_back(pw[v].back() * p[v]);
        }
        std::vector<FieldElem> row;
        for (const auto& e : mons) row.push_back(pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
        M.push_back(std::move(row));
    }
    return M;
}

Matrix<Complex> interpolation_matrix(const std::vector<NumericPoint>& pts, int m) {
    auto mons = monomials_of_degree(m);
    Matrix<Complex> M;
    for (const auto& p : pts) {
        std::array<std::vector<Complex>, 3> pw;
        for (int v = 0; v < 3; ++v) {
            pw[v].push_back(Complex(1));
            for (int e = 1; e <= m; ++e) pw[v].push_back(pw[v].back() * p[v]);
        }
        std::vector<Complex> row;
        for (const auto& e : mons) row.push_back(pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
        M.push_back(std::move(row));
    }
    return M;
}

void check_distinct(const std::vector<ExactPoint>& pts) {
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i][0].is_zero() && pts[i][1].is_zero() && pts[i][2].is_zero())
            throw Error(ErrorKind::InvalidInput, "[0:0:0] is not a point");
        for (size_t j = 0; j < i; ++j)
            if (same_point(pts[i], pts[j]))
                throw Error(ErrorKind::InvalidInput, "points " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    }
}

int exact_rank(Matrix<FieldElem> M) {
    if (M.empty()) return 0;
    const size_t rows = M.size(), cols = M[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // prefer a rational pivot, it keeps the elimination cheap
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i) {
            if (M[i][c].is_zero()) continue;
            if (piv == rows) piv = i;
            if (M[i][c].is_rational()) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        std::swap(M[r], M[piv]);
        FieldElem inv = M[r][c].inverse();
        for (size_t j = c; j < cols; ++j) M[r][j] *= inv;
        for (size_t i = r + 1; i < rows; ++i) {
            if (M[i][c].is_zero()) continue;
            FieldElem f = M[i][c];
            for (size_t j = c; j < cols; ++j)
                if (!M[r][j].is_zero()) M[i][j] -= f * M[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

RankCertificate numeric_rank(const Matrix<Complex>& input, unsigned bits, int tau_log2) {
    numeric::PrecisionScope scope(bits);
    RankCertificate cert;
    cert.bits = bits;
    cert.tau_log2 = tau_log2;
    cert.min_pivot_log2 = HUGE_VAL;
    if (input.empty()) {
        cert.max_residual_log2 = -HUGE_VAL;
        return cert;
    }
    const Real tau = numeric::two_pow(tau_log2);
    Matrix<Complex> M;
    // rows rescaled to unit max norm, recomputed at this precision
    for (const auto& row : input) {
        Real mx = 0;
        for (const auto& v : row) mx = std::max(mx, v.abs());
        std::vector<Complex> out;
        for (const auto& v : row) out.push_back(mx == 0 ? Complex() : Complex(Real(v.re) / mx, Real(v.im) / mx));
        M.push_back(std::move(out));
    }
    const size_t rows = M.size(), cols = M[0].size();
    std::vector<size_t> ri(rows), ci(cols);
    for (size_t i = 0; i < rows; ++i) ri[i] = i;
    for (size_t j = 0; j < cols; ++j) ci[j] = j;
    size_t r = 0;
    Real residual = 0;
    for (; r < std::min(rows, cols); ++r) {
        Real best = -1;
        size_t bi = r, bj = r;
        for (size_t i = r; i < rows; ++i)
            for (size_t j = r; j < cols; ++j) {
                Real a = M[ri[i]][ci[j]].abs();
                if (a > best) {
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        if (best >= tau / 2 && best <= 2 * tau)
            throw Error(ErrorKind::RankUncertified, "pivot of size 2^" + std::to_string(log2_of(best)) + " is too close to tau");
        if (best < tau) {
            residual = best;
            break;
        }
        std::swap(ri[r], ri[bi]);
        std::swap(ci[r], ci[bj]);
        cert.min_pivot_log2 = std::min(cert.min_pivot_log2, log2_of(best));
        const Complex p = M[ri[r]][ci[r]];
        for (size_t i = r + 1; i < rows; ++i) {
            Complex f = M[ri[i]][ci[r]] / p;
            if (f.norm2() == 0) continue;
            for (size_t j = r; j < cols; ++j) M[ri[i]][ci[j]] -= f * M[ri[r]][ci[j]];
        }
    }
    cert.rank = static_cast<int>(r);
    cert.max_residual_log2 = log2_of(residual);
    return cert;
}

Superabundance superabundance_from_rank(int points, int m, int rank) {
    Superabundance s;
    s.m = m;
    s.points = points;
    s.columns = monomial_count(m);
    s.rank = rank;
    s.h0 = s.columns - rank;
    s.chi = s.columns - points;
    s.h1 = s.h0 - s.chi;
    if (s.h0 < 0 || s.h1 < 0) throw Error(ErrorKind::InvalidInput, "inconsistent rank");
    return s;
}

Superabundance superabundance(const std::vector<ExactPoint>& pts, int m) {
    check_distinct(pts);
    return superabundance_from_rank(static_cast<int>(pts.size()), m, exact_rank(interpolation_matrix(pts, m)));
}

Superabundance superabundance_numeric(const std::vector<NumericPoint>& pts, int m, unsigned bits, int tau_log2) {
    numeric::PrecisionScope scope(bits);
    // separation of normalized points
    const Real sep = numeric::two_pow(-static_cast<int>(bits / 4));
    std::vector<NumericPoint> norm;
    for (const auto& p : pts) {
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (p[i].abs() > p[k].abs()) k = i;
        if (p[k].abs() == 0) throw Error(ErrorKind::InvalidInput, "[0:0:0] is not a point");
        NumericPoint q;
        for (int i = 0; i < 3; ++i) q[i] = p[i] / p[k];
        for (const auto& o : norm) {
            Real d = 0;
            for (int i = 0; i < 3; ++i) d = std::max(d, (o[i] - q[i]).abs());
            if (d < sep) throw Error(ErrorKind::InvalidInput, "points are not separated");
        }
        norm.push_back(q);
    }
    RankCertificate cert = numeric_rank(interpolation_matrix(norm, m), bits, tau_log2);
    Superabundance s = superabundance_from_rank(static_cast<int>(pts.size()), m, cert.rank);
    s.certificate = cert;
    return s;
}

std::vector<NumericPoint> embed_points(const std::vector<ExactPoint>& pts) {
    std::vector<NumericPoint> out;
    for (const auto& p : pts) {
        NumericPoint q;
        for (int i = 0; i < 3; ++i) q[i] = numeric::Embedding(p[i].is_rational() ? nullptr : p[i].field())(p[i]);
        out.push_back(q);
    }
    return out;
}

CuspidalResult alexander_cuspidal(const TriPoly& C, const std::optional<std::vector<ExactPoint>>& cusps) {
    if (C.is_zero() || !C.is_homogeneous()) throw Error(ErrorKind::InvalidInput, "curve must be homogeneous");
    CuspidalResult res;
    res.degree = C.degree();
    if (res.degree % 6 != 0) {
        res.warning = "DegreeNotDivisible: degree " + std::to_string(res.degree) + " is not a multiple of 6";
        return res;
    }
    std::vector<ExactPoint> cp;
    if (cusps) {
        for (const auto& p : *cusps)
            if (classify_node_cusp(C, p) != NodeCusp::Cusp)
                throw Error(ErrorKind::NotCuspidalNodal, "supplied point is not a cusp");
        cp = *cusps;
    } else {
        for (const auto& p : find_singular_points(C)) {
            if (!p.exact) throw Error(ErrorKind::NotCuspidalNodal, "singular point outside the field; supply the cusps");
            NodeCusp t = classify_node_cusp(C, p.coords);
            if (t == NodeCusp::Other) throw Error(ErrorKind::NotCuspidalNodal, "singular point is neither a node nor a cusp");
            if (t == NodeCusp::Node)
                ++res.nodes;
            else
                cp.push_back(p.coords);
        }
    }
    res.cusps = static_cast<int>(cp.size());
    const int m = res.degree - 3 - res.degree / 6;
    res.sup = superabundance(cp, m);
    res.s = res.sup->h1;
    res.alex = AlexPoly::from_multiplicities({{6, res.s}});
    return res;
}

bool BoundReport::all_pass() const {
    return pass && std::all_of(modes.begin(), modes.end(), [](const Mode& m) { return m.pass; });
}

BoundReport check_degree_bound(int d, const AlexPoly& alex, unsigned delta) {
    BoundReport r;
    r.degree = d;
    r.alex_degree = alex.degree();
    r.bound = floor_div(5 * d - 6, 3);
    r.pass = r.alex_degree <= r.bound;
    r.slack = r.bound - r.alex_degree;
    std::vector<unsigned> ds = delta == 0 ? std::vector<unsigned>{3, 4, 6} : std::vector<unsigned>{delta};
    for (unsigned dl : ds) {
        BoundReport::Mode m;
        m.delta = dl;
        if (dl == 3)
            m.value = alex.s(3);
        else if (dl == 4)
            m.value = alex.s(4);
        else if (dl == 6)
            m.value = alex.s(3) + alex.s(6);
        else
            throw Error(ErrorKind::InvalidInput, "delta mode must be 3, 4 or 6");
        m.bound = floor_div(5 * d - 6, 6);
        m.pass = m.value <= m.bound;
        r.modes.push_back(m);
    }
    return r;
}

}  // namespace qtoric
