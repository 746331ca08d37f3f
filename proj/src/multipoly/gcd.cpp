#include "qtoric/multipoly/gcd.hpp"

#include <algorithm>
#include <climits>

#include "qtoric/multipoly/modular.hpp"

namespace qtoric {

namespace {

using modular::ModElem;
using modular::ModRing;
using MPoly = UPolyT<ModElem>;

// Polynomial in x with coefficients in R[y]; index = power of x.
template <class T>
using BiDense = std::vector<UPolyT<T>>;

template <class T>
void trim(BiDense<T>& d) {
    while (!d.empty() && d.back().is_zero()) d.pop_back();
}

template <class T>
int deg_y(const BiDense<T>& d) {
    int m = -1;
    for (const auto& c : d) m = std::max(m, c.degree());
    return m;
}

template <class T>
UPolyT<T> content(const BiDense<T>& d) {
    UPolyT<T> g;
    for (const auto& c : d) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

template <class T>
BiDense<T> div_content(const BiDense<T>& d, const UPolyT<T>& c) {
    BiDense<T> r(d.size());
    for (size_t i = 0; i < d.size(); ++i) r[i] = d[i].is_zero() ? UPolyT<T>() : divexact(d[i], c);
    return r;
}

template <class T>
UPolyT<T> eval_y(const BiDense<T>& d, const T& y0) {
    std::vector<T> c(d.size());
    for (size_t i = 0; i < d.size(); ++i) c[i] = d[i].eval(y0);
    return UPolyT<T>(std::move(c));
}

template <class T>
bool divides(BiDense<T> a, const BiDense<T>& b) {
    trim(a);
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    if (da < 0) return true;
    if (da < db) return false;
    for (int i = da; i >= db; --i) {
        if (a[i].is_zero()) continue;
        auto c = try_divexact(a[i], b[db]);
        if (!c) return false;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= *c * b[j];
    }
    for (int i = 0; i < db; ++i)
        if (!a[i].is_zero()) return false;
    return true;
}

template <class T>
UPolyT<T> interpolate(const std::vector<T>& nodes, const std::vector<T>& values) {
    size_t n = nodes.size();
    std::vector<T> dd = values;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j]);
    UPolyT<T> r = UPolyT<T>::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) r = r * UPolyT<T>::linear_root(nodes[i]) + UPolyT<T>::constant(dd[i]);
    return r;
}

// Brown's evaluation/interpolation gcd for polynomials primitive in x with positive x-degree.
template <class T>
BiDense<T> gcd_primitive(const BiDense<T>& f, const BiDense<T>& g) {
    const auto& lf = f.back();
    const auto& lg = g.back();
    UPolyT<T> gamma = gcd(lf, lg);
    int bound = gamma.degree() + std::min(deg_y(f), deg_y(g));
    int cur = std::min(static_cast<int>(f.size()), static_cast<int>(g.size())) - 1;
    std::vector<T> nodes;
    std::vector<UPolyT<T>> images;
    int tries = 0;
    for (long y0 = 1;; ++y0) {
        if (++tries > 4 * (bound + cur + 8) + 200)
            throw Error(ErrorKind::InvalidInput, "bivariate gcd: interpolation did not stabilize");
        T v(y0);
        if (lf.eval(v).is_zero() || lg.eval(v).is_zero()) continue;
        UPolyT<T> h = gcd(eval_y(f, v), eval_y(g, v));
        if (h.degree() == 0) return BiDense<T>{UPolyT<T>::constant(T(1))};
        if (h.degree() > cur) continue;
        if (h.degree() < cur) {
            cur = h.degree();
            nodes.clear();
            images.clear();
        }
        nodes.push_back(v);
        images.push_back(gamma.eval(v) * h);
        if (static_cast<int>(nodes.size()) < bound + 1) continue;
        BiDense<T> cand(cur + 1);
        for (int i = 0; i <= cur; ++i) {
            std::vector<T> vals(nodes.size());
            for (size_t k = 0; k < nodes.size(); ++k) vals[k] = images[k].coeff(i);
            cand[i] = interpolate(nodes, vals);
        }
        trim(cand);
        if (cand.empty()) continue;
        cand = div_content(cand, content(cand));
        if (divides(f, cand) && divides(g, cand)) return cand;
    }
}

template <class T>
BiDense<T> gcd_dense(const BiDense<T>& df, const BiDense<T>& dg) {
    UPolyT<T> cf = content(df), cg = content(dg);
    UPolyT<T> c = gcd(cf, cg);
    BiDense<T> pf = div_content(df, cf), pg = div_content(dg, cg);
    BiDense<T> h{UPolyT<T>::constant(T(1))};
    if (pf.size() > 1 && pg.size() > 1) h = gcd_primitive(pf, pg);
    for (auto& coef : h) coef = coef * c;
    return h;
}

std::optional<BiDense<ModElem>> to_dense_mod(const TriPoly& f, const ModRing& R) {
    int dx = std::max(0, f.degree_in(Var::X)), dy = std::max(0, f.degree_in(Var::Y));
    std::vector<std::vector<ModElem>> coeffs(dx + 1, std::vector<ModElem>(dy + 1));
    for (const auto& [key, c] : f.terms()) {
        Exp e = unpack(key);
        auto m = R.reduce(c);
        if (!m) return std::nullopt;
        coeffs[e[0]][e[1]] = ModElem(*m);
    }
    BiDense<ModElem> d(dx + 1);
    for (int i = 0; i <= dx; ++i) d[i] = MPoly(std::move(coeffs[i]));
    return d;
}

// Image of the gcd modulo one prime, normalized so its lexicographic leading coefficient is 1.
struct ModImage {
    int degx = -1, degy = -1;
    BiDense<ModElem> g;
};

std::optional<ModImage> mod_gcd(const TriPoly& f, const TriPoly& g, const ModRing& R) {
    modular::RingScope scope(&R);
    auto df = to_dense_mod(f, R), dg = to_dense_mod(g, R);
    if (!df || !dg) return std::nullopt;
    // leading coefficients must survive so that degrees are preserved
    if (static_cast<int>(df->size()) != f.degree_in(Var::X) + 1 || df->back().is_zero()) return std::nullopt;
    if (static_cast<int>(dg->size()) != g.degree_in(Var::X) + 1 || dg->back().is_zero()) return std::nullopt;
    if (df->back().degree() != f.lead_term().first[1] || dg->back().degree() != g.lead_term().first[1])
        return std::nullopt;
    try {
        ModImage im;
        im.g = gcd_dense(*df, *dg);
        trim(im.g);
        ModElem inv = im.g.back().lead().inverse();
        for (auto& c : im.g) c = inv * c;
        im.degx = static_cast<int>(im.g.size()) - 1;
        im.degy = deg_y(im.g);
        return im;
    } catch (const modular::ZeroDivisor&) {
        return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    }
}

TriPoly gcd_xy(const TriPoly& f, const TriPoly& g) {
    Exp mf = f.monomial_content(), mg = g.monomial_content();
    Exp m{std::min(mf[0], mg[0]), std::min(mf[1], mg[1]), 0};
    TriPoly a = f.divide_monomial(mf), b = g.divide_monomial(mg);
    TriPoly mono = TriPoly::monomial(FieldElem(1), m[0], m[1], 0);
    if (a.is_constant() || b.is_constant()) return mono;

    FieldPtr F = a.field() ? a.field() : b.field();
    const int dim = F ? F->dim() : 1;
    int best_x = INT_MAX, best_y = INT_MAX;
    Int M = 1;
    std::vector<Int> acc;  // CRT accumulators, layout [(i * (degy+1) + j) * dim + t]
    std::optional<TriPoly> previous;
    int trivial_votes = 0;
    for (int j = 0; j < 400; ++j) {
        modular::u64 p = modular::nth_prime(j);
        auto R = ModRing::make(F, p);
        if (!R) continue;
        auto im = mod_gcd(a, b, *R);
        if (!im) continue;
        if (im->degx == 0 && im->degy == 0) {
            if (++trivial_votes >= 2) return mono;
            continue;
        }
        if (im->degx > best_x || (im->degx == best_x && im->degy > best_y)) continue;
        const int width = im->degy + 1;
        const size_t n = static_cast<size_t>(im->degx + 1) * width * dim;
        if (im->degx < best_x || im->degy < best_y) {
            best_x = im->degx;
            best_y = im->degy;
            M = 1;
            acc.assign(n, Int(0));
            previous.reset();
        }
        // combine: x = acc + M * ((v - acc) * M^{-1} mod p)
        Int P(static_cast<unsigned long>(p));
        Int Minv;
        Int Mmod = M % P;
        mpz_invert(Minv.get_mpz_t(), Mmod.get_mpz_t(), P.get_mpz_t());
        for (int i = 0; i <= best_x; ++i) {
            const auto& cs = im->g[i].coeffs();
            for (int jj = 0; jj < width; ++jj) {
                for (int t = 0; t < dim; ++t) {
                    modular::u64 v = jj < static_cast<int>(cs.size()) ? cs[jj].coords()[t] : 0;
                    Int& x = acc[(static_cast<size_t>(i) * width + jj) * dim + t];
                    Int diff = (Int(static_cast<unsigned long>(v)) - x) % P;
                    if (diff < 0) diff += P;
                    Int k = (diff * Minv) % P;
                    x += M * k;
                }
            }
        }
        M *= P;
        // rational reconstruction of every coordinate
        TriPoly cand;
        bool ok = true;
        for (int i = 0; i <= best_x && ok; ++i) {
            for (int jj = 0; jj < width && ok; ++jj) {
                std::vector<Rat> coords(dim);
                bool nonzero = false;
                for (int t = 0; t < dim; ++t) {
                    Int x = acc[(static_cast<size_t>(i) * width + jj) * dim + t];
                    if (x > M / 2) x -= M;
                    auto q = modular::rational_reconstruct(x, M);
                    if (!q) {
                        ok = false;
                        break;
                    }
                    coords[t] = *q;
                    nonzero = nonzero || sgn(*q) != 0;
                }
                if (ok && nonzero) {
                    FieldElem c = F ? FieldElem(F, coords) : FieldElem(coords[0]);
                    cand += TriPoly::monomial(c, i, jj, 0);
                }
            }
        }
        if (!ok) continue;
        if (previous && *previous == cand) {
            if (try_divexact(a, cand) && try_divexact(b, cand)) return (cand * mono).monic();
        }
        previous = cand;
    }
    throw Error(ErrorKind::InvalidInput, "modular gcd did not converge");
}

}  // namespace

TriPoly content_in_x(const TriPoly& f) {
    if (!f.is_free_of(Var::Z)) throw Error(ErrorKind::InvalidInput, "content_in_x expects no z");
    TriPoly g;
    for (const auto& c : coefficients_in(f, Var::X)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

TriPoly poly_gcd(const TriPoly& f, const TriPoly& g) {
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_free_of(Var::Z) && g.is_free_of(Var::Z)) return gcd_xy(f, g);
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw Error(ErrorKind::InvalidInput, "poly_gcd needs z-free or homogeneous inputs");
    // Homogeneous: the gcd is homogeneous; split off the power of z first.
    int kz = std::min(f.min_degree_in(Var::Z), g.min_degree_in(Var::Z));
    TriPoly a = f.divide_monomial({0, 0, f.min_degree_in(Var::Z)});
    TriPoly b = g.divide_monomial({0, 0, g.min_degree_in(Var::Z)});
    TriPoly h = gcd_xy(a.dehomogenize(), b.dehomogenize());
    return h.homogenize(h.degree()).shift(0, 0, kz).monic();
}

KPoly kpoly_gcd(const KPoly& a, const KPoly& b) {
    auto lift = [](const KPoly& p) {
        TriPoly t;
        for (size_t i = 0; i < p.coeffs().size(); ++i)
            t += TriPoly::monomial(p.coeffs()[i], static_cast<int>(i), 0, 0);
        return t;
    };
    TriPoly g = poly_gcd(lift(a), lift(b));
    std::vector<FieldElem> c(std::max(0, g.degree() + 1));
    for (const auto& [key, v] : g.terms()) c[unpack(key)[0]] = v;
    return KPoly(std::move(c));
}

}  // namespace qtoric
