#include "qtoric/multipoly/tripoly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <unordered_map>

namespace qtoric {

namespace {

int exp_of(const Exp& e, Var v) { return e[static_cast<int>(v)]; }

std::uint64_t key_of(const Exp& e) { return pack(e[0], e[1], e[2]); }

// Coefficients as integer coordinates over one common denominator; entries are
// (slot offset i + w*j, value) for the nonzero coordinates of a^i b^j.
struct Lifted {
    Int den = 1;
    std::vector<std::pair<std::uint64_t, std::vector<std::pair<int, Int>>>> terms;
};

Lifted lift(const TriPoly::Terms& t, int d0, int w) {
    Lifted L;
    for (const auto& [key, c] : t) mpz_lcm(L.den.get_mpz_t(), L.den.get_mpz_t(), c.denominator().get_mpz_t());
    L.terms.reserve(t.size());
    for (const auto& [key, c] : t) {
        Int scale = L.den / c.denominator();
        std::vector<std::pair<int, Int>> coords;
        const auto& nums = c.numerators();
        for (int idx = 0; idx < static_cast<int>(nums.size()); ++idx)
            if (sgn(nums[idx]) != 0) coords.emplace_back(idx % d0 + w * (idx / d0), nums[idx] * scale);
        L.terms.emplace_back(key, std::move(coords));
    }
    return L;
}

FieldPtr field_of(const TriPoly::Terms& t) {
    for (const auto& [key, c] : t)
        if (c.field()) return c.field();
    return nullptr;
}

}  // namespace

TriPoly::TriPoly(const FieldElem& c) {
    if (!c.is_zero()) t_.emplace(0, c);
}

TriPoly TriPoly::var(Var v) {
    Exp e{0, 0, 0};
    e[static_cast<int>(v)] = 1;
    return monomial(FieldElem(1), e[0], e[1], e[2]);
}

TriPoly TriPoly::monomial(const FieldElem& c, int i, int j, int k) {
    TriPoly p;
    if (!c.is_zero()) p.t_.emplace(pack(i, j, k), c);
    return p;
}

void TriPoly::add_term(std::uint64_t key, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

bool TriPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }

FieldElem TriPoly::constant_value() const { return coeff(0, 0, 0); }

FieldElem TriPoly::coeff(int i, int j, int k) const {
    auto it = t_.find(pack(i, j, k));
    return it == t_.end() ? FieldElem(0) : it->second;
}

int TriPoly::degree() const {
    int d = -1;
    for (const auto& [key, c] : t_) {
        Exp e = unpack(key);
        d = std::max(d, e[0] + e[1] + e[2]);
    }
    return d;
}

int TriPoly::min_degree() const {
    if (t_.empty()) return -1;
    int d = INT_MAX;
    for (const auto& [key, c] : t_) {
        Exp e = unpack(key);
        d = std::min(d, e[0] + e[1] + e[2]);
    }
    return d;
}

int TriPoly::degree_in(Var v) const {
    int d = -1;
    for (const auto& [key, c] : t_) d = std::max(d, exp_of(unpack(key), v));
    return d;
}

int TriPoly::min_degree_in(Var v) const {
    if (t_.empty()) return -1;
    int d = INT_MAX;
    for (const auto& [key, c] : t_) d = std::min(d, exp_of(unpack(key), v));
    return d;
}

bool TriPoly::is_homogeneous() const {
    if (t_.empty()) return true;
    return degree() == min_degree();
}

std::pair<Exp, FieldElem> TriPoly::lead_term() const {
    if (t_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading term of the zero polynomial");
    const auto& [key, c] = *t_.rbegin();
    return {unpack(key), c};
}

FieldPtr TriPoly::field() const {
    for (const auto& [key, c] : t_)
        if (c.field()) return c.field();
    return nullptr;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
    for (const auto& [key, c] : o.t_) add_term(key, c);
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
    for (const auto& [key, c] : o.t_) add_term(key, -c);
    return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    const TriPoly& small = a.size() <= b.size() ? a : b;
    const TriPoly& big = a.size() <= b.size() ? b : a;
    if (small.size() >= 4) {
        FieldPtr F = field_of(a.t_);
        if (!F) F = field_of(b.t_);
        const int d0 = F ? F->base_degree() : 1, k = F ? F->radical_degree() : 1, w = 2 * d0 - 1;
        const size_t S = static_cast<size_t>(w) * (2 * k - 1);
        Lifted la = lift(small.t_, d0, w), lb = lift(big.t_, d0, w);
        std::unordered_map<std::uint64_t, size_t> index;
        index.reserve(small.size() * 4);
        std::vector<std::uint64_t> keys;
        std::vector<Int> acc;
        for (const auto& [ka, ca] : la.terms)
            for (const auto& [kb, cb] : lb.terms) {
                auto [it, fresh] = index.try_emplace(ka + kb, keys.size());
                if (fresh) {
                    keys.push_back(ka + kb);
                    acc.resize(acc.size() + S);
                }
                Int* slot = acc.data() + it->second * S;
                for (const auto& [oa, va] : ca)
                    for (const auto& [ob, vb] : cb)
                        mpz_addmul(slot[oa + ob].get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
            }
        std::vector<size_t> order(keys.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return keys[x] < keys[y]; });
        const Int den = la.den * lb.den;
        for (size_t i : order) {
            std::vector<Int> slots(std::make_move_iterator(acc.begin() + i * S),
                                   std::make_move_iterator(acc.begin() + (i + 1) * S));
            Int d = den;
            if (F) F->reduce_product(slots, d);
            FieldElem c = FieldElem::from_integers(F, std::move(slots), std::move(d));
            if (!c.is_zero()) r.t_.emplace_hint(r.t_.end(), keys[i], std::move(c));
        }
        return r;
    }
    for (const auto& [ka, ca] : small.t_) {
        auto hint = r.t_.begin();
        for (const auto& [kb, cb] : big.t_) {
            std::uint64_t key = ka + kb;
            FieldElem prod = ca * cb;
            hint = r.t_.lower_bound(key);
            if (hint != r.t_.end() && hint->first == key) {
                hint->second += prod;
            } else {
                hint = r.t_.emplace_hint(hint, key, std::move(prod));
            }
        }
    }
    for (auto it = r.t_.begin(); it != r.t_.end();) {
        if (it->second.is_zero())
            it = r.t_.erase(it);
        else
            ++it;
    }
    return r;
}

TriPoly operator*(const FieldElem& c, const TriPoly& a) {
    TriPoly r;
    if (c.is_zero()) return r;
    for (const auto& [key, v] : a.t_) r.t_.emplace_hint(r.t_.end(), key, c * v);
    return r;
}

TriPoly& TriPoly::operator*=(const TriPoly& o) { return *this = *this * o; }

TriPoly TriPoly::operator-() const {
    TriPoly r;
    for (const auto& [key, v] : t_) r.t_.emplace_hint(r.t_.end(), key, -v);
    return r;
}

bool operator==(const TriPoly& a, const TriPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    for (auto ib = b.t_.begin(); ib != b.t_.end(); ++ia, ++ib) {
        if (ia->first != ib->first || ia->second != ib->second) return false;
    }
    return true;
}

TriPoly TriPoly::pow(unsigned e) const {
    TriPoly r(FieldElem(1)), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

TriPoly TriPoly::shift(int i, int j, int k) const {
    TriPoly r;
    std::uint64_t s = pack(i, j, k);
    for (const auto& [key, v] : t_) r.t_.emplace_hint(r.t_.end(), key + s, v);
    return r;
}

FieldElem TriPoly::eval(const FieldElem& x, const FieldElem& y, const FieldElem& z) const {
    int dx = std::max(0, degree_in(Var::X)), dy = std::max(0, degree_in(Var::Y)),
        dz = std::max(0, degree_in(Var::Z));
    auto powers = [](const FieldElem& v, int d) {
        std::vector<FieldElem> p(d + 1);
        p[0] = FieldElem(1);
        for (int i = 1; i <= d; ++i) p[i] = p[i - 1] * v;
        return p;
    };
    auto px = powers(x, dx), py = powers(y, dy), pz = powers(z, dz);
    FieldElem acc(0);
    for (const auto& [key, c] : t_) {
        Exp e = unpack(key);
        acc += c * px[e[0]] * py[e[1]] * pz[e[2]];
    }
    return acc;
}

TriPoly TriPoly::substitute(const TriPoly& gx, const TriPoly& gy, const TriPoly& gz) const {
    if (t_.empty()) return {};
    auto powers = [](const TriPoly& g, int d) {
        std::vector<TriPoly> p(d + 1);
        p[0] = TriPoly(FieldElem(1));
        for (int i = 1; i <= d; ++i) p[i] = p[i - 1] * g;
        return p;
    };
    auto px = powers(gx, std::max(0, degree_in(Var::X)));
    auto py = powers(gy, std::max(0, degree_in(Var::Y)));
    auto pz = powers(gz, std::max(0, degree_in(Var::Z)));
    // Group by x exponent and y exponent to share products.
    TriPoly r;
    std::map<std::pair<int, int>, TriPoly> by_xy;
    for (const auto& [key, c] : t_) {
        Exp e = unpack(key);
        by_xy[{e[0], e[1]}] += c * pz[e[2]];
    }
    std::map<int, TriPoly> by_x;
    for (auto& [xy, p] : by_xy) by_x[xy.first] += p * py[xy.second];
    for (auto& [i, p] : by_x) r += p * px[i];
    return r;
}

TriPoly TriPoly::partial(Var v) const {
    TriPoly r;
    int idx = static_cast<int>(v);
    for (const auto& [key, c] : t_) {
        Exp e = unpack(key);
        if (e[idx] == 0) continue;
        FieldElem nc = c.mul_rat(Rat(e[idx]));
        e[idx] -= 1;
        r.t_.emplace(key_of(e), std::move(nc));
    }
    return r;
}

TriPoly TriPoly::set_var(Var v, const FieldElem& value) const {
    TriPoly r;
    int idx = static_cast<int>(v);
    int d = std::max(0, degree_in(v));
    std::vector<FieldElem> p(d + 1);
    p[0] = FieldElem(1);
    for (int i = 1; i <= d; ++i) p[i] = p[i - 1] * value;
    for (const auto& [key, c] : t_) {
        Exp e = unpack(key);
        FieldElem nc = c * p[e[idx]];
        e[idx] = 0;
        r.add_term(key_of(e), nc);
    }
    return r;
}

TriPoly TriPoly::homogenize(int d) const {
    TriPoly r;
    for (const auto& [key, c] : t_) {
        Exp e = unpack(key);
        if (e[2] != 0) throw Error(ErrorKind::InvalidInput, "homogenize expects a polynomial free of z");
        int k = d - e[0] - e[1];
        if (k < 0) throw Error(ErrorKind::InvalidInput, "homogenize: degree below total degree");
        r.t_.emplace(pack(e[0], e[1], k), c);
    }
    return r;
}

TriPoly TriPoly::permute(Var to_x, Var to_y, Var to_z) const {
    TriPoly r;
    int dest[3] = {static_cast<int>(to_x), static_cast<int>(to_y), static_cast<int>(to_z)};
    for (const auto& [key, c] : t_) {
        Exp e = unpack(key), ne{0, 0, 0};
        for (int i = 0; i < 3; ++i) ne[dest[i]] += e[i];
        r.add_term(key_of(ne), c);
    }
    return r;
}

Exp TriPoly::monomial_content() const {
    if (t_.empty()) return {0, 0, 0};
    Exp m{INT_MAX, INT_MAX, INT_MAX};
    for (const auto& [key, c] : t_) {
        Exp e = unpack(key);
        for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

TriPoly TriPoly::divide_monomial(const Exp& m) const {
    TriPoly r;
    std::uint64_t s = key_of(m);
    for (const auto& [key, c] : t_) {
        Exp e = unpack(key);
        if (e[0] < m[0] || e[1] < m[1] || e[2] < m[2])
            throw Error(ErrorKind::NotDivisible, "monomial does not divide polynomial");
        r.t_.emplace_hint(r.t_.end(), key - s, c);
    }
    return r;
}

TriPoly TriPoly::monic() const {
    if (t_.empty()) return {};
    FieldElem inv = t_.rbegin()->second.inverse();
    return inv * *this;
}

namespace {

std::string monomial_string(const Exp& e) {
    static const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string TriPoly::to_string() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Exp, const FieldElem*>> order;
    for (const auto& [key, c] : t_) order.emplace_back(unpack(key), &c);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        int da = a.first[0] + a.first[1] + a.first[2], db = b.first[0] + b.first[1] + b.first[2];
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, cp] : order) {
        const FieldElem& c = *cp;
        std::string mono = monomial_string(e);
        bool negative = false;
        std::string coeff;
        if (c.is_rational()) {
            Rat v = c.rational_value();
            if (sgn(v) < 0) {
                negative = true;
                v = -v;
            }
            if (v != 1 || mono.empty()) coeff = qtoric::to_string(v);
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        out += coeff;
        if (!coeff.empty() && !mono.empty()) out += "*";
        out += mono;
    }
    return out;
}

std::string to_string(const TriPoly& p) { return p.to_string(); }

std::array<TriPoly, 3> partials(const TriPoly& f) {
    return {f.partial(Var::X), f.partial(Var::Y), f.partial(Var::Z)};
}

std::optional<TriPoly> try_divexact(const TriPoly& f, const TriPoly& g) {
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (f.is_zero()) return TriPoly();
    auto [ge, gc] = g.lead_term();
    FieldElem ginv = gc.inverse();
    Exp bound;
    for (int i = 0; i < 3; ++i) {
        Var v = static_cast<Var>(i);
        bound[i] = f.degree_in(v) - g.degree_in(v);
        if (bound[i] < 0) return std::nullopt;
    }
    TriPoly r = f, q;
    while (!r.is_zero()) {
        auto [re, rc] = r.lead_term();
        Exp d{re[0] - ge[0], re[1] - ge[1], re[2] - ge[2]};
        for (int i = 0; i < 3; ++i)
            if (d[i] < 0 || d[i] > bound[i]) return std::nullopt;
        TriPoly t = TriPoly::monomial(rc * ginv, d[0], d[1], d[2]);
        q += t;
        r -= t * g;
    }
    return q;
}

TriPoly divexact(const TriPoly& f, const TriPoly& g) {
    auto q = try_divexact(f, g);
    if (!q) throw Error(ErrorKind::NotDivisible, "polynomial division leaves a remainder");
    return *q;
}

std::vector<TriPoly> coefficients_in(const TriPoly& f, Var v) {
    int idx = static_cast<int>(v);
    std::vector<TriPoly> out(std::max(0, f.degree_in(v) + 1));
    for (const auto& [key, c] : f.terms()) {
        Exp e = unpack(key);
        int p = e[idx];
        e[idx] = 0;
        out[p] += TriPoly::monomial(c, e[0], e[1], e[2]);
    }
    return out;
}

TriPoly resultant(const TriPoly& f, const TriPoly& g, Var v) {
    if (f.is_zero() || g.is_zero()) return {};
    auto a = coefficients_in(f, v), b = coefficients_in(g, v);
    int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    if (m == 0 && n == 0) return TriPoly(FieldElem(1));
    if (m == 0) return a[0].pow(n);
    if (n == 0) return b[0].pow(m);
    int N = m + n;
    std::vector<std::vector<TriPoly>> M(N, std::vector<TriPoly>(N));
    // Rows: n shifted copies of f, m shifted copies of g; columns by descending power.
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + (m - i)] = a[i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + (n - i)] = b[i];
    // Bareiss fraction-free elimination.
    int sign = 1;
    TriPoly prev(FieldElem(1));
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int p = -1;
            for (int r = k + 1; r < N; ++r)
                if (!M[r][k].is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) return {};
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                TriPoly t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                M[i][j] = k == 0 ? t : divexact(t, prev);
            }
            M[i][k] = TriPoly();
        }
        prev = M[k][k];
    }
    TriPoly det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

}  // namespace qtoric
