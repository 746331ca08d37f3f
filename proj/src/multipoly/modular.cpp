#include "qtoric/multipoly/modular.hpp"

#include <mutex>

namespace qtoric::modular {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw ZeroDivisor{};
    return powmod(a, p - 2, p);
}

u64 nth_prime(int j) {
    static std::mutex mu;
    static std::vector<u64> primes;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(primes.size()) <= j) {
        Int start = primes.empty() ? Int(1) << 61 : Int(primes.back());
        Int next;
        mpz_nextprime(next.get_mpz_t(), start.get_mpz_t());
        primes.push_back(next.get_ui());
    }
    return primes[j];
}

namespace {

u64 rat_mod(const Rat& v, u64 p, bool& ok) {
    Int d = v.get_den() % Int(p);
    if (d == 0) {
        ok = false;
        return 0;
    }
    Int n = v.get_num() % Int(p);
    if (n < 0) n += p;
    return mulmod(n.get_ui(), invmod(d.get_ui(), p), p);
}

}  // namespace

std::optional<ModRing> ModRing::make(const FieldPtr& F, u64 p) {
    ModRing R;
    R.p = p;
    if (!F) return R;
    R.d0 = F->base_degree();
    R.k = F->radical_degree();
    R.dim = R.d0 * R.k;
    if (R.dim > kMaxDim) return std::nullopt;
    bool ok = true;
    std::vector<u64> phi(R.d0 + 1);
    for (int i = 0; i <= R.d0; ++i) phi[i] = rat_mod(F->modulus().coeff(i), p, ok);
    // a^e for e = d0 .. 2 d0 - 2, starting from a^d0 = -sum phi_i a^i
    std::vector<u64> cur(R.d0);
    for (int i = 0; i < R.d0; ++i) cur[i] = (p - phi[i]) % p;
    for (int e = R.d0; e <= 2 * R.d0 - 2; ++e) {
        R.red.push_back(cur);
        u64 top = cur[R.d0 - 1];
        std::vector<u64> nxt(R.d0);
        for (int i = R.d0 - 1; i > 0; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        for (int i = 0; i < R.d0; ++i) nxt[i] = (nxt[i] + mulmod(top, (p - phi[i]) % p, p)) % p;
        cur = nxt;
    }
    if (R.k > 1) {
        const auto& rs = F->spec().radical->r;
        R.r.assign(R.d0, 0);
        for (size_t i = 0; i < rs.size() && static_cast<int>(i) < R.d0; ++i) R.r[i] = rat_mod(rs[i], p, ok);
    }
    if (!ok) return std::nullopt;
    return R;
}

std::optional<std::array<u64, kMaxDim>> ModRing::reduce(const FieldElem& x) const {
    std::array<u64, kMaxDim> c;
    c.fill(0);
    Int d = x.denominator() % Int(p);
    if (d == 0) return std::nullopt;
    u64 dinv = invmod(d.get_ui(), p);
    const auto& nums = x.numerators();
    for (size_t i = 0; i < nums.size(); ++i) {
        if (sgn(nums[i]) == 0) continue;
        Int n = nums[i] % Int(p);
        if (n < 0) n += p;
        c[i] = mulmod(n.get_ui(), dinv, p);
    }
    return c;
}

const ModRing*& current_ring() {
    thread_local const ModRing* ring = nullptr;
    return ring;
}

ModElem::ModElem(long v) {
    c_.fill(0);
    const u64 p = current_ring()->p;
    long m = v % static_cast<long>(p);
    c_[0] = m >= 0 ? static_cast<u64>(m) : p - static_cast<u64>(-m);
}

bool ModElem::is_zero() const {
    const int d = current_ring()->dim;
    for (int i = 0; i < d; ++i)
        if (c_[i]) return false;
    return true;
}

bool ModElem::is_scalar() const {
    const int d = current_ring()->dim;
    for (int i = 1; i < d; ++i)
        if (c_[i]) return false;
    return true;
}

ModElem ModElem::operator-() const {
    const ModRing& R = *current_ring();
    ModElem r;
    for (int i = 0; i < R.dim; ++i) r.c_[i] = c_[i] ? R.p - c_[i] : 0;
    return r;
}

ModElem operator+(const ModElem& a, const ModElem& b) {
    const ModRing& R = *current_ring();
    ModElem r;
    for (int i = 0; i < R.dim; ++i) {
        u64 s = a.c_[i] + b.c_[i];
        r.c_[i] = s >= R.p ? s - R.p : s;
    }
    return r;
}

ModElem operator-(const ModElem& a, const ModElem& b) {
    const ModRing& R = *current_ring();
    ModElem r;
    for (int i = 0; i < R.dim; ++i) r.c_[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + (R.p - b.c_[i]);
    return r;
}

namespace {

// Multiply two base-field vectors (length d0) modulo Phi_n; result written to out.
void base_mul(const ModRing& R, const u64* a, const u64* b, u64* out) {
    const int d0 = R.d0;
    unsigned __int128 acc[2 * kMaxDim];
    for (int i = 0; i < 2 * d0 - 1; ++i) acc[i] = 0;
    for (int i = 0; i < d0; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < d0; ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
            if (acc[i + j] >> 126) acc[i + j] %= R.p;
        }
    }
    u64 t[2 * kMaxDim];
    for (int i = 0; i < 2 * d0 - 1; ++i) t[i] = static_cast<u64>(acc[i] % R.p);
    for (int i = 0; i < d0; ++i) out[i] = t[i];
    for (int e = d0; e <= 2 * d0 - 2; ++e) {
        if (!t[e]) continue;
        const auto& red = R.red[e - d0];
        for (int i = 0; i < d0; ++i) out[i] = (out[i] + mulmod(t[e], red[i], R.p)) % R.p;
    }
}

}  // namespace

ModElem operator*(const ModElem& a, const ModElem& b) {
    const ModRing& R = *current_ring();
    ModElem r;
    if (a.is_scalar()) {
        u64 s = a.c_[0];
        if (s)
            for (int i = 0; i < R.dim; ++i) r.c_[i] = b.c_[i] ? mulmod(s, b.c_[i], R.p) : 0;
        return r;
    }
    if (b.is_scalar()) return b * a;
    const int d0 = R.d0, k = R.k;
    if (k == 1) {
        base_mul(R, a.c_.data(), b.c_.data(), r.c_.data());
        return r;
    }
    // slots j = 0 .. 2k-2, each a base-field vector
    std::vector<u64> slots((2 * k - 1) * d0, 0);
    u64 tmp[kMaxDim];
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            base_mul(R, a.c_.data() + i * d0, b.c_.data() + j * d0, tmp);
            u64* s = slots.data() + (i + j) * d0;
            for (int t = 0; t < d0; ++t) {
                u64 v = s[t] + tmp[t];
                s[t] = v >= R.p ? v - R.p : v;
            }
        }
    }
    for (int j = 2 * k - 2; j >= k; --j) {
        base_mul(R, slots.data() + j * d0, R.r.data(), tmp);
        u64* s = slots.data() + (j - k) * d0;
        for (int t = 0; t < d0; ++t) {
            u64 v = s[t] + tmp[t];
            s[t] = v >= R.p ? v - R.p : v;
        }
    }
    for (int i = 0; i < R.dim; ++i) r.c_[i] = slots[i];
    return r;
}

ModElem ModElem::inverse() const {
    const ModRing& R = *current_ring();
    if (is_scalar()) {
        ModElem r;
        r.c_[0] = invmod(c_[0], R.p);
        return r;
    }
    const int n = R.dim;
    // columns: this * e_j
    std::vector<std::vector<u64>> m(n, std::vector<u64>(n + 1, 0));
    for (int j = 0; j < n; ++j) {
        ModElem e;
        e.c_[j] = 1;
        ModElem col = *this * e;
        for (int i = 0; i < n; ++i) m[i][j] = col.c_[i];
    }
    m[0][n] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) throw ZeroDivisor{};
        std::swap(m[c], m[piv]);
        u64 inv = invmod(m[c][c], R.p);
        for (int j = c; j <= n; ++j) m[c][j] = mulmod(m[c][j], inv, R.p);
        for (int r = 0; r < n; ++r) {
            if (r == c || !m[r][c]) continue;
            u64 f = m[r][c];
            for (int j = c; j <= n; ++j) m[r][j] = (m[r][j] + R.p - mulmod(f, m[c][j], R.p)) % R.p;
        }
    }
    ModElem r;
    for (int i = 0; i < n; ++i) r.c_[i] = m[i][n];
    return r;
}

std::optional<Rat> rational_reconstruct(const Int& a, const Int& m) {
    // Find r/s = a mod m with |r|, |s| <= sqrt(m/2).
    Int bound;
    Int half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    Int r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    Int s0 = 0, s1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (s1 == 0 || abs(s1) > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rat v(r1, s1);
    v.canonicalize();
    return v;
}

}  // namespace qtoric::modular
