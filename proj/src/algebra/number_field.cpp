#include "qtoric/algebra/number_field.hpp"

#include <cstdint>
#include <numeric>

#include "qtoric/error.hpp"

namespace qtoric {

FieldSpec FieldSpec::with_radical(unsigned n, unsigned k, std::vector<Rat> r, bool trust) {
    FieldSpec s;
    s.n = n;
    s.radical = RadicalSpec{k, std::move(r)};
    s.trust = trust;
    return s;
}

FieldSpec FieldSpec::with_radical(unsigned n, unsigned k, const Rat& r, bool trust) {
    std::vector<Rat> coords(cyclotomic_polynomial(n).degree());
    coords[0] = r;
    return with_radical(n, k, std::move(coords), trust);
}

bool same_field(const FieldSpec& a, const FieldSpec& b) {
    if (a.n != b.n || a.radical.has_value() != b.radical.has_value()) return false;
    if (!a.radical) return true;
    return a.radical->k == b.radical->k && a.radical->r == b.radical->r;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 rat_mod(const Rat& x, u64 p, bool& ok) {
    Int num = x.get_num() % Int(static_cast<unsigned long>(p));
    Int den = x.get_den() % Int(static_cast<unsigned long>(p));
    if (den == 0) {
        ok = false;
        return 0;
    }
    if (num < 0) num += Int(static_cast<unsigned long>(p));
    u64 nv = num.get_ui(), dv = den.get_ui();
    return mulmod(nv, powmod(dv, p - 2, p), p);
}

// Univariate resultant over Q by the Euclidean algorithm.
Rat resultant_q(UPoly f, UPoly g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    Rat res = 1;
    while (g.degree() > 0) {
        int df = f.degree(), dg = g.degree();
        auto r = divmod(f, g).second;
        if (r.is_zero()) return Rat(0);
        int dr = r.degree();
        Rat lg = g.lead();
        Rat factor = 1;
        for (int i = 0; i < df - dr; ++i) factor *= lg;
        if ((df % 2 == 1) && (dg % 2 == 1)) factor = -factor;
        res *= factor;
        f = std::move(g);
        g = std::move(r);
    }
    Rat c = g.lead();
    Rat p = 1;
    for (int i = 0; i < f.degree(); ++i) p *= c;
    return res * p;
}

// Decides whether r (base coords) is a k-th power in Q(zeta_n) for prime k.
// Returns 1 if certainly not a k-th power, 0 if inconclusive.
int certify_not_power(unsigned n, unsigned k, const std::vector<Rat>& r, const UPoly& phi) {
    UPoly rp(std::vector<Rat>(r.begin(), r.end()));
    Rat norm = resultant_q(phi, rp);
    Rat root;
    if (!rat_root(norm, k, root)) return 1;

    const u64 step = static_cast<u64>(n) * k;
    int tested = 0;
    for (u64 p = step + 1; tested < 200 && p < (1ULL << 31); p += step) {
        if (!is_prime_u64(p)) continue;
        bool ok = true;
        std::vector<u64> rc(r.size());
        for (size_t i = 0; i < r.size(); ++i) rc[i] = rat_mod(r[i], p, ok);
        if (!ok) continue;
        ++tested;
        auto nf = prime_factors(n);
        u64 alpha = 0;
        for (u64 g = 2; g < p; ++g) {
            u64 a = powmod(g, (p - 1) / n, p);
            bool exact = true;
            for (u64 q : nf)
                if (powmod(a, n / q, p) == 1) exact = false;
            if (exact) {
                alpha = a;
                break;
            }
        }
        if (alpha == 0) continue;
        for (unsigned j = 1; j <= n; ++j) {
            if (std::gcd(j, n) != 1) continue;
            u64 root_j = powmod(alpha, j, p);
            u64 val = 0, pw = 1;
            for (size_t i = 0; i < rc.size(); ++i) {
                val = (val + mulmod(rc[i], pw, p)) % p;
                pw = mulmod(pw, root_j, p);
            }
            if (val == 0) continue;
            if (powmod(val, (p - 1) / k, p) != 1) return 1;
        }
    }
    return 0;
}

}  // namespace

FieldPtr NumberField::make(const FieldSpec& spec) {
    if (spec.n == 0) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be positive");
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->spec_ = spec;
    f->phi_ = cyclotomic_polynomial(spec.n);
    f->d0_ = f->phi_.degree();
    for (const auto& c : f->phi_.coeffs()) f->phi_int_.push_back(c.get_num());
    const int d0 = f->d0_;
    // a^e mod Phi for e in [d0, 2*d0-2]
    std::vector<Int> cur(d0);
    for (int i = 0; i < d0; ++i) cur[i] = -f->phi_int_[i];
    for (int e = d0; e <= 2 * d0 - 2; ++e) {
        f->red_.push_back(cur);
        Int top = cur[d0 - 1];
        for (int i = d0 - 1; i > 0; --i) cur[i] = cur[i - 1] - top * f->phi_int_[i];
        cur[0] = -top * f->phi_int_[0];
    }
    if (spec.radical) {
        const auto& rad = *spec.radical;
        if (rad.k < 2) throw Error(ErrorKind::InvalidInput, "radical degree must be >= 2");
        if (static_cast<int>(rad.r.size()) != d0)
            throw Error(ErrorKind::InvalidInput, "radical value has wrong number of coordinates");
        f->k_ = static_cast<int>(rad.k);
        Int l = 1;
        for (const auto& c : rad.r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        f->rden_ = l;
        for (const auto& c : rad.r) f->rnum_.push_back(c.get_num() * (l / c.get_den()));
        bool all_zero = true;
        for (const auto& c : rad.r) all_zero = all_zero && is_zero(c);
        if (all_zero) throw Error(ErrorKind::ReducibleRadical, "b^k - 0 is reducible");
        f->base_ = make(FieldSpec::cyclotomic(spec.n));
        if (!spec.trust) {
            if (rad.k != 2 && rad.k != 3)
                throw Error(ErrorKind::IrreducibilityUnknown,
                            "irreducibility of b^k - r is only checked for k in {2,3}; pass --trust-field");
            bool rational = true;
            for (size_t i = 1; i < rad.r.size(); ++i) rational = rational && is_zero(rad.r[i]);
            Rat root;
            if (rational && rat_root(rad.r[0], rad.k, root))
                throw Error(ErrorKind::ReducibleRadical, "r is a k-th power of a rational number");
            if (!certify_not_power(spec.n, rad.k, rad.r, f->phi_)) {
                throw Error(ErrorKind::IrreducibilityUnknown,
                            "could not certify that r is not a k-th power in the base field");
            }
        }
    }
    return f;
}

std::string NumberField::describe() const {
    std::string s = "Q(w" + std::to_string(spec_.n) + ")";
    if (k_ > 1) {
        FieldElem r(base_, spec_.radical->r);
        s += "(rad), rad^" + std::to_string(k_) + " = " + r.to_string();
    }
    return s;
}

void NumberField::reduce_base(std::vector<Int>& v) const {
    const int d0 = d0_;
    for (int e = static_cast<int>(v.size()) - 1; e >= d0; --e) {
        if (sgn(v[e]) == 0) continue;
        const auto& red = red_[e - d0];
        for (int i = 0; i < d0; ++i)
            if (sgn(red[i]) != 0) mpz_addmul(v[i].get_mpz_t(), v[e].get_mpz_t(), red[i].get_mpz_t());
    }
    v.resize(d0);
}

FieldElem::FieldElem(FieldPtr f, const std::vector<Rat>& coords) : field_(std::move(f)) {
    const int dim = field_->dim();
    if (static_cast<int>(coords.size()) > dim)
        throw Error(ErrorKind::InvalidInput, "too many coordinates for field");
    Int l = 1;
    for (const auto& c : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    num_.assign(dim, Int(0));
    for (size_t i = 0; i < coords.size(); ++i) num_[i] = coords[i].get_num() * (l / coords[i].get_den());
    den_ = l;
    normalize();
}

FieldElem FieldElem::zero(const FieldPtr& f) { return FieldElem(f, {}); }
FieldElem FieldElem::one(const FieldPtr& f) { return FieldElem(f, {Rat(1)}); }
FieldElem FieldElem::from_rat(const FieldPtr& f, const Rat& v) { return FieldElem(f, {v}); }

FieldElem FieldElem::gen_a(const FieldPtr& f) {
    if (f->base_degree() == 1) {
        // Phi_1 or Phi_2: a is the rational root
        return from_rat(f, -Rat(f->phi_int_[0]));
    }
    std::vector<Rat> c(2);
    c[1] = 1;
    return FieldElem(f, c);
}

FieldElem FieldElem::gen_b(const FieldPtr& f) {
    if (!f->has_radical()) throw Error(ErrorKind::UnknownConstant, "field has no radical generator");
    std::vector<Rat> c(f->base_degree() + 1);
    c[f->base_degree()] = 1;
    return FieldElem(f, c);
}

FieldElem FieldElem::root_of_unity(const FieldPtr& f, unsigned m) {
    if (m == 0 || f->n() % m != 0)
        throw Error(ErrorKind::FieldLacksRoot,
                    "w" + std::to_string(m) + " is not in " + f->describe());
    return gen_a(f).pow(static_cast<long>(f->n() / m));
}

Rat FieldElem::coord(int idx) const {
    if (idx < 0 || idx >= dim()) return Rat(0);
    Rat r(num_[idx], den_);
    r.canonicalize();
    return r;
}

Rat FieldElem::coord(int i, int j) const {
    int d0 = field_ ? field_->base_degree() : 1;
    if (i < 0 || i >= d0) return Rat(0);
    return coord(j * d0 + i);
}

std::vector<Rat> FieldElem::coords() const {
    std::vector<Rat> out(dim());
    for (int i = 0; i < dim(); ++i) out[i] = coord(i);
    return out;
}

bool FieldElem::is_zero() const { return rational_ && sgn(num_[0]) == 0; }
bool FieldElem::is_one() const { return rational_ && num_[0] == den_; }

Rat FieldElem::rational_value() const {
    if (!rational_) throw Error(ErrorKind::InvalidInput, "field element is not rational");
    Rat r(num_[0], den_);
    r.canonicalize();
    return r;
}

FieldElem FieldElem::promote(const FieldPtr& f) const {
    if (!f) return *this;
    if (field_) {
        if (field_ != f && !same_field(field_->spec(), f->spec()))
            throw Error(ErrorKind::IncompatibleField, field_->describe() + " vs " + f->describe());
        FieldElem r = *this;
        r.field_ = f;
        return r;
    }
    FieldElem r;
    r.field_ = f;
    r.num_.assign(f->dim(), Int(0));
    r.num_[0] = num_[0];
    r.den_ = den_;
    r.rational_ = true;
    return r;
}

void FieldElem::normalize_rational() {
    if (sgn(den_) < 0) {
        den_ = -den_;
        num_[0] = -num_[0];
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_[0].get_mpz_t(), den_.get_mpz_t());
    if (g != 1 && g != 0) {
        mpz_divexact(num_[0].get_mpz_t(), num_[0].get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

void FieldElem::normalize() {
    Int g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    bool allzero = true;
    for (const auto& c : num_) allzero = allzero && sgn(c) == 0;
    if (allzero) {
        den_ = 1;
    } else if (g != 1) {
        for (auto& c : num_)
            if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    rational_ = true;
    for (size_t i = 1; i < num_.size(); ++i)
        if (sgn(num_[i]) != 0) {
            rational_ = false;
            break;
        }
}

FieldPtr FieldElem::common_field(const FieldElem& a, const FieldElem& b) {
    if (!a.field_) return b.field_;
    if (!b.field_ || a.field_ == b.field_) return a.field_;
    if (!same_field(a.field_->spec(), b.field_->spec()))
        throw Error(ErrorKind::IncompatibleField, a.field_->describe() + " vs " + b.field_->describe());
    return a.field_;
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    FieldPtr f = common_field(*this, o);
    if (o.is_zero()) {
        if (!field_ && f) *this = promote(f);
        return *this;
    }
    const FieldElem* rhs = &o;
    FieldElem tmp;
    if (f && !o.field_) {
        tmp = o.promote(f);
        rhs = &tmp;
    }
    if (f && !field_) *this = promote(f);
    if (den_ == rhs->den_) {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] += rhs->num_[i];
    } else {
        Int l;
        mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), rhs->den_.get_mpz_t());
        Int m1 = l / den_, m2 = l / rhs->den_;
        for (size_t i = 0; i < num_.size(); ++i) {
            if (m1 != 1) num_[i] *= m1;
            if (sgn(rhs->num_[i]) != 0) mpz_addmul(num_[i].get_mpz_t(), rhs->num_[i].get_mpz_t(), m2.get_mpz_t());
        }
        den_ = l;
    }
    normalize();
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem FieldElem::mul_rat(const Rat& s) const {
    FieldElem r = *this;
    if (sgn(s) == 0) {
        for (auto& c : r.num_) c = 0;
        r.den_ = 1;
        r.rational_ = true;
        return r;
    }
    for (auto& c : r.num_) c *= s.get_num();
    r.den_ *= s.get_den();
    r.normalize();
    return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    FieldPtr f = FieldElem::common_field(a, b);
    if (a.rational_) {
        FieldElem r = b.mul_rat(a.rational_value());
        return f ? r.promote(f) : r;
    }
    if (b.rational_) {
        FieldElem r = a.mul_rat(b.rational_value());
        return r.promote(f);
    }
    const NumberField& F = *f;
    const int d0 = F.d0_, k = F.k_, w = 2 * d0 - 1;
    std::vector<Int> slots(static_cast<size_t>(w) * (2 * k - 1));
    for (int j1 = 0; j1 < k; ++j1)
        for (int i1 = 0; i1 < d0; ++i1) {
            const Int& x = a.num_[j1 * d0 + i1];
            if (sgn(x) == 0) continue;
            for (int j2 = 0; j2 < k; ++j2) {
                Int* row = slots.data() + (j1 + j2) * w;
                for (int i2 = 0; i2 < d0; ++i2) {
                    const Int& y = b.num_[j2 * d0 + i2];
                    if (sgn(y) != 0) mpz_addmul(row[i1 + i2].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
                }
            }
        }
    Int den = a.den_ * b.den_;
    F.reduce_product(slots, den);
    FieldElem r;
    r.field_ = f;
    r.num_ = std::move(slots);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

void NumberField::reduce_product(std::vector<Int>& slots, Int& den) const {
    const int d0 = d0_, k = k_, w = 2 * d0 - 1;
    std::vector<std::vector<Int>> rows(2 * k - 1);
    for (int j = 0; j < 2 * k - 1; ++j) {
        rows[j].assign(std::make_move_iterator(slots.begin() + j * w),
                       std::make_move_iterator(slots.begin() + (j + 1) * w));
        reduce_base(rows[j]);
    }
    if (k > 1) {
        const bool scale = rden_ != 1;
        if (scale)
            for (int j = 0; j < k; ++j)
                for (auto& c : rows[j]) c *= rden_;
        for (int j = 2 * k - 2; j >= k; --j) {
            std::vector<Int> t(w);
            for (int i1 = 0; i1 < d0; ++i1) {
                if (sgn(rows[j][i1]) == 0) continue;
                for (int i2 = 0; i2 < d0; ++i2)
                    if (sgn(rnum_[i2]) != 0)
                        mpz_addmul(t[i1 + i2].get_mpz_t(), rows[j][i1].get_mpz_t(), rnum_[i2].get_mpz_t());
            }
            reduce_base(t);
            for (int i = 0; i < d0; ++i) rows[j - k][i] += t[i];
        }
        if (scale) den *= rden_;
    }
    slots.resize(static_cast<size_t>(d0) * k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < d0; ++i) slots[j * d0 + i] = std::move(rows[j][i]);
}

FieldElem FieldElem::from_integers(const FieldPtr& f, std::vector<Int> nums, Int den) {
    FieldElem r;
    r.field_ = f;
    r.num_ = std::move(nums);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = *this * o; }

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this = *this * o.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
    FieldElem::common_field(a, b);
    if (a.rational_ != b.rational_) return false;
    if (a.rational_) return a.num_[0] == b.num_[0] && a.den_ == b.den_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero field element");
    if (rational_) {
        FieldElem r(Rat(1) / rational_value());
        return field_ ? r.promote(field_) : r;
    }
    const NumberField& F = *field_;
    const int d0 = F.d0_, k = F.k_;
    if (k == 1) {
        UPoly x(coords());
        auto [g, s, t] = ext_gcd(x, F.phi_);
        if (g.degree() != 0) throw Error(ErrorKind::DivisionByZero, "element not invertible modulo Phi_n");
        std::vector<Rat> c(d0);
        for (int i = 0; i <= s.degree(); ++i) c[i] = s.coeff(i);
        return FieldElem(field_, c);
    }
    std::vector<FieldElem> xb(k);
    for (int j = 0; j < k; ++j) {
        std::vector<Rat> c(d0);
        for (int i = 0; i < d0; ++i) c[i] = coord(i, j);
        xb[j] = FieldElem(F.base_, c);
    }
    std::vector<FieldElem> mod(k + 1);
    mod[0] = -FieldElem(F.base_, F.spec_.radical->r);
    mod[k] = FieldElem::one(F.base_);
    auto [g, s, t] = ext_gcd(KPoly(xb), KPoly(mod));
    if (g.degree() != 0)
        throw Error(ErrorKind::ReducibleRadical, "b^k - r has a common factor with the element; radical layer is not a field");
    std::vector<Rat> c(static_cast<size_t>(d0) * k);
    for (int j = 0; j <= s.degree(); ++j) {
        FieldElem cj = s.coeff(j).promote(F.base_);
        for (int i = 0; i < d0; ++i) c[j * d0 + i] = cj.coord(i);
    }
    return FieldElem(field_, c);
}

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem r = field_ ? one(field_) : FieldElem(1);
    FieldElem b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::string FieldElem::to_string() const {
    if (rational_) return rational_value().get_str();
    const int d0 = field_->base_degree(), k = field_->radical_degree();
    const std::string a = "w" + std::to_string(field_->n());
    std::string out;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < d0; ++i) {
            Rat c = coord(i, j);
            if (sgn(c) == 0) continue;
            bool neg = sgn(c) < 0;
            Rat m = abs(c);
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mono;
            if (i > 0) mono += a + (i > 1 ? "^" + std::to_string(i) : "");
            if (j > 0) mono += std::string(mono.empty() ? "" : "*") + "rad" + (j > 1 ? "^" + std::to_string(j) : "");
            if (mono.empty())
                out += m.get_str();
            else if (m == 1)
                out += mono;
            else
                out += m.get_str() + "*" + mono;
        }
    return out;
}

std::string to_string(const FieldElem& x) { return x.to_string(); }

}  // namespace qtoric
