#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qtoric/algebra/number_field.hpp"

// Reduction of a number field tower modulo a word-size prime p:
// F_p[a]/(Phi_n) [b]/(b^k - r). Not a field in general; inverting a zero divisor throws ZeroDivisor.
namespace qtoric::modular {

using u64 = std::uint64_t;
constexpr int kMaxDim = 32;

struct ZeroDivisor {};

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);  // throws ZeroDivisor for a = 0

// Deterministic sequence of primes just above 2^61.
u64 nth_prime(int j);

struct ModRing {
    u64 p = 0;
    int d0 = 1, k = 1, dim = 1;
    std::vector<std::vector<u64>> red;  // red[e - d0] = a^e mod Phi_n
    std::vector<u64> r;                 // radical value, base coordinates

    // nullopt when p divides a denominator of the field data or dim is too large.
    static std::optional<ModRing> make(const FieldPtr& F, u64 p);

    // Reduce a field element; nullopt when p divides its denominator.
    std::optional<std::array<u64, kMaxDim>> reduce(const FieldElem& x) const;
};

// Active ring for ModElem arithmetic on this thread.
const ModRing*& current_ring();

struct RingScope {
    explicit RingScope(const ModRing* r) : prev(current_ring()) { current_ring() = r; }
    ~RingScope() { current_ring() = prev; }
    const ModRing* prev;
};

class ModElem {
public:
    ModElem() { c_.fill(0); }
    ModElem(long v);
    explicit ModElem(const std::array<u64, kMaxDim>& c) : c_(c) {}

    const std::array<u64, kMaxDim>& coords() const { return c_; }
    bool is_zero() const;
    bool is_scalar() const;

    ModElem operator-() const;
    friend ModElem operator+(const ModElem& a, const ModElem& b);
    friend ModElem operator-(const ModElem& a, const ModElem& b);
    friend ModElem operator*(const ModElem& a, const ModElem& b);
    friend ModElem operator/(const ModElem& a, const ModElem& b) { return a * b.inverse(); }
    friend bool operator==(const ModElem& a, const ModElem& b) { return a.c_ == b.c_; }
    ModElem inverse() const;

private:
    std::array<u64, kMaxDim> c_;
};

inline bool is_zero(const ModElem& x) { return x.is_zero(); }

// Symmetric rational reconstruction of a mod m; nullopt when no small fraction exists.
std::optional<Rat> rational_reconstruct(const Int& a, const Int& m);

}  // namespace qtoric::modular
