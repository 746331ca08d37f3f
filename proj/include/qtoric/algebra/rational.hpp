#pragma once

#include <gmpxx.h>

#include <string>

namespace qtoric {

// Canonical GMP rational; every arithmetic result is kept in lowest terms.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_one(const Rat& x) { return x == 1; }

std::string to_string(const Rat& x);
std::string to_string(const Int& x);

// Accepts "3", "-7", "5/2".
Rat parse_rat(const std::string& s);

// Exact k-th root of a rational if it exists.
bool rat_root(const Rat& x, unsigned k, Rat& out);

}  // namespace qtoric
