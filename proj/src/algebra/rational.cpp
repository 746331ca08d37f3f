#include "qtoric/algebra/rational.hpp"

#include "qtoric/error.hpp"

namespace qtoric {

std::string to_string(const Rat& x) { return x.get_str(); }
std::string to_string(const Int& x) { return x.get_str(); }

Rat parse_rat(const std::string& s) {
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw Error(ErrorKind::InvalidInput, "not a rational literal: '" + s + "'");
    r.canonicalize();
    if (sgn(r.get_den()) == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    return r;
}

static bool int_root(const Int& x, unsigned k, Int& out) {
    if (sgn(x) < 0) {
        if (k % 2 == 0) return false;
        Int pos = -x;
        if (!int_root(pos, k, out)) return false;
        out = -out;
        return true;
    }
    return mpz_root(out.get_mpz_t(), x.get_mpz_t(), k) != 0;
}

bool rat_root(const Rat& x, unsigned k, Rat& out) {
    Int n, d;
    if (!int_root(x.get_num(), k, n) || !int_root(x.get_den(), k, d)) return false;
    out = Rat(n, d);
    out.canonicalize();
    return true;
}

}  // namespace qtoric
