#include "qtoric/algebra/upoly.hpp"

namespace qtoric {

UPoly cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclotomic_polynomial needs n >= 1");
    UPoly p = UPoly::monomial(Rat(1), static_cast<int>(n)) - UPoly::constant(Rat(1));
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = divexact(p, cyclotomic_polynomial(d));
    return p;
}

std::string to_string(const UPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rat c = p.coeff(i);
        if (is_zero(c)) continue;
        bool neg = sgn(c) < 0;
        Rat a = abs(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = (a == 1);
        if (i == 0 || !unit) out += a.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

bool all_roots_are_roots_of_unity(const UPoly& p, unsigned delta) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    UPoly sqfree = divexact(p, gcd(p, p.derivative()));
    UPoly target = UPoly::monomial(Rat(1), static_cast<int>(delta)) - UPoly::constant(Rat(1));
    return divides(sqfree, target);
}

}  // namespace qtoric
