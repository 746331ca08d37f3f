#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qtoric/algebra/upoly.hpp"

namespace qtoric {

const std::set<unsigned>& default_tracked();

// Alexander polynomial as prod_k Phi_k(t)^{s_k} * extra, normalized so that the expansion
// takes the value 1 at t = 0 (or is monic when it vanishes there).
struct AlexPoly {
    std::map<unsigned, int> cyclo;  // k -> s_k, only tracked k are present
    UPoly extra = UPoly::constant(Rat(1));

    int s(unsigned k) const;
    UPoly expand() const;
    int degree() const { return expand().degree(); }
    bool is_trivial() const { return expand() == UPoly::constant(Rat(1)); }
    // (s_k for k in keys), e.g. {1,2,3,4,6}
    std::vector<int> s_vector(const std::vector<unsigned>& keys = {1, 2, 3, 4, 6}) const;
    std::string to_string() const;

    static AlexPoly from_multiplicities(const std::map<unsigned, int>& s);
};

bool operator==(const AlexPoly& a, const AlexPoly& b);

// Normalizes p (value 1 at t=0, else monic) and peels off the tracked cyclotomic factors.
AlexPoly alex_from_upoly(const UPoly& p, const std::set<unsigned>& tracked = default_tracked());

}  // namespace qtoric
