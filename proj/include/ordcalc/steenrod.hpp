#pragma once

#include <cstdint>

#include "ordcalc/cochain.hpp"

namespace ordcalc {

// Alexander-Whitney cup product.  Coefficients: equal modules, Z acting on
// anything, or Z/2 against Q/Z values of order 2.  With a twisted second
// factor, its value is carried back to vertex 0 along the front edge (0,p).
Cochain cup(const Cochain& a, const Cochain& b);

// Cup-i over Z/2 (interval formula on normalised cochains).
Cochain cup_i(int i, const Cochain& a, const Cochain& b);

// Sq^k a = a cup_{p-k} a for a of degree p; zero when k > p, a when k = 0.
Cochain sq(int k, const Cochain& a);

// Z/2 -> Q/Z (bound M, even): 1 -> 1/2, keeping any twist of `like`.
Cochain bockstein_sign(const Cochain& a, std::int64_t bound);

}  // namespace ordcalc
