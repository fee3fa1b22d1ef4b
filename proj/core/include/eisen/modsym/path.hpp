#pragma once

#include "eisen/modsym/chain.hpp"

#include <cstdint>
#include <vector>

namespace eisen {

struct SL2Lift {
  int64_t a, b, c, d;  // a*d - b*c = 1
};

// A matrix in SL2(Z) whose bottom row reduces to (u, v) mod N.
SL2Lift lift_to_sl2(int64_t N, int64_t u, int64_t v);

// Convergents p_k/q_k of a/b (b > 0).
std::vector<std::pair<int64_t, int64_t>> convergents(int64_t a, int64_t b);

// The chain {0, a/b} on the given curve. Requires gcd(b, N) = 1.
Chain path_symbol(Curve curve, int64_t N, int64_t a, int64_t b);
// Same expansion without the denominator restriction; b = 0 means infinity.
Chain path_chain(Curve curve, int64_t N, int64_t a, int64_t b);

// [u,v]' = W_N [u,v] = {-d/(Nb), -c/(Na)} for a lift (a,b;c,d) of (u,v).
Chain adjusted_symbol_chain(Curve curve, int64_t N, int64_t u, int64_t v);

}  // namespace eisen
