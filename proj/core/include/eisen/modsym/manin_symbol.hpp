#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eisen {

enum class Curve { X0, X1 };

const char* curve_name(Curve c);

// Gamma0: the point (u:v) of P^1(Z/N), normalized to (0:1) or (1:v).
// Gamma1: the pair (u,v) != (0,0) up to sign, stored as the lexicographically
// smaller of (u,v) and (-u,-v). `adjusted` marks the W_N-twisted symbol [u,v]'.
struct ManinSymbol {
  Curve kind = Curve::X0;
  int64_t u = 0;
  int64_t v = 1;
  bool adjusted = false;

  bool operator==(const ManinSymbol& o) const {
    return kind == o.kind && u == o.u && v == o.v && adjusted == o.adjusted;
  }
  std::string to_string() const;
};

ManinSymbol gamma0_symbol(int64_t N, int64_t c, int64_t d);
ManinSymbol gamma1_symbol(int64_t N, int64_t u, int64_t v);
ManinSymbol make_symbol(Curve curve, int64_t N, int64_t u, int64_t v);

std::size_t symbol_count(Curve curve, int64_t N);
// Position in the fixed generator ordering.
std::size_t symbol_index(Curve curve, int64_t N, int64_t u, int64_t v);
ManinSymbol symbol_at(Curve curve, int64_t N, std::size_t index);
std::vector<ManinSymbol> manin_generators(Curve curve, int64_t N);

}  // namespace eisen
