#pragma once

#include "eisen/modsym/manin_symbol.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace eisen {

// Integer combination of Manin symbols, indexed by symbol_index.
struct Chain {
  int64_t N = 0;
  Curve curve = Curve::X0;
  std::vector<std::pair<std::size_t, int64_t>> terms;

  Chain() = default;
  Chain(int64_t level, Curve c) : N(level), curve(c) {}

  void add(std::size_t index, int64_t coef) {
    if (coef != 0) terms.emplace_back(index, coef);
  }
  void add_symbol(int64_t u, int64_t v, int64_t coef);
  void add_chain(const Chain& other, int64_t coef);
  // Sort by index, merge duplicates, drop zeros.
  Chain& normalize();
  Chain normalized() const;
  bool is_zero() const;
  Chain scaled(int64_t k) const;
};

Chain operator+(const Chain& a, const Chain& b);
Chain operator-(const Chain& a, const Chain& b);
bool operator==(const Chain& a, const Chain& b);

}  // namespace eisen
