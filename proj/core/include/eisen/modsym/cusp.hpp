#pragma once

#include "eisen/modsym/manin_symbol.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace eisen {

// A cusp class with representative a/c in lowest terms (infinity = 1/0).
// On X1(N) the label is +-c mod N over the cusp 0 and +-a mod N over infinity,
// normalized into [1, (N-1)/2]. On X0(N) the label is 0.
struct CuspClass {
  int64_t a = 1;
  int64_t c = 0;
  int64_t label = 0;
  bool over_zero = false;

  bool operator<(const CuspClass& o) const {
    return over_zero != o.over_zero ? over_zero : label < o.label;
  }
  bool operator==(const CuspClass& o) const { return over_zero == o.over_zero && label == o.label; }
  std::string to_string() const;
};

CuspClass classify_cusp(Curve curve, int64_t N, int64_t a, int64_t c);
// Over-zero classes first, then classes over infinity, each by label.
std::vector<CuspClass> cusp_classes(Curve curve, int64_t N);
std::size_t cusp_index(Curve curve, int64_t N, const CuspClass& cusp);

using CuspDivisor = std::map<CuspClass, int64_t>;

void add_to_divisor(CuspDivisor& d, const CuspClass& c, int64_t coef);
int64_t divisor_degree(const CuspDivisor& d);
bool divisor_is_zero(const CuspDivisor& d);
std::string divisor_to_string(const CuspDivisor& d);

// Boundary of the single symbol g{0,oo} = {b/d, a/c}: (a/c) - (b/d).
struct SymbolBoundary {
  CuspClass end;
  CuspClass start;
};
SymbolBoundary symbol_boundary(Curve curve, int64_t N, int64_t c, int64_t d);

}  // namespace eisen
