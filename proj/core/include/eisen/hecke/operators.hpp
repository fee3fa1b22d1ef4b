#pragma once

#include "eisen/modsym/symbol_space.hpp"

#include <functional>
#include <string>
#include <vector>

namespace eisen {

// Merel's set of integer matrices [[a,b],[c,d]] with a > b >= 0, d > c >= 0
// and ad - bc = n.
struct Heilbronn {
  int64_t a, b, c, d;
};
std::vector<Heilbronn> heilbronn_merel(int64_t n);

// The family for n, computed once per n and shared.
const std::vector<Heilbronn>& heilbronn_cached(int64_t n);

Chain hecke_on_symbol(Curve curve, int64_t N, int64_t n, const ManinSymbol& s);
Chain diamond_on_symbol(Curve curve, int64_t N, int64_t j, const ManinSymbol& s);
Chain star_on_symbol(Curve curve, int64_t N, const ManinSymbol& s);
Chain atkin_lehner_on_symbol(Curve curve, int64_t N, const ManinSymbol& s);

// Boundary of a chain as a dense vector over cusp_classes(curve, N).
std::vector<int64_t> chain_boundary_row(Curve curve, int64_t N, const Chain& c);
// Row i: boundary of T_n applied to the i-th Manin symbol.
std::vector<std::vector<int64_t>> hecke_boundary_table(Curve curve, int64_t N, int64_t n);

// Image of every generator under a chain-level map.
using SymbolMap = std::function<Chain(const ManinSymbol&)>;

// Matrix of a map on the quotient coordinates (rows are images).
IntMatrix quotient_operator(const SymbolSpace& space, const SymbolMap& f);
// Restriction of a quotient matrix to the space basis; throws InvalidArgument
// if the space is not stable.
IntMatrix restrict_to_space(const SymbolSpace& space, const IntMatrix& quotient_matrix);

enum class OperatorTag { Hecke, Diamond, AtkinLehner, Star };

struct HeckeMatrix {
  OperatorTag tag = OperatorTag::Hecke;
  int64_t index = 0;  // l for T_l (N for U_N), j for <j>
  IntMatrix matrix;   // on the space basis, acting on row vectors
  std::string space_id;

  std::string label() const;
};

HeckeMatrix hecke_matrix(const SymbolSpace& space, int64_t l);
HeckeMatrix un_matrix(const SymbolSpace& space);
HeckeMatrix diamond_matrix(const SymbolSpace& space, int64_t j);
HeckeMatrix atkin_lehner_matrix(const SymbolSpace& space);
HeckeMatrix star_matrix(const SymbolSpace& space);

bool commute(const HeckeMatrix& a, const HeckeMatrix& b);

}  // namespace eisen
