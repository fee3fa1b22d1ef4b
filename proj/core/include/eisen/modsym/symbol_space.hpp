#pragma once

#include "eisen/arith/int_matrix.hpp"
#include "eisen/arith/level_context.hpp"
#include "eisen/modsym/chain.hpp"
#include "eisen/modsym/cusp.hpp"
#include "eisen/modsym/manin_symbol.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eisen {

enum class RelativeTo { None, AllCusps, CInfinity, CZero };
enum class Sign { None, Plus, Minus };

const char* relative_name(RelativeTo r);
const char* sign_name(Sign s);

struct SpaceOptions {
  Curve curve = Curve::X0;
  RelativeTo relative_to = RelativeTo::AllCusps;
  Sign sign = Sign::None;
  std::optional<int64_t> modulus;  // nullopt: exact over Z

  std::string key() const;
};

struct Relation {
  enum class Kind { TwoTerm, ThreeTerm, SignStar };
  Kind kind;
  std::vector<std::pair<std::size_t, int64_t>> terms;
};

// Everything a presentation consists of; this is what the cache stores.
struct PresentationData {
  int64_t N = 0;
  SpaceOptions options;
  std::vector<ManinSymbol> generators;
  std::vector<Relation> relations;
  std::vector<std::size_t> free_generators;
  // Exact spaces: basis of the quotient lattice in free-generator coordinates.
  std::vector<std::vector<BigRational>> lattice_in_free;
  IntMatrix generator_coordinates;  // generators x quotient rank
  IntMatrix boundary;               // quotient rank x cusp classes
  IntMatrix basis;                  // space rank x quotient rank
};

// Manin-symbol presentation of H_1 of X0(N) or X1(N) relative to all cusps,
// with an optional sign quotient; the space proper is the sublattice cut out
// by `relative_to`. Quotient coordinates are taken in a Z-basis of the image
// of the generators (exact) or in the free generators (modular).
class SymbolSpace {
 public:
  static SymbolSpace build(const LevelContext& ctx, const SpaceOptions& opts);
  static SymbolSpace from_data(const LevelContext& ctx, PresentationData data);

  const LevelContext& context() const { return ctx_; }
  const SpaceOptions& options() const { return data_.options; }
  const PresentationData& data() const { return data_; }
  int64_t level() const { return data_.N; }
  Curve curve() const { return data_.options.curve; }
  bool is_exact() const { return !data_.options.modulus.has_value(); }
  bool is_relative() const { return data_.options.relative_to != RelativeTo::None; }

  const std::vector<ManinSymbol>& generators() const { return data_.generators; }
  const std::vector<Relation>& relations() const { return data_.relations; }
  IntMatrix relation_matrix() const;
  const std::vector<std::size_t>& free_generators() const { return data_.free_generators; }
  const std::vector<CuspClass>& cusps() const { return cusps_; }

  std::size_t quotient_rank() const { return data_.generator_coordinates.cols(); }
  std::size_t rank() const { return data_.basis.rows(); }
  const IntMatrix& basis() const { return data_.basis; }
  const IntMatrix& generator_coordinates() const { return data_.generator_coordinates; }
  const IntMatrix& boundary_matrix() const { return data_.boundary; }

  IntVector quotient_coordinates(const Chain& x) const;
  // Coordinates in the space basis; throws InvalidArgument when x is outside.
  IntVector coordinates(const Chain& x) const;
  IntVector to_space(const IntVector& quotient_coords) const;
  IntVector from_space(const IntVector& space_coords) const;
  bool in_space(const IntVector& quotient_coords) const;

  CuspDivisor boundary(const Chain& x) const;
  CuspDivisor boundary_of(const IntVector& quotient_coords) const;
  IntVector zero_vector() const;

  std::string id() const;
  std::string fingerprint() const;

 private:
  SymbolSpace(const LevelContext& ctx, PresentationData data);

  LevelContext ctx_;
  PresentationData data_;
  std::vector<CuspClass> cusps_;
};

}  // namespace eisen
