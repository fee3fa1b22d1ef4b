#include "eisen/hecke/operators.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/number_theory.hpp"
#include "eisen/modsym/path.hpp"

#include <map>
#include <mutex>

namespace eisen {

namespace {

const char* kModule = "hecke";

bool valid_image(Curve curve, int64_t N, int64_t u, int64_t v) {
  u = mod(u, N);
  v = mod(v, N);
  if (curve == Curve::X1) return u != 0 || v != 0;
  return gcd(gcd(u, v), N) == 1;
}

}  // namespace

std::vector<Heilbronn> heilbronn_merel(int64_t n) {
  std::vector<Heilbronn> out;
  for (int64_t a = 1; a <= n; ++a) {
    for (int64_t d = 1; d <= n; ++d) {
      const int64_t bc = a * d - n;
      if (bc < 0) continue;
      for (int64_t b = 0; b < a; ++b) {
        if (b == 0) {
          if (bc == 0)
            for (int64_t c = 0; c < d; ++c) out.push_back({a, 0, c, d});
          continue;
        }
        if (bc % b != 0) continue;
        const int64_t c = bc / b;
        if (c < d) out.push_back({a, b, c, d});
      }
    }
  }
  return out;
}

const std::vector<Heilbronn>& heilbronn_cached(int64_t n) {
  static std::mutex lock;
  static std::map<int64_t, std::vector<Heilbronn>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, heilbronn_merel(n)).first;
  return it->second;
}

Chain hecke_on_symbol(Curve curve, int64_t N, int64_t n, const ManinSymbol& s) {
  Chain out(N, curve);
  for (const Heilbronn& h : heilbronn_cached(n)) {
    const int64_t u = s.u * h.a + s.v * h.c;
    const int64_t v = s.u * h.b + s.v * h.d;
    if (valid_image(curve, N, u, v)) out.add_symbol(u, v, 1);
  }
  return out.normalize();
}

Chain diamond_on_symbol(Curve curve, int64_t N, int64_t j, const ManinSymbol& s) {
  Chain out(N, curve);
  out.add_symbol(mul_mod(j, s.u, N), mul_mod(j, s.v, N), 1);
  return out;
}

Chain star_on_symbol(Curve curve, int64_t N, const ManinSymbol& s) {
  Chain out(N, curve);
  out.add_symbol(-s.u, s.v, 1);
  return out;
}

Chain atkin_lehner_on_symbol(Curve curve, int64_t N, const ManinSymbol& s) {
  return adjusted_symbol_chain(curve, N, s.u, s.v).normalize();
}

std::vector<int64_t> chain_boundary_row(Curve curve, int64_t N, const Chain& c) {
  std::vector<int64_t> row(cusp_classes(curve, N).size(), 0);
  for (const auto& [i, coef] : c.terms) {
    ManinSymbol s = symbol_at(curve, N, i);
    SymbolBoundary b = symbol_boundary(curve, N, s.u, s.v);
    row[cusp_index(curve, N, b.end)] += coef;
    row[cusp_index(curve, N, b.start)] -= coef;
  }
  return row;
}

std::vector<std::vector<int64_t>> hecke_boundary_table(Curve curve, int64_t N, int64_t n) {
  const std::size_t count = symbol_count(curve, N);
  std::vector<std::vector<int64_t>> table(count);
  for (std::size_t i = 0; i < count; ++i) table[i] = chain_boundary_row(curve, N, hecke_on_symbol(curve, N, n, symbol_at(curve, N, i)));
  return table;
}

IntMatrix quotient_operator(const SymbolSpace& space, const SymbolMap& f) {
  const PresentationData& d = space.data();
  const std::size_t r = space.quotient_rank();
  std::vector<IntVector> free_images;
  for (std::size_t g : d.free_generators) free_images.push_back(space.quotient_coordinates(f(d.generators[g])));
  if (!space.is_exact()) return IntMatrix::from_rows(free_images, r, BigInt(*space.options().modulus));
  IntMatrix out(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t c = 0; c < r; ++c) {
      BigRational s = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (d.lattice_in_free[j][k] != 0 && free_images[k][c] != 0) s += d.lattice_in_free[j][k] * free_images[k][c];
      if (boost::multiprecision::denominator(s) != 1)
        throw Error(ErrorCode::InvalidArgument, kModule, "operator does not preserve the symbol lattice");
      out.set(j, c, boost::multiprecision::numerator(s));
    }
  }
  return out;
}

IntMatrix restrict_to_space(const SymbolSpace& space, const IntMatrix& q) {
  const IntMatrix& B = space.basis();
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < B.rows(); ++i) rows.push_back(space.to_space(q.left_apply(B.row(i))));
  if (B.is_modular()) return IntMatrix::from_rows(rows, B.rows(), *B.modulus());
  return IntMatrix::from_rows(rows, B.rows());
}

std::string HeckeMatrix::label() const {
  switch (tag) {
    case OperatorTag::Hecke: return "T" + std::to_string(index);
    case OperatorTag::Diamond: return "<" + std::to_string(index) + ">";
    case OperatorTag::AtkinLehner: return "W";
    case OperatorTag::Star: return "star";
  }
  return "?";
}

namespace {

HeckeMatrix make(const SymbolSpace& space, OperatorTag tag, int64_t index, const SymbolMap& f) {
  return {tag, index, restrict_to_space(space, quotient_operator(space, f)), space.id()};
}

}  // namespace

HeckeMatrix hecke_matrix(const SymbolSpace& space, int64_t l) {
  const int64_t N = space.level();
  if (l < 2 || !is_prime(l) || l == N)
    throw Error(ErrorCode::BadPrime, kModule, "T_l needs a prime l != N, got " + std::to_string(l));
  const Curve c = space.curve();
  return make(space, OperatorTag::Hecke, l, [&](const ManinSymbol& s) { return hecke_on_symbol(c, N, l, s); });
}

HeckeMatrix un_matrix(const SymbolSpace& space) {
  const int64_t N = space.level();
  const Curve c = space.curve();
  return make(space, OperatorTag::Hecke, N, [&](const ManinSymbol& s) { return hecke_on_symbol(c, N, N, s); });
}

HeckeMatrix diamond_matrix(const SymbolSpace& space, int64_t j) {
  const int64_t N = space.level();
  if (mod(j, N) == 0) throw Error(ErrorCode::InvalidArgument, kModule, "diamond index must be a unit mod N");
  const Curve c = space.curve();
  return make(space, OperatorTag::Diamond, mod(j, N),
              [&](const ManinSymbol& s) { return diamond_on_symbol(c, N, j, s); });
}

HeckeMatrix atkin_lehner_matrix(const SymbolSpace& space) {
  if (space.curve() != Curve::X0)
    throw Error(ErrorCode::InvalidArgument, kModule, "W_N is only built on X0 spaces");
  const int64_t N = space.level();
  return make(space, OperatorTag::AtkinLehner, N,
              [&](const ManinSymbol& s) { return atkin_lehner_on_symbol(Curve::X0, N, s); });
}

HeckeMatrix star_matrix(const SymbolSpace& space) {
  const int64_t N = space.level();
  const Curve c = space.curve();
  return make(space, OperatorTag::Star, -1, [&](const ManinSymbol& s) { return star_on_symbol(c, N, s); });
}

bool commute(const HeckeMatrix& a, const HeckeMatrix& b) {
  if (a.space_id != b.space_id) throw Error(ErrorCode::LevelMismatch, kModule, "operators on different spaces");
  return a.matrix * b.matrix == b.matrix * a.matrix;
}

}  // namespace eisen
