#include "eisen/modsym/symbol_space.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/normal_form.hpp"
#include "eisen/arith/number_theory.hpp"
#include "eisen/util/sha256.hpp"

#include <deque>
#include <sstream>

namespace eisen {

namespace {

const char* kModule = "modsym";

struct ExactRing {
  using T = BigRational;
  bool is_zero(const T& x) const { return x == 0; }
  bool is_unit(const T& x) const { return x != 0; }
  T inv(const T& x) const { return T(1) / x; }
  T mul(const T& a, const T& b) const { return a * b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T from_int(int64_t x) const { return T(x); }
};

struct ModRing {
  int64_t m;
  using T = int64_t;
  bool is_zero(T x) const { return x == 0; }
  bool is_unit(T x) const { return x != 0 && gcd(x, m) == 1; }
  T inv(T x) const { return inv_mod(x, m); }
  T mul(T a, T b) const { return mul_mod(a, b, m); }
  T sub(T a, T b) const { return mod(a - b, m); }
  T from_int(int64_t x) const { return mod(x, m); }
};

template <class R>
struct Elimination {
  std::vector<std::size_t> free_cols;
  // Coordinates of each column over the free columns.
  std::vector<std::vector<typename R::T>> expr;
};

// Full reduction with pivots chosen from the last column backwards, so the
// free columns are the lowest-index independent ones.
template <class R>
Elimination<R> eliminate(const R& ring, std::vector<std::vector<typename R::T>> rows, std::size_t ncols) {
  using T = typename R::T;
  std::vector<long> pivot_row(ncols, -1);
  std::vector<bool> used(rows.size(), false);
  for (std::size_t col = ncols; col-- > 0;) {
    long pr = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!used[i] && ring.is_unit(rows[i][col])) {
        pr = static_cast<long>(i);
        break;
      }
    }
    if (pr < 0) continue;
    used[pr] = true;
    pivot_row[col] = pr;
    std::vector<T>& prow = rows[pr];
    T iv = ring.inv(prow[col]);
    for (T& x : prow)
      if (!ring.is_zero(x)) x = ring.mul(x, iv);
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < ncols; ++j)
      if (!ring.is_zero(prow[j])) support.push_back(j);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<long>(i) == pr || ring.is_zero(rows[i][col])) continue;
      T f = rows[i][col];
      for (std::size_t j : support) rows[i][j] = ring.sub(rows[i][j], ring.mul(f, prow[j]));
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!ring.is_zero(rows[i][j])) {
        throw Error(ErrorCode::PrecisionExhausted, kModule,
                    "relation module has torsion at the working modulus; raise the modulus");
      }
    }
  }
  Elimination<R> out;
  std::vector<long> free_pos(ncols, -1);
  for (std::size_t j = 0; j < ncols; ++j) {
    if (pivot_row[j] < 0) {
      free_pos[j] = static_cast<long>(out.free_cols.size());
      out.free_cols.push_back(j);
    }
  }
  const std::size_t r = out.free_cols.size();
  out.expr.assign(ncols, std::vector<T>(r, ring.from_int(0)));
  for (std::size_t j = 0; j < ncols; ++j) {
    if (pivot_row[j] < 0) {
      out.expr[j][free_pos[j]] = ring.from_int(1);
      continue;
    }
    const std::vector<T>& row = rows[pivot_row[j]];
    for (std::size_t k = 0; k < r; ++k) {
      const T& c = row[out.free_cols[k]];
      if (!ring.is_zero(c)) out.expr[j][k] = ring.sub(ring.from_int(0), c);
    }
  }
  return out;
}

// Relations x_i = eps * x_j from the two-term and sign relations, resolved by
// breadth-first search into components with a sign relative to the root.
struct SignedComponents {
  std::vector<std::size_t> root;
  std::vector<int> sign;
  std::vector<bool> zero;  // indexed by generator, true if its component is 0
};

SignedComponents resolve_two_term(Curve curve, int64_t N, Sign s) {
  const std::size_t n = symbol_count(curve, N);
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    ManinSymbol x = symbol_at(curve, N, i);
    std::size_t j = symbol_index(curve, N, x.v, -x.u);
    adj[i].emplace_back(j, -1);
    adj[j].emplace_back(i, -1);
    if (s != Sign::None) {
      std::size_t k = symbol_index(curve, N, -x.u, x.v);
      int e = s == Sign::Plus ? 1 : -1;
      adj[i].emplace_back(k, e);
      adj[k].emplace_back(i, e);
    }
  }
  SignedComponents sc;
  sc.root.assign(n, n);
  sc.sign.assign(n, 0);
  sc.zero.assign(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (sc.root[start] != n) continue;
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue = {start};
    sc.root[start] = start;
    sc.sign[start] = 1;
    bool contradiction = false;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      members.push_back(i);
      for (auto [j, e] : adj[i]) {
        int sj = sc.sign[i] * e;
        if (sc.root[j] == n) {
          sc.root[j] = start;
          sc.sign[j] = sj;
          queue.push_back(j);
        } else if (sc.sign[j] != sj) {
          contradiction = true;
        }
      }
    }
    if (contradiction)
      for (std::size_t i : members) sc.zero[i] = true;
  }
  return sc;
}

std::vector<Relation> all_relations(Curve curve, int64_t N, Sign s) {
  std::vector<Relation> rels;
  const std::size_t n = symbol_count(curve, N);
  for (std::size_t i = 0; i < n; ++i) {
    ManinSymbol x = symbol_at(curve, N, i);
    std::size_t j = symbol_index(curve, N, x.v, -x.u);
    if (i <= j) rels.push_back({Relation::Kind::TwoTerm, {{i, 1}, {j, 1}}});
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ManinSymbol x = symbol_at(curve, N, i);
    std::size_t j = symbol_index(curve, N, x.v, -x.u - x.v);
    ManinSymbol y = symbol_at(curve, N, j);
    std::size_t k = symbol_index(curve, N, y.v, -y.u - y.v);
    seen[i] = seen[j] = seen[k] = true;
    rels.push_back({Relation::Kind::ThreeTerm, {{i, 1}, {j, 1}, {k, 1}}});
  }
  if (s != Sign::None) {
    const int64_t e = s == Sign::Plus ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) {
      ManinSymbol x = symbol_at(curve, N, i);
      std::size_t k = symbol_index(curve, N, -x.u, x.v);
      if (i < k) rels.push_back({Relation::Kind::SignStar, {{i, 1}, {k, e}}});
      if (i == k && s == Sign::Minus) rels.push_back({Relation::Kind::SignStar, {{i, 2}}});
    }
  }
  return rels;
}

// Coordinates of x in the row span of an echelon matrix, by successive
// reduction at the pivot columns. Returns false if x is not in the span.
bool echelon_coordinates(const IntMatrix& E, const IntVector& x, IntVector& out) {
  IntVector rem = x;
  out.assign(E.rows(), 0);
  const bool modular = E.is_modular();
  for (std::size_t i = 0; i < E.rows(); ++i) {
    std::size_t c = 0;
    while (c < E.cols() && E(i, c) == 0) ++c;
    if (c == E.cols()) continue;
    if (rem[c] % E(i, c) != 0) return false;
    BigInt k = rem[c] / E(i, c);
    out[i] = k;
    if (k == 0) continue;
    for (std::size_t j = 0; j < E.cols(); ++j) {
      rem[j] -= k * E(i, j);
      if (modular) rem[j] = mod_floor(rem[j], *E.modulus());
    }
  }
  for (const BigInt& e : rem)
    if (e != 0) return false;
  return true;
}

IntMatrix column_subset(const IntMatrix& M, const std::vector<std::size_t>& cols) {
  IntMatrix out = M.is_modular() ? IntMatrix(M.rows(), cols.size(), *M.modulus()) : IntMatrix(M.rows(), cols.size());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, j, M(i, cols[j]));
  return out;
}

}  // namespace

const char* relative_name(RelativeTo r) {
  switch (r) {
    case RelativeTo::None: return "none";
    case RelativeTo::AllCusps: return "all";
    case RelativeTo::CInfinity: return "cinf";
    case RelativeTo::CZero: return "czero";
  }
  return "?";
}

const char* sign_name(Sign s) {
  switch (s) {
    case Sign::None: return "none";
    case Sign::Plus: return "plus";
    case Sign::Minus: return "minus";
  }
  return "?";
}

std::string SpaceOptions::key() const {
  std::ostringstream os;
  os << curve_name(curve) << "/rel=" << relative_name(relative_to) << "/sign=" << sign_name(sign) << "/mod="
     << (modulus ? std::to_string(*modulus) : std::string("exact"));
  return os.str();
}

SymbolSpace::SymbolSpace(const LevelContext& ctx, PresentationData data)
    : ctx_(ctx), data_(std::move(data)), cusps_(cusp_classes(data_.options.curve, data_.N)) {}

SymbolSpace SymbolSpace::from_data(const LevelContext& ctx, PresentationData data) {
  if (data.N != ctx.N) throw Error(ErrorCode::LevelMismatch, kModule, "presentation level differs from context");
  if (data.generator_coordinates.rows() != data.generators.size() ||
      data.basis.cols() != data.generator_coordinates.cols() ||
      data.boundary.rows() != data.generator_coordinates.cols()) {
    throw Error(ErrorCode::CacheError, kModule, "inconsistent presentation shapes");
  }
  return SymbolSpace(ctx, std::move(data));
}

SymbolSpace SymbolSpace::build(const LevelContext& ctx, const SpaceOptions& opts) {
  const int64_t N = ctx.N;
  const Curve curve = opts.curve;
  PresentationData d;
  d.N = N;
  d.options = opts;
  d.generators = manin_generators(curve, N);
  d.relations = all_relations(curve, N, opts.sign);
  const std::size_t n = d.generators.size();

  SignedComponents sc = resolve_two_term(curve, N, opts.sign);
  std::vector<long> rep_col(n, -1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (!sc.zero[i] && sc.root[i] == i) {
      rep_col[i] = static_cast<long>(reps.size());
      reps.push_back(i);
    }
  }
  const std::size_t nreps = reps.size();

  std::vector<std::vector<int64_t>> int_rows;
  for (const Relation& rel : d.relations) {
    if (rel.kind != Relation::Kind::ThreeTerm) continue;
    std::vector<int64_t> row(nreps, 0);
    bool nonzero = false;
    for (auto [g, c] : rel.terms) {
      if (sc.zero[g]) continue;
      row[rep_col[sc.root[g]]] += c * sc.sign[g];
      nonzero = true;
    }
    if (nonzero) int_rows.push_back(std::move(row));
  }

  std::vector<std::size_t> bnd_cusps;
  const std::vector<CuspClass> cusps = cusp_classes(curve, N);
  auto generator_boundary = [&](std::size_t g) {
    std::vector<int64_t> b(cusps.size(), 0);
    if (opts.sign == Sign::Minus) return b;
    const ManinSymbol& s = d.generators[g];
    SymbolBoundary sb = symbol_boundary(curve, N, s.u, s.v);
    b[cusp_index(curve, N, sb.end)] += 1;
    b[cusp_index(curve, N, sb.start)] -= 1;
    return b;
  };

  std::size_t r = 0;
  if (!opts.modulus) {
    ExactRing ring;
    std::vector<std::vector<BigRational>> rows;
    for (const auto& ir : int_rows) {
      std::vector<BigRational> row(nreps);
      for (std::size_t j = 0; j < nreps; ++j) row[j] = ir[j];
      rows.push_back(std::move(row));
    }
    Elimination<ExactRing> el = eliminate(ring, std::move(rows), nreps);
    r = el.free_cols.size();
    for (std::size_t k : el.free_cols) d.free_generators.push_back(reps[k]);
    // Rational coordinates of each generator over the free generators.
    std::vector<std::vector<BigRational>> coords(n, std::vector<BigRational>(r));
    BigInt den = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (sc.zero[i]) continue;
      const auto& e = el.expr[rep_col[sc.root[i]]];
      for (std::size_t k = 0; k < r; ++k) {
        coords[i][k] = sc.sign[i] * e[k];
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(coords[i][k]));
      }
    }
    IntMatrix scaled(n, r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < r; ++k) {
        BigRational x = coords[i][k] * den;
        scaled.set(i, k, boost::multiprecision::numerator(x));
      }
    HermiteForm hf = hermite_form(scaled, false);
    if (hf.rank != r) throw Error(ErrorCode::InvalidArgument, kModule, "generator image does not span the quotient");
    IntMatrix B = hf.H.submatrix(0, r, 0, r);
    d.lattice_in_free.assign(r, std::vector<BigRational>(r));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) d.lattice_in_free[j][k] = BigRational(B(j, k), den);
    d.generator_coordinates = IntMatrix(n, r);
    IntVector y;
    for (std::size_t i = 0; i < n; ++i) {
      if (!echelon_coordinates(B, scaled.row(i), y))
        throw Error(ErrorCode::InvalidArgument, kModule, "generator outside its own lattice");
      d.generator_coordinates.set_row(i, y);
    }
    d.boundary = IntMatrix(r, cusps.size());
    std::vector<std::vector<int64_t>> fb;
    for (std::size_t k = 0; k < r; ++k) fb.push_back(generator_boundary(d.free_generators[k]));
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t c = 0; c < cusps.size(); ++c) {
        BigRational s = 0;
        for (std::size_t k = 0; k < r; ++k)
          if (fb[k][c] != 0) s += d.lattice_in_free[j][k] * fb[k][c];
        if (boost::multiprecision::denominator(s) != 1)
          throw Error(ErrorCode::InvalidArgument, kModule, "non-integral boundary on the lattice");
        d.boundary.set(j, c, boost::multiprecision::numerator(s));
      }
    }
  } else {
    const int64_t m = *opts.modulus;
    ModRing ring{m};
    std::vector<std::vector<int64_t>> rows;
    for (const auto& ir : int_rows) {
      std::vector<int64_t> row(nreps);
      for (std::size_t j = 0; j < nreps; ++j) row[j] = mod(ir[j], m);
      rows.push_back(std::move(row));
    }
    Elimination<ModRing> el = eliminate(ring, std::move(rows), nreps);
    r = el.free_cols.size();
    for (std::size_t k : el.free_cols) d.free_generators.push_back(reps[k]);
    d.generator_coordinates = IntMatrix(n, r, BigInt(m));
    for (std::size_t i = 0; i < n; ++i) {
      if (sc.zero[i]) continue;
      const auto& e = el.expr[rep_col[sc.root[i]]];
      for (std::size_t k = 0; k < r; ++k)
        if (e[k] != 0) d.generator_coordinates.set(i, k, sc.sign[i] * e[k]);
    }
    d.boundary = IntMatrix(r, cusps.size(), BigInt(m));
    for (std::size_t k = 0; k < r; ++k) {
      auto b = generator_boundary(d.free_generators[k]);
      for (std::size_t c = 0; c < cusps.size(); ++c) d.boundary.set(k, c, b[c]);
    }
  }

  switch (opts.relative_to) {
    case RelativeTo::AllCusps:
      d.basis = IntMatrix::identity(r, d.boundary.modulus());
      break;
    case RelativeTo::None:
      d.basis = left_kernel(d.boundary);
      break;
    case RelativeTo::CInfinity:
    case RelativeTo::CZero: {
      // Keep the boundary coefficients on the other cusp set; they must vanish.
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < cusps.size(); ++c)
        if (cusps[c].over_zero == (opts.relative_to == RelativeTo::CInfinity)) cols.push_back(c);
      d.basis = left_kernel(column_subset(d.boundary, cols));
      break;
    }
  }
  if (d.basis.rows() == 0) d.basis = d.boundary.is_modular() ? IntMatrix(0, r, *d.boundary.modulus()) : IntMatrix(0, r);
  return SymbolSpace(ctx, std::move(d));
}

IntMatrix SymbolSpace::relation_matrix() const {
  IntMatrix M(data_.relations.size(), data_.generators.size());
  for (std::size_t i = 0; i < data_.relations.size(); ++i)
    for (auto [g, c] : data_.relations[i].terms) M.add_to(i, g, c);
  return M;
}

IntVector SymbolSpace::zero_vector() const { return IntVector(quotient_rank(), 0); }

IntVector SymbolSpace::quotient_coordinates(const Chain& x) const {
  if (x.N != data_.N || x.curve != data_.options.curve) {
    throw Error(ErrorCode::LevelMismatch, kModule, "chain lives on a different curve or level");
  }
  const IntMatrix& G = data_.generator_coordinates;
  IntVector out(G.cols(), 0);
  for (const auto& [i, c] : x.terms) {
    if (c == 0) continue;
    for (std::size_t k = 0; k < G.cols(); ++k)
      if (G(i, k) != 0) out[k] += c * G(i, k);
  }
  if (G.is_modular())
    for (BigInt& e : out) e = mod_floor(e, *G.modulus());
  return out;
}

IntVector SymbolSpace::to_space(const IntVector& xq) const {
  IntVector y;
  if (!echelon_coordinates(data_.basis, xq, y)) {
    throw Error(ErrorCode::InvalidArgument, kModule, "element is not in " + id());
  }
  return y;
}

bool SymbolSpace::in_space(const IntVector& xq) const {
  IntVector y;
  return echelon_coordinates(data_.basis, xq, y);
}

IntVector SymbolSpace::coordinates(const Chain& x) const { return to_space(quotient_coordinates(x)); }

IntVector SymbolSpace::from_space(const IntVector& ys) const { return data_.basis.left_apply(ys); }

CuspDivisor SymbolSpace::boundary(const Chain& x) const {
  if (!is_relative()) throw Error(ErrorCode::NotRelativeSpace, kModule, id() + " is absolute");
  CuspDivisor out;
  if (data_.options.sign == Sign::Minus) return out;
  for (const auto& [i, c] : x.terms) {
    const ManinSymbol& s = data_.generators[i];
    SymbolBoundary sb = symbol_boundary(curve(), level(), s.u, s.v);
    add_to_divisor(out, sb.end, c);
    add_to_divisor(out, sb.start, -c);
  }
  return out;
}

CuspDivisor SymbolSpace::boundary_of(const IntVector& xq) const {
  if (!is_relative()) throw Error(ErrorCode::NotRelativeSpace, kModule, id() + " is absolute");
  IntVector b = data_.boundary.left_apply(xq);
  CuspDivisor out;
  for (std::size_t c = 0; c < b.size(); ++c) {
    BigInt v = b[c];
    if (data_.boundary.is_modular() && v * 2 > *data_.boundary.modulus()) v -= *data_.boundary.modulus();
    add_to_divisor(out, cusps_[c], static_cast<int64_t>(v));
  }
  return out;
}

std::string SymbolSpace::id() const {
  const SpaceOptions& o = data_.options;
  return std::string(curve_name(o.curve)) + "(" + std::to_string(level()) + ")/rel=" + relative_name(o.relative_to) +
         "/sign=" + sign_name(o.sign) + (o.modulus ? "/mod=" + std::to_string(*o.modulus) : std::string());
}

std::string SymbolSpace::fingerprint() const {
  std::ostringstream os;
  os << id() << "|free:";
  for (std::size_t g : data_.free_generators) os << g << ",";
  os << "|gens:" << data_.generator_coordinates.to_string() << "|basis:" << data_.basis.to_string();
  return sha256_hex(os.str());
}

}  // namespace eisen
