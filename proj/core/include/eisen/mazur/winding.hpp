#pragma once

#include "eisen/hecke/eisenstein.hpp"

#include <map>
#include <memory>

namespace eisen {

// The winding map x -> x{0,oo} from the Eisenstein ideal to H_1(X0(N))^+,
// together with the identification (H/IH)_p ~ Z/q normalized by phi(g) = 1,
// where phi(x) is the class of {0, 1/b} for b = x^-1 mod N.
struct WindingData {
  std::shared_ptr<const EisLocalData> eis;
  IntVector winding_class;  // {0,oo} in relative coordinates
  BigInt kappa;             // raw (H/IH)_p coordinate of phi(g)
  std::vector<BigInt> phi_table;  // phi_table[x] = normalized phi(x), x in [1, N)
  std::map<int64_t, IntVector> e_plus;     // eta_l{0,oo} in absolute coordinates
  std::map<int64_t, BigInt> e_tilde;       // its normalized class mod IH
  IntVector e_plus_w1;                     // (W+1){0,oo}
  // Intrinsic identification I/I^2 -> U (dlog scale) fixed on a base generator.
  int64_t base_ell = 0;
  BigInt base_coordinate;  // raw (I/I^2)_p coordinate of eta_{base}
  BigInt base_value;       // (base - 1) dlog(base) mod q
};

WindingData build_winding(std::shared_ptr<const EisLocalData> eis);

// x given on the relative space; throws NotInIdeal unless x lies in I.
IntVector winding_apply(const WindingData& w, const IntMatrix& x_relative);
// Normalized class in Z/q of an absolute vector modulo IH.
BigInt phi_coordinate(const WindingData& w, const IntVector& absolute);
// Identification of (I/I^2)_p with U in dlog coordinates; x on H.
BigInt winding_identification(const WindingData& w, const IntMatrix& x_absolute);

struct PhiVerdict {
  int64_t a = 0, b = 0;
  BigInt lhs;  // normalized class of {0, a/b}
  BigInt rhs;  // dlog(b^-1) mod q
  bool ok = false;
};
PhiVerdict phi_check(const WindingData& w, int64_t a, int64_t b);

struct WindingCheck {
  int64_t ell = 0;
  BigInt lhs;            // class of eta_l{0,oo}
  BigInt literal_rhs;    // (l - 1) dlog(l)
  BigInt corrected_rhs;  // -(l - 1) dlog(l)
  bool literal_ok = false;
  bool corrected_ok = false;
  bool identification_ok = false;  // winding_identification(eta_l) = (l - 1) dlog(l)
};
std::vector<WindingCheck> winding_checks(const WindingData& w);

struct RootCheck {
  int64_t ell = 0;
  BigInt u;  // (l - 1)^-1 mod q^slack
  bool holds = false;
  std::optional<BigInt> scalar_value;  // t^2 - T t + l as an integer when h = Z
};
// t = 1 + u eta_l satisfies t^2 - T_l t + l = 0 in (h/I^2)_p.
RootCheck root_identity(const EisLocalData& eis, int64_t ell);

struct AdWitness {
  int64_t ell = 0;
  BigInt a_value;  // winding_identification(u eta_l)
  BigInt d_value;  // winding_identification((T_l - t)/l - 1)
  BigInt minus_dlog;
};

struct AdResult {
  BigInt a_tilde, d_tilde;
  std::vector<AdWitness> witnesses;
  std::vector<int64_t> solving;  // witnesses with dlog(l) a unit
};

// Primes l <= bound with l != N, l != p and l != 1 mod p.
std::vector<int64_t> ad_witness_primes(const LevelContext& ctx, int64_t bound);
AdResult compute_a_d(const WindingData& w, const std::vector<int64_t>& ells);

}  // namespace eisen
