#pragma once

#include "eisen/arith/bigint.hpp"
#include "eisen/arith/level_context.hpp"

#include <map>
#include <string>
#include <vector>

namespace eisen {

// eta(z)^r1 * eta(Nz)^rN on X0(N).
struct EtaQuotient {
  BigRational r1 = 0;
  BigRational rN = 0;
  BigRational power = 0;  // k when the quotient is g^k, g = (Delta(Nz)/Delta(z))^(1/12)

  static EtaQuotient g_power(const BigRational& k);
  BigRational weight() const { return (r1 + rN) / 2; }
  EtaQuotient operator*(const EtaQuotient& o) const;
};

// Orders at the cusps 0 and oo in the width-normalized local parameters.
struct CuspOrders {
  BigRational at_zero;
  BigRational at_infinity;
  BigRational degree() const { return at_zero + at_infinity; }
};

CuspOrders eta_orders(const EtaQuotient& e, const LevelContext& ctx);

// a with (value at 0) / (value at oo) = N^a for leading coefficients; the
// quotient must have weight 0 and integral orders.
BigRational fricke_value_exponent(const EtaQuotient& e, const LevelContext& ctx);

// Class in Q^x / (Q^x)^q, signs dropped: prime -> exponent mod q.
using KummerClass = std::map<int64_t, BigInt>;
KummerClass kummer_power_of_n(const LevelContext& ctx, const BigInt& exponent);
std::string kummer_to_string(const KummerClass& k);

struct AuxiliaryChoice {
  std::string name;
  BigRational h_exponent;  // ratio exponent of h
  KummerClass value_class;  // class of (F / h^q)(-D2)
};

struct CInvariant {
  BigInt k;            // F = g^k
  EtaQuotient F;
  CuspOrders orders;
  BigInt d1_coefficient;  // D1 = d1_coefficient * ((0) - (oo))
  BigRational a;
  BigInt a_mod_q;
  std::vector<AuxiliaryChoice> choices;
  BigInt extension_exponent;  // the pulled-back extension is the Kummer class of N^this
  BigInt c_tilde;
  std::vector<std::string> transcript;
};

CInvariant compute_c_invariant(const LevelContext& ctx);

}  // namespace eisen
