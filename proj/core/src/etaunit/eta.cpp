#include "eisen/etaunit/eta.hpp"

#include "eisen/arith/errors.hpp"

#include <sstream>

namespace eisen {

namespace {

const char* kModule = "etaunit";

bool integral(const BigRational& x) { return boost::multiprecision::denominator(x) == 1; }

std::string str(const BigRational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

EtaQuotient EtaQuotient::g_power(const BigRational& k) { return {-2 * k, 2 * k, k}; }

EtaQuotient EtaQuotient::operator*(const EtaQuotient& o) const { return {r1 + o.r1, rN + o.rN, power + o.power}; }

CuspOrders eta_orders(const EtaQuotient& e, const LevelContext& ctx) {
  const BigRational N = ctx.N;
  CuspOrders o;
  o.at_infinity = (e.r1 + N * e.rN) / 24;
  o.at_zero = (N * e.r1 + e.rN) / 24;
  if (e.weight() == 0 && o.degree() != 0)
    throw Error(ErrorCode::NonintegralDivisor, kModule, "weight-0 quotient with nonzero divisor degree");
  return o;
}

BigRational fricke_value_exponent(const EtaQuotient& e, const LevelContext& ctx) {
  if (e.weight() != 0) throw Error(ErrorCode::NonintegralDivisor, kModule, "quotient has nonzero weight");
  CuspOrders o = eta_orders(e, ctx);
  if (!integral(o.at_zero) || !integral(o.at_infinity))
    throw Error(ErrorCode::NonintegralDivisor, kModule, "orders " + str(o.at_zero) + ", " + str(o.at_infinity));
  // eta(-1/z) = sqrt(z/i) eta(z): under z -> -1/(Nz) the quotient picks up
  // N^(r1/2) (z/i)^((r1+rN)/2) and swaps the two exponents. Both leading
  // coefficients at oo are 1.
  return e.r1 / 2;
}

KummerClass kummer_power_of_n(const LevelContext& ctx, const BigInt& exponent) {
  KummerClass k;
  BigInt e = mod_floor(exponent, BigInt(ctx.q));
  if (e != 0) k[ctx.N] = e;
  return k;
}

std::string kummer_to_string(const KummerClass& k) {
  if (k.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [prime, e] : k) {
    if (!first) os << "*";
    os << prime << "^" << e;
    first = false;
  }
  return os.str();
}

CInvariant compute_c_invariant(const LevelContext& ctx) {
  CInvariant c;
  const BigInt q = ctx.q;
  c.k = BigInt(ctx.xi_den) * ctx.r_tilde * ctx.v_tilde;
  c.F = EtaQuotient::g_power(BigRational(c.k));
  c.orders = eta_orders(c.F, ctx);
  c.d1_coefficient = -BigInt(ctx.r_tilde) * ctx.v_tilde * ctx.v;
  std::ostringstream t;
  t << "F = g^" << c.k << ", k mod q = " << mod_floor(c.k, q);
  c.transcript.push_back(t.str());
  if (mod_floor(c.k, q) != 1) throw Error(ErrorCode::ExponentMismatch, kModule, "k is not 1 mod q");
  // div(F) = ord_0 (0) + ord_oo (oo) must equal q D1.
  if (c.orders.at_zero != BigRational(q * c.d1_coefficient) || c.orders.at_infinity != BigRational(-q * c.d1_coefficient))
    throw Error(ErrorCode::ExponentMismatch, kModule, "div(F) differs from q D1");
  c.transcript.push_back("div(F) = " + str(c.orders.at_zero) + "(0) + " + str(c.orders.at_infinity) + "(oo) = q D1");

  c.a = fricke_value_exponent(c.F, ctx);
  if (!integral(c.a)) throw Error(ErrorCode::NonintegralDivisor, kModule, "value exponent " + str(c.a));
  c.a_mod_q = mod_floor(boost::multiprecision::numerator(c.a), q);
  c.transcript.push_back("F(0)/F(oo) = N^a, a = " + str(c.a) + " = " + c.a_mod_q.str() + " mod q");
  if (c.a_mod_q != q - 1) throw Error(ErrorCode::ExponentMismatch, kModule, "a is not -1 mod q");

  // (F/h^q)(-D2) with D2 = (oo) - (0) is F(0)/F(oo) divided by the q-th power
  // of h(0)/h(oo); two choices of h must give the same class.
  const BigInt a_int = boost::multiprecision::numerator(c.a);
  struct Choice {
    std::string name;
    EtaQuotient h;
  };
  std::vector<Choice> hs = {{"h = 1", EtaQuotient{}},
                            {"h = g^" + std::to_string(12 * ctx.xi_den), EtaQuotient::g_power(12 * ctx.xi_den)}};
  for (const Choice& ch : hs) {
    AuxiliaryChoice a;
    a.name = ch.name;
    a.h_exponent = ch.h.r1 == 0 ? BigRational(0) : fricke_value_exponent(ch.h, ctx);
    a.value_class = kummer_power_of_n(ctx, a_int - q * boost::multiprecision::numerator(a.h_exponent));
    c.transcript.push_back(a.name + ": class " + kummer_to_string(a.value_class));
    c.choices.push_back(a);
  }
  for (const AuxiliaryChoice& a : c.choices)
    if (a.value_class != c.choices.front().value_class)
      throw Error(ErrorCode::ExponentMismatch, kModule, "class depends on the auxiliary function");

  c.extension_exponent = c.a_mod_q;
  // The extension of interest is the negative of the pulled-back one.
  c.c_tilde = mod_floor(-c.extension_exponent, q);
  c.transcript.push_back("pulled-back extension = Kummer class of N^" + c.extension_exponent.str() +
                         "; negated: N^" + c.c_tilde.str() + "; c~ = " + c.c_tilde.str());
  return c;
}

}  // namespace eisen
