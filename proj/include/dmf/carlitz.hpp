#pragma once

#include "dmf/useries.hpp"

#include <functional>
#include <vector>

namespace dmf {

// rho_a(X) = sum_i coeffs[i] X^(q^i), the Carlitz module action of a.
struct CarlitzMap {
  Poly a;
  std::vector<Poly> coeffs;

  int degree() const { return int(coeffs.size()) - 1; }
  friend bool operator==(const CarlitzMap&, const CarlitzMap&) = default;
};

// Built by Horner's rule in T from rho_T = T X + X^q. Throws ZeroInput.
CarlitzMap carlitz_map(const Poly& a);
// outer o inner, as F_q-linear polynomials.
CarlitzMap compose(const CarlitzMap& outer, const CarlitzMap& inner);
// Coefficient-wise sum (rho_a + rho_b = rho_(a+b)).
CarlitzMap operator+(const CarlitzMap& x, const CarlitzMap& y);

// u(az) = 1 / rho_a(1/u) for monic a, to precision prec. Throws NotMonic.
USeries u_sub_a(const Poly& a, int prec);
// u(az)^power computed as u^(power q^deg a) / D^power with D the exact
// polynomial rho_a(1/u) u^(q^deg a).
USeries u_sub_a_power(const Poly& a, int power, int prec);

// All q^deg monics of exactly that degree, constant coefficient varying
// fastest.
std::vector<Poly> monics(const FieldCtx& field, int deg);

using MonicWeight = std::function<Poly(const Poly&)>;

// sum over monic a with power * q^deg(a) < prec of weight(a) u(az)^power,
// exact to prec. Summands are evaluated in parallel and combined in a fixed
// order.
USeries monic_series_sum(const FieldCtx& field, const MonicWeight& weight, int power, int prec);
// Serial reference: u_sub_a followed by series_pow, summed in enumeration order.
USeries monic_series_sum_reference(const FieldCtx& field, const MonicWeight& weight, int power, int prec);

}  // namespace dmf
