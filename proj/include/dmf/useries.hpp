#pragma once

#include "dmf/ratfunc.hpp"

#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dmf {

// Truncated Laurent series sum_{val <= e < prec} c_e u^e + O(u^prec) over K.
//
// val is a tracked lower bound for the valuation (normalized() tightens it);
// prec is a hard bound: reading a coefficient at e >= prec throws
// PrecisionExceeded. The optional support class records that every nonzero
// exponent is congruent to it mod (q - 1).
class USeries {
 public:
  USeries() = default;
  // Zero series O(u^prec) with tracked valuation val (< prec).
  USeries(const FieldCtx& field, int val, int prec);
  // coeffs[i] is the coefficient of u^(val + i); size must be prec - val.
  USeries(const FieldCtx& field, int val, int prec, std::vector<RatFunc> coeffs,
          std::optional<int> support_class = std::nullopt);

  static USeries zero(const FieldCtx& field, int prec) { return USeries(field, prec - 1, prec); }
  static USeries one(const FieldCtx& field, int prec) { return constant(field, RatFunc::one(field), prec); }
  static USeries constant(const FieldCtx& field, const RatFunc& c, int prec);
  static USeries monomial(const FieldCtx& field, const RatFunc& c, int exp, int prec);
  // u^exp, exact to prec.
  static USeries u_power(const FieldCtx& field, int exp, int prec) {
    return monomial(field, RatFunc::one(field), exp, prec);
  }

  const FieldCtx& field() const { return *field_; }
  const FieldCtx* field_ptr() const { return field_; }
  int val() const { return val_; }
  int prec() const { return prec_; }
  std::optional<int> support_class() const { return class_; }

  // Coefficient of u^e; zero below val. Throws PrecisionExceeded if e >= prec.
  RatFunc coeff(int e) const;
  const std::vector<RatFunc>& data() const { return c_; }

  // Exponent of the first nonzero coefficient below prec.
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }
  // Every coefficient lies in A.
  bool is_integral() const;
  // Nonzero (exponent, coefficient) pairs in ascending order.
  std::vector<std::pair<int, RatFunc>> terms() const;

  // val raised to the true valuation (zero series keep one slot).
  USeries normalized() const;
  // Lower the precision to min(prec, new_prec).
  USeries truncated(int new_prec) const;
  // Multiplication by u^k.
  USeries shifted(int k) const;
  // Lowest exponent tracked set to new_val (<= val), padding with zeros.
  USeries extended_down(int new_val) const;

  // Exact support-class tag; throws std::logic_error when some nonzero
  // exponent is outside the class.
  USeries with_support_class(std::optional<int> cls) const;
  // Residue class shared by all nonzero exponents, if any.
  std::optional<int> detect_support_class() const;

  USeries operator-() const;
  USeries& operator+=(const USeries& g);
  USeries& operator-=(const USeries& g);
  friend USeries operator+(USeries f, const USeries& g) { return f += g; }
  friend USeries operator-(USeries f, const USeries& g) { return f -= g; }
  friend USeries operator*(const USeries& f, const USeries& g);
  friend USeries operator*(const RatFunc& c, const USeries& f) { return f.scaled(c); }

  USeries scaled(const RatFunc& c) const;
  // Coefficient-wise division by a polynomial; throws DivisionNotExact.
  USeries exact_divided(const Poly& d) const;
  // f^p in characteristic p: c_e^p u^(p e), precision p * prec.
  USeries frobenius() const;

  std::string to_string() const;

 private:
  void check_field(const USeries& g) const;

  const FieldCtx* field_ = nullptr;
  int val_ = 0;
  int prec_ = 1;
  std::vector<RatFunc> c_;
  std::optional<int> class_;
};

// Product to precision min(val_f + prec_g, val_g + prec_f, prec_cap).
USeries mul(const USeries& f, const USeries& g, int prec_cap = INT_MAX);
// Multiplicative inverse; the leading coefficient must be nonzero.
// Relative precision is preserved. Throws ZeroSeries.
USeries series_inv(const USeries& f);
// Binary powering; negative n inverts first; multiples of p go through
// the Frobenius. f^0 = 1 with the relative precision of f.
USeries series_pow(const USeries& f, long long n);
// Pullback z -> Tz: the substitution u -> u^q / (1 + T u^(q-1)).
// Output precision q * prec, lowered to prec_cap.
USeries substitute_Tz(const USeries& f, int prec_cap = INT_MAX);
// Coefficients agree on the common range of precision.
bool agree_to_precision(const USeries& f, const USeries& g);

}  // namespace dmf
