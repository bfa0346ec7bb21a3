#pragma once

#include "dmf/field.hpp"

#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dmf {

// Degree reported for the zero polynomial. Far enough from INT_MIN that
// sums of two sentinels do not overflow.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min() / 4;

// Dense polynomial in A = F_q[T], coefficients low degree first, with no
// trailing zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const FieldCtx& field) : field_(&field) {}
  Poly(const FieldCtx& field, std::vector<FqElem> coeffs);

  static Poly zero(const FieldCtx& field) { return Poly(field); }
  static Poly one(const FieldCtx& field) { return constant(field, field.one()); }
  static Poly constant(const FieldCtx& field, FqElem c);
  static Poly from_int(const FieldCtx& field, long long c) { return constant(field, field.from_int(c)); }
  static Poly monomial(const FieldCtx& field, FqElem c, int degree);
  static Poly T(const FieldCtx& field) { return monomial(field, field.one(), 1); }
  // Builds from residues mod p (prime-field coefficients), low degree first.
  static Poly from_ints(const FieldCtx& field, const std::vector<long long>& coeffs);

  const FieldCtx& field() const { return *field_; }
  const FieldCtx* field_ptr() const { return field_; }
  const std::vector<FqElem>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  int degree() const { return c_.empty() ? kZeroDegree : int(c_.size()) - 1; }
  FqElem lead() const { return c_.empty() ? FqElem{} : c_.back(); }
  FqElem coeff(int i) const { return (i < 0 || i >= int(c_.size())) ? FqElem{} : c_[std::size_t(i)]; }

  Poly operator-() const;
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g) { return *this = *this * g; }
  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }

  Poly scaled(FqElem c) const;
  // Multiplication by T^n, n >= 0.
  Poly shifted(int n) const;
  Poly monic() const;
  Poly pow(long long n) const;
  // f(T^m).
  Poly inflate(int m) const;
  // f^p: coefficients raised to the p-th power, placed at T^(p i).
  Poly frobenius() const;

  std::string to_string() const;

 private:
  void trim();
  void check_field(const Poly& g) const;

  const FieldCtx* field_ = nullptr;
  std::vector<FqElem> c_;
};

// Quotient and remainder with deg(remainder) < deg(g). Throws DivisionByZero.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
inline Poly operator%(const Poly& f, const Poly& g) { return divrem(f, g).second; }
// Throws DivisionNotExact when g does not divide f.
Poly exact_div(const Poly& f, const Poly& g);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);

// T^(q^d) - T.
Poly special_modulus(const FieldCtx& field, int d);
// prod_{i=1..d} (T^(q^i) - T), the lcm of all monics of degree d.
Poly lcm_monics(const FieldCtx& field, int d);

// Inverse of Poly::to_string: terms joined by " + " in descending degree,
// each "c*T^n", "T^n", "c*T", "T" or "c"; multi-term coefficients in
// parentheses.
Poly parse_poly(const FieldCtx& field, std::string_view text);

}  // namespace dmf

namespace dmf {

// Sums of polynomial products with one final reduction. Over prime fields
// products are accumulated as raw integers; over extension fields through
// the field tables.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(const FieldCtx& field) : field_(&field) {}

  void add_product(const Poly& a, const Poly& b);
  void add_product(const Poly& a, const Poly& b, FqElem scale);
  void add(const Poly& a, FqElem scale = FqElem{1}, int shift = 0);
  bool empty() const { return raw_.empty() && ext_.empty(); }
  // Returns the reduced sum and resets the accumulator.
  Poly take();

 private:
  void reserve(std::size_t n);

  const FieldCtx* field_;
  std::vector<std::uint64_t> raw_;
  std::vector<FqElem> ext_;
};

}  // namespace dmf
