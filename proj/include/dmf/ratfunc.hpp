#pragma once

#include "dmf/poly.hpp"

#include <string>
#include <string_view>

namespace dmf {

// Element of K = F_q(T) as num/den with den monic and gcd(num, den) = 1.
// Values with den = 1 (elements of A) skip all gcd work.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const FieldCtx& field) : num_(field), den_(Poly::one(field)) {}
  RatFunc(Poly num);  // NOLINT(google-explicit-constructor): A embeds in K
  RatFunc(Poly num, Poly den);

  static RatFunc zero(const FieldCtx& field) { return RatFunc(field); }
  static RatFunc one(const FieldCtx& field) { return RatFunc(Poly::one(field)); }
  static RatFunc from_int(const FieldCtx& field, long long c) { return RatFunc(Poly::from_int(field, c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldCtx& field() const { return num_.field(); }
  const FieldCtx* field_ptr() const { return num_.field_ptr(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && is_integral(); }
  // True when the value lies in A.
  bool is_integral() const { return den_.is_zero() || den_.is_one(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& g);
  RatFunc& operator-=(const RatFunc& g);
  RatFunc& operator*=(const RatFunc& g);
  RatFunc& operator/=(const RatFunc& g);
  friend RatFunc operator+(RatFunc f, const RatFunc& g) { return f += g; }
  friend RatFunc operator-(RatFunc f, const RatFunc& g) { return f -= g; }
  friend RatFunc operator*(RatFunc f, const RatFunc& g) { return f *= g; }
  friend RatFunc operator/(RatFunc f, const RatFunc& g) { return f /= g; }
  friend bool operator==(const RatFunc& f, const RatFunc& g) {
    return f.num_ == g.num_ && (f.is_integral() ? g.is_integral() : f.den_ == g.den_);
  }

  RatFunc inv() const;
  RatFunc pow(long long n) const;
  RatFunc frobenius() const;

  // "num" when integral, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void canonicalize();

  Poly num_;
  Poly den_;
};

RatFunc parse_ratfunc(const FieldCtx& field, std::string_view text);

}  // namespace dmf
