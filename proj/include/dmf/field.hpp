#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dmf {

// An element of GF(p^r). The index packs the coordinates relative to the
// modulus basis {1, w, ..., w^(r-1)} in base p (coordinate 0 least
// significant), so the representation is canonical and equality is exact.
struct FqElem {
  std::uint16_t index = 0;

  constexpr FqElem() = default;
  constexpr explicit FqElem(std::uint16_t i) : index(i) {}

  constexpr bool is_zero() const { return index == 0; }
  constexpr bool is_one() const { return index == 1; }
  friend constexpr auto operator<=>(FqElem, FqElem) = default;
};

class FieldCtx {
 public:
  FieldCtx(int p, int r);
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  int p() const { return p_; }
  int r() const { return r_; }
  int q() const { return q_; }
  bool is_prime_field() const { return r_ == 1; }

  // Monic irreducible of degree r over F_p, low degree first (length r + 1).
  const std::vector<int>& modulus() const { return modulus_; }

  FqElem zero() const { return FqElem{}; }
  FqElem one() const { return FqElem{1}; }
  FqElem from_int(long long n) const;
  FqElem from_coords(std::span<const int> coords) const;
  std::vector<int> coords(FqElem a) const;

  FqElem add(FqElem a, FqElem b) const {
    if (r_ == 1) {
      unsigned s = unsigned(a.index) + b.index;
      return FqElem(std::uint16_t(s >= unsigned(p_) ? s - p_ : s));
    }
    return add_[std::size_t(a.index) * q_ + b.index];
  }
  FqElem neg(FqElem a) const {
    if (r_ == 1) return FqElem(std::uint16_t(a.index == 0 ? 0 : p_ - a.index));
    return neg_[a.index];
  }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem mul(FqElem a, FqElem b) const {
    if (r_ == 1) return FqElem(std::uint16_t((unsigned(a.index) * b.index) % unsigned(p_)));
    return mul_[std::size_t(a.index) * q_ + b.index];
  }
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, long long n) const;
  // a^p; the identity on the prime field.
  FqElem frobenius(FqElem a) const { return r_ == 1 ? a : frob_[a.index]; }

  // Canonical rendering: the residue for r = 1, otherwise a polynomial in
  // the generator "w" with descending powers, e.g. "2*w+1".
  std::string render(FqElem a) const;
  FqElem parse(std::string_view text) const;

  // Elements in index order; index order is the order used for enumeration.
  FqElem element(int index) const { return FqElem(std::uint16_t(index)); }

 private:
  int p_;
  int r_;
  int q_;
  std::vector<int> modulus_;
  std::vector<FqElem> add_, mul_, neg_, inv_, frob_;
};

// Interned field for (p, r). The returned reference stays valid for the
// lifetime of the process, so Poly and USeries may hold plain pointers.
const FieldCtx& make_field(int p, int r);

bool is_prime(long long n);

// Lexicographically smallest monic irreducible polynomial of degree r over
// F_p, coefficient vectors compared from the constant term upward.
std::vector<int> smallest_irreducible(int p, int r);

}  // namespace dmf
