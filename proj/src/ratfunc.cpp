#include "dmf/ratfunc.hpp"

#include "dmf/errors.hpp"

namespace dmf {

RatFunc::RatFunc(Poly num) : num_(std::move(num)) {
  if (num_.field_ptr()) den_ = Poly::one(num_.field());
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::one(den_.field());
    num_ = Poly(den_.field());
    return;
  }
  if (den_.is_one()) return;
  if (den_.degree() == 0) {
    num_ = num_.scaled(den_.field().inv(den_.lead()));
    den_ = Poly::one(den_.field());
    return;
  }
  const Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const FqElem lead = den_.lead();
  if (!lead.is_one()) {
    const FqElem li = den_.field().inv(lead);
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& g) {
  if (!field_ptr()) return *this = g;
  if (is_integral() && g.is_integral()) {
    num_ += g.num_;
    return *this;
  }
  if (den_ == g.den_) {
    num_ += g.num_;
  } else {
    num_ = num_ * g.den_ + g.num_ * den_;
    den_ = den_ * g.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& g) { return *this += -g; }

RatFunc& RatFunc::operator*=(const RatFunc& g) {
  if (!field_ptr()) return *this;
  if (is_integral() && g.is_integral()) {
    num_ = num_ * g.num_;
    return *this;
  }
  num_ = num_ * g.num_;
  den_ = den_ * g.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& g) { return *this *= g.inv(); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in K");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long n) const {
  if (n < 0) return inv().pow(-n);
  RatFunc result = RatFunc::one(field());
  RatFunc base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

RatFunc RatFunc::frobenius() const {
  RatFunc r(*this);
  r.num_ = num_.frobenius();
  r.den_ = den_.frobenius();
  return r;
}

std::string RatFunc::to_string() const {
  if (is_integral()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc parse_ratfunc(const FieldCtx& field, std::string_view text) {
  // "(num)/(den)": find the top-level ")/(".
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    int depth = 0;
    for (std::size_t i = 0; i + 2 < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (depth == 0 && text.substr(i, 3) == ")/(") {
        Poly num = parse_poly(field, text.substr(1, i - 1));
        Poly den = parse_poly(field, text.substr(i + 3, text.size() - i - 4));
        if (den.is_zero()) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        RatFunc r(num, den);
        if (r.num() != num || r.den() != den || r.is_integral())
          throw Error(ErrorCode::ParseError, "non-canonical rational function '" + std::string(text) + "'");
        return r;
      }
    }
  }
  return RatFunc(parse_poly(field, text));
}

}  // namespace dmf
