#include "dmf/useries.hpp"

#include "dmf/errors.hpp"
#include "dmf/kernels.hpp"

#include <stdexcept>

namespace dmf {

namespace {

int mod_class(long long e, int m) {
  long long r = e % m;
  return int(r < 0 ? r + m : r);
}

}  // namespace

USeries::USeries(const FieldCtx& field, int val, int prec)
    : field_(&field), val_(val), prec_(prec), c_(std::size_t(prec - val), RatFunc::zero(field)) {
  if (prec <= val) throw std::logic_error("USeries requires prec > val");
}

USeries::USeries(const FieldCtx& field, int val, int prec, std::vector<RatFunc> coeffs, std::optional<int> cls)
    : field_(&field), val_(val), prec_(prec), c_(std::move(coeffs)) {
  if (prec <= val) throw std::logic_error("USeries requires prec > val");
  if (c_.size() != std::size_t(prec - val)) throw std::logic_error("USeries coefficient count mismatch");
  for (auto& c : c_)
    if (!c.field_ptr()) c = RatFunc::zero(field);
  if (cls) *this = with_support_class(cls);
}

USeries USeries::constant(const FieldCtx& field, const RatFunc& c, int prec) {
  return monomial(field, c, 0, prec);
}

USeries USeries::monomial(const FieldCtx& field, const RatFunc& c, int exp, int prec) {
  if (exp >= prec) return zero(field, prec);
  USeries s(field, exp, prec);
  s.c_[0] = c;
  return s.with_support_class(mod_class(exp, field.q() - 1));
}

RatFunc USeries::coeff(int e) const {
  if (e >= prec_)
    throw Error(ErrorCode::PrecisionExceeded,
                "coefficient of u^" + std::to_string(e) + " requested, series known below u^" + std::to_string(prec_));
  if (e < val_) return RatFunc::zero(*field_);
  return c_[std::size_t(e - val_)];
}

std::optional<int> USeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return val_ + int(i);
  return std::nullopt;
}

bool USeries::is_integral() const {
  for (const auto& c : c_)
    if (!c.is_integral()) return false;
  return true;
}

std::vector<std::pair<int, RatFunc>> USeries::terms() const {
  std::vector<std::pair<int, RatFunc>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) out.emplace_back(val_ + int(i), c_[i]);
  return out;
}

USeries USeries::normalized() const {
  const auto v = valuation();
  const int new_val = v ? *v : prec_ - 1;
  if (new_val == val_) return *this;
  USeries r(*this);
  r.c_.erase(r.c_.begin(), r.c_.begin() + (new_val - val_));
  r.val_ = new_val;
  return r;
}

USeries USeries::truncated(int new_prec) const {
  if (new_prec >= prec_) return *this;
  USeries r(*this);
  if (new_prec <= val_) {
    r.val_ = new_prec - 1;
    r.c_.assign(1, RatFunc::zero(*field_));
  } else {
    r.c_.resize(std::size_t(new_prec - val_));
  }
  r.prec_ = new_prec;
  return r;
}

USeries USeries::shifted(int k) const {
  USeries r(*this);
  r.val_ += k;
  r.prec_ += k;
  if (r.class_) r.class_ = mod_class(*r.class_ + k, field_->q() - 1);
  return r;
}

USeries USeries::extended_down(int new_val) const {
  if (new_val >= val_) return *this;
  USeries r(*this);
  r.c_.insert(r.c_.begin(), std::size_t(val_ - new_val), RatFunc::zero(*field_));
  r.val_ = new_val;
  return r;
}

std::optional<int> USeries::detect_support_class() const {
  const int m = field_->q() - 1;
  std::optional<int> cls;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const int c = mod_class(val_ + int(i), m);
    if (cls && *cls != c) return std::nullopt;
    cls = c;
  }
  return cls;
}

USeries USeries::with_support_class(std::optional<int> cls) const {
  USeries r(*this);
  if (!cls) {
    r.class_.reset();
    return r;
  }
  const int m = field_->q() - 1;
  const int c = mod_class(*cls, m);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero() && mod_class(val_ + int(i), m) != c)
      throw std::logic_error("support class violated at u^" + std::to_string(val_ + int(i)));
  r.class_ = c;
  return r;
}

void USeries::check_field(const USeries& g) const {
  if (field_ != g.field_) throw Error(ErrorCode::MixedField, "series over different fields");
}

USeries USeries::operator-() const {
  USeries r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

USeries& USeries::operator+=(const USeries& g) {
  check_field(g);
  const int val = std::min(val_, g.val_);
  const int prec = std::min(prec_, g.prec_);
  std::vector<RatFunc> out(std::size_t(prec - val), RatFunc::zero(*field_));
  for (int e = val; e < prec; ++e) {
    RatFunc& slot = out[std::size_t(e - val)];
    if (e >= val_) slot = c_[std::size_t(e - val_)];
    if (e >= g.val_ && !g.c_[std::size_t(e - g.val_)].is_zero()) slot += g.c_[std::size_t(e - g.val_)];
  }
  const std::optional<int> cls = (class_ && g.class_ && *class_ == *g.class_) ? class_ : std::nullopt;
  c_ = std::move(out);
  val_ = val;
  prec_ = prec;
  class_ = cls;
  return *this;
}

USeries& USeries::operator-=(const USeries& g) { return *this += -g; }

USeries operator*(const USeries& f, const USeries& g) { return mul(f, g); }

USeries USeries::scaled(const RatFunc& c) const {
  USeries r(*this);
  if (c.is_one()) return r;
  for (auto& x : r.c_)
    if (!x.is_zero()) x *= c;
  return r;
}

USeries USeries::exact_divided(const Poly& d) const {
  USeries r(*this);
  const RatFunc dinv = RatFunc(d).inv();
  for (auto& x : r.c_) {
    if (x.is_zero()) continue;
    x = x.is_integral() ? RatFunc(exact_div(x.num(), d)) : x * dinv;
  }
  return r;
}

USeries USeries::frobenius() const {
  const int p = field_->p();
  USeries r(*field_, val_ * p, prec_ * p);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) r.c_[i * std::size_t(p)] = c_[i].frobenius();
  if (class_) r.class_ = mod_class(static_cast<long long>(*class_) * p, field_->q() - 1);
  return r;
}

std::string USeries::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms()) {
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    const bool bare = cs.find(' ') == std::string::npos;
    if (e == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += (bare ? cs : "(" + cs + ")") + "*";
    out += e == 1 ? std::string("u") : "u^" + std::to_string(e);
  }
  if (!out.empty()) out += " + ";
  return out + "O(u^" + std::to_string(prec_) + ")";
}

USeries mul(const USeries& f, const USeries& g, int prec_cap) {
  if (f.field_ptr() != g.field_ptr()) throw Error(ErrorCode::MixedField, "series over different fields");
  return kernels::mul_parallel(f, g, prec_cap);
}

USeries series_inv(const USeries& f) { return kernels::inverse_recurrence(f); }

USeries series_pow(const USeries& f, long long n) {
  const USeries base = f.normalized();
  if (n == 0) {
    if (base.is_zero()) return USeries::one(f.field(), std::max(1, f.prec() - f.val()));
    return USeries::one(f.field(), base.prec() - base.val());
  }
  if (n < 0) return series_pow(series_inv(base), -n);
  const int p = f.field().p();
  int frob = 0;
  while (n % p == 0) {
    n /= p;
    ++frob;
  }
  USeries result;
  USeries square = base;
  bool have = false;
  while (n > 0) {
    if (n & 1) {
      result = have ? mul(result, square) : square;
      have = true;
    }
    n >>= 1;
    if (n) square = mul(square, square).normalized();
  }
  for (int i = 0; i < frob; ++i) result = result.frobenius();
  return result;
}

USeries substitute_Tz(const USeries& f, int prec_cap) { return kernels::substitute_parallel(f, prec_cap); }

bool agree_to_precision(const USeries& f, const USeries& g) {
  if (f.field_ptr() != g.field_ptr()) return false;
  const int lo = std::min(f.val(), g.val());
  const int hi = std::min(f.prec(), g.prec());
  for (int e = lo; e < hi; ++e)
    if (!(f.coeff(e) == g.coeff(e))) return false;
  return true;
}

}  // namespace dmf
