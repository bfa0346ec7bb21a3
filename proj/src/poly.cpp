#include "dmf/poly.hpp"

#include "dmf/errors.hpp"

#include <algorithm>
#include <charconv>

namespace dmf {

Poly::Poly(const FieldCtx& field, std::vector<FqElem> coeffs) : field_(&field), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const FieldCtx& field, FqElem c) {
  Poly f(field);
  if (!c.is_zero()) f.c_.push_back(c);
  return f;
}

Poly Poly::monomial(const FieldCtx& field, FqElem c, int degree) {
  Poly f(field);
  if (c.is_zero()) return f;
  f.c_.assign(std::size_t(degree) + 1, FqElem{});
  f.c_.back() = c;
  return f;
}

Poly Poly::from_ints(const FieldCtx& field, const std::vector<long long>& coeffs) {
  std::vector<FqElem> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.push_back(field.from_int(v));
  return Poly(field, std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_field(const Poly& g) const {
  if (field_ != g.field_ && field_ && g.field_) throw Error(ErrorCode::MixedField, "polynomials over different fields");
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = field_->neg(c);
  return r;
}

Poly& Poly::operator+=(const Poly& g) {
  check_field(g);
  if (!field_) field_ = g.field_;
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] = field_->add(c_[i], g.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  check_field(g);
  if (!field_) field_ = g.field_;
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] = field_->sub(c_[i], g.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
  f.check_field(g);
  const FieldCtx* field = f.field_ ? f.field_ : g.field_;
  if (f.is_zero() || g.is_zero()) return field ? Poly(*field) : Poly();
  PolyAccumulator acc(*field);
  acc.add_product(f, g);
  return acc.take();
}

Poly Poly::scaled(FqElem c) const {
  if (c.is_zero()) return Poly(*field_);
  Poly r(*this);
  for (auto& x : r.c_) x = field_->mul(x, c);
  return r;
}

Poly Poly::shifted(int n) const {
  if (is_zero() || n == 0) return *this;
  Poly r(*field_);
  r.c_.assign(std::size_t(n), FqElem{});
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::pow(long long n) const {
  if (n < 0) throw Error(ErrorCode::BadDegree, "negative polynomial power");
  Poly result = Poly::one(*field_);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Poly Poly::inflate(int m) const {
  if (is_zero() || m == 1) return *this;
  Poly r(*field_);
  r.c_.assign((c_.size() - 1) * std::size_t(m) + 1, FqElem{});
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * std::size_t(m)] = c_[i];
  return r;
}

Poly Poly::frobenius() const {
  Poly r = inflate(field_ ? field_->p() : 1);
  if (field_ && !field_->is_prime_field())
    for (auto& x : r.c_) x = field_->frobenius(x);
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const FqElem c = c_[std::size_t(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = field_->render(c);
    if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += cs + "*";
    out += "T";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const FieldCtx& field = g.field();
  if (f.degree() < g.degree()) return {Poly(field), f.field_ptr() ? f : Poly(field)};
  std::vector<FqElem> rem = f.coeffs();
  const std::vector<FqElem>& gc = g.coeffs();
  const int dg = g.degree();
  const FqElem lead_inv = field.inv(g.lead());
  std::vector<FqElem> quot(std::size_t(f.degree() - dg) + 1);
  for (int i = f.degree(); i >= dg; --i) {
    const FqElem c = rem[std::size_t(i)];
    if (c.is_zero()) continue;
    const FqElem qc = field.mul(c, lead_inv);
    quot[std::size_t(i - dg)] = qc;
    const int shift = i - dg;
    for (int j = 0; j <= dg; ++j) {
      const FqElem gj = gc[std::size_t(j)];
      if (!gj.is_zero()) rem[std::size_t(shift + j)] = field.sub(rem[std::size_t(shift + j)], field.mul(qc, gj));
    }
  }
  rem.resize(std::size_t(dg));
  return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly exact_div(const Poly& f, const Poly& g) {
  auto [quot, rem] = divrem(f, g);
  if (!rem.is_zero()) throw Error(ErrorCode::DivisionNotExact, "(" + f.to_string() + ") / (" + g.to_string() + ")");
  return quot;
}

Poly gcd(const Poly& f, const Poly& g) {
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly special_modulus(const FieldCtx& field, int d) {
  if (d < 1) throw Error(ErrorCode::BadDegree, "special modulus needs d >= 1");
  long long e = 1;
  for (int i = 0; i < d; ++i) {
    e *= field.q();
    if (e > (1 << 24)) throw Error(ErrorCode::Unsupported, "T^(q^d) degree too large");
  }
  return Poly::monomial(field, field.one(), int(e)) - Poly::T(field);
}

Poly lcm_monics(const FieldCtx& field, int d) {
  Poly result = Poly::one(field);
  for (int i = 1; i <= d; ++i) result = result * special_modulus(field, i);
  return result;
}

void PolyAccumulator::reserve(std::size_t n) {
  if (field_->is_prime_field()) {
    if (raw_.size() < n) raw_.resize(n, 0);
  } else if (ext_.size() < n) {
    ext_.resize(n, FqElem{});
  }
}

void PolyAccumulator::add_product(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  reserve(ac.size() + bc.size() - 1);
  if (field_->is_prime_field()) {
    std::uint64_t* out = raw_.data();
    for (std::size_t i = 0; i < ac.size(); ++i) {
      const std::uint64_t x = ac[i].index;
      if (x == 0) continue;
      std::uint64_t* row = out + i;
      for (std::size_t j = 0; j < bc.size(); ++j) row[j] += x * bc[j].index;
    }
    return;
  }
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      ext_[i + j] = field_->add(ext_[i + j], field_->mul(ac[i], bc[j]));
  }
}

void PolyAccumulator::add_product(const Poly& a, const Poly& b, FqElem scale) {
  if (scale.is_one()) {
    add_product(a, b);
    return;
  }
  if (scale.is_zero()) return;
  add_product(a.scaled(scale), b);
}

void PolyAccumulator::add(const Poly& a, FqElem scale, int shift) {
  if (a.is_zero() || scale.is_zero()) return;
  const auto& ac = a.coeffs();
  reserve(ac.size() + std::size_t(shift));
  if (field_->is_prime_field()) {
    const std::uint64_t s = scale.index;
    for (std::size_t i = 0; i < ac.size(); ++i) raw_[i + std::size_t(shift)] += s * ac[i].index;
    return;
  }
  for (std::size_t i = 0; i < ac.size(); ++i)
    ext_[i + std::size_t(shift)] = field_->add(ext_[i + std::size_t(shift)], field_->mul(scale, ac[i]));
}

Poly PolyAccumulator::take() {
  std::vector<FqElem> c;
  if (field_->is_prime_field()) {
    const std::uint64_t p = std::uint64_t(field_->p());
    c.resize(raw_.size());
    for (std::size_t i = 0; i < raw_.size(); ++i) c[i] = FqElem(std::uint16_t(raw_[i] % p));
    raw_.clear();
  } else {
    c = std::move(ext_);
    ext_.clear();
  }
  return Poly(*field_, std::move(c));
}

namespace {

[[noreturn]] void poly_parse_error(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, why + " in polynomial '" + std::string(text) + "'");
}

int parse_exponent(std::string_view s, std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 2) poly_parse_error(text, "bad exponent");
  return v;
}

FqElem parse_coefficient(const FieldCtx& field, std::string_view s, std::string_view text) {
  if (s.empty()) poly_parse_error(text, "empty coefficient");
  if (s.front() == '(') {
    if (s.back() != ')') poly_parse_error(text, "unbalanced parentheses");
    s = s.substr(1, s.size() - 2);
  }
  const FqElem c = field.parse(s);
  if (c.is_zero()) poly_parse_error(text, "zero coefficient");
  return c;
}

}  // namespace

Poly parse_poly(const FieldCtx& field, std::string_view text) {
  if (text == "0") return Poly(field);
  // Split on " + " at parenthesis depth 0.
  std::vector<std::string_view> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth < 0) poly_parse_error(text, "unbalanced parentheses");
    if (depth == 0 && text.substr(i, 3) == " + ") {
      terms.push_back(text.substr(start, i - start));
      start = i + 3;
      i += 2;
    }
  }
  if (depth != 0) poly_parse_error(text, "unbalanced parentheses");
  terms.push_back(text.substr(start));

  std::vector<FqElem> c;
  int last_degree = std::numeric_limits<int>::max();
  for (std::string_view term : terms) {
    if (term.empty()) poly_parse_error(text, "empty term");
    FqElem coeff = field.one();
    int degree = 0;
    const std::size_t tpos = term.rfind('T');
    if (tpos == std::string_view::npos) {
      coeff = parse_coefficient(field, term, text);
    } else {
      std::string_view head = term.substr(0, tpos);
      std::string_view tail = term.substr(tpos + 1);
      if (!head.empty()) {
        if (head.back() != '*') poly_parse_error(text, "missing '*'");
        coeff = parse_coefficient(field, head.substr(0, head.size() - 1), text);
        if (coeff.is_one()) poly_parse_error(text, "unit coefficient must be omitted");
      }
      degree = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') poly_parse_error(text, "expected '^'");
        degree = parse_exponent(tail.substr(1), text);
      }
    }
    if (degree >= last_degree) poly_parse_error(text, "terms must have strictly descending degree");
    last_degree = degree;
    if (c.size() <= std::size_t(degree)) c.resize(std::size_t(degree) + 1);
    c[std::size_t(degree)] = coeff;
  }
  return Poly(field, std::move(c));
}

}  // namespace dmf
