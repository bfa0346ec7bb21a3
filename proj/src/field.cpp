#include "dmf/field.hpp"

#include "dmf/errors.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <mutex>

namespace dmf {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DivisionNotExact: return "DivisionNotExact";
    case ErrorCode::MixedField: return "MixedField";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::BadPair: return "BadPair";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using FpPoly = std::vector<int>;  // low degree first, over F_p

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic b.
FpPoly fp_rem(FpPoly a, const FpPoly& b, int p) {
  fp_trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const int c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    fp_trim(a);
  }
  return a;
}

bool fp_irreducible(const FpPoly& f, int p) {
  const int deg = int(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long m = 0; m < count; ++m) {
      FpPoly g(d + 1);
      long long t = m;
      for (int i = 0; i < d; ++i) {
        g[i] = int(t % p);
        t /= p;
      }
      g[d] = 1;
      if (fp_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> smallest_irreducible(int p, int r) {
  if (r == 1) return {0, 1};
  long long count = 1;
  for (int i = 0; i < r; ++i) count *= p;
  for (long long m = 0; m < count; ++m) {
    // c_0 is the most significant digit of m: lexicographic, low degree first.
    FpPoly f(r + 1);
    long long t = m;
    for (int i = r - 1; i >= 0; --i) {
      f[i] = int(t % p);
      t /= p;
    }
    f[r] = 1;
    if (fp_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::BadDegree, "no irreducible polynomial found");
}

FieldCtx::FieldCtx(int p, int r) : p_(p), r_(r), q_(1) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorCode::NotOddPrime, "p = " + std::to_string(p));
  if (r < 1) throw Error(ErrorCode::BadDegree, "r = " + std::to_string(r));
  long long q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > 32767) throw Error(ErrorCode::Unsupported, "field order exceeds 32767");
  }
  q_ = int(q);
  if (r > 1 && q_ > 1024) throw Error(ErrorCode::Unsupported, "extension fields are limited to q <= 1024");
  modulus_ = smallest_irreducible(p, r);
  if (r == 1) return;

  const std::size_t n = std::size_t(q_);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.resize(n);
  frob_.resize(n);
  std::vector<std::vector<int>> co(n);
  for (std::size_t a = 0; a < n; ++a) co[a] = coords(FqElem(std::uint16_t(a)));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<int> ng(r);
    for (int i = 0; i < r; ++i) ng[i] = (p - co[a][i]) % p;
    neg_[a] = from_coords(ng);
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> s(r);
      for (int i = 0; i < r; ++i) s[i] = (co[a][i] + co[b][i]) % p;
      add_[a * n + b] = from_coords(s);
      FpPoly prod(2 * r - 1, 0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + co[a][i] * co[b][j]) % p;
      FpPoly red = fp_rem(prod, modulus_, p);
      red.resize(r, 0);
      mul_[a * n + b] = from_coords(red);
    }
  }
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      if (mul_[a * n + b].is_one()) {
        inv_[a] = FqElem(std::uint16_t(b));
        break;
      }
  for (std::size_t a = 0; a < n; ++a) {
    FqElem x = one();
    for (int i = 0; i < p; ++i) x = mul_[std::size_t(x.index) * n + a];
    frob_[a] = x;
  }
}

FqElem FieldCtx::from_int(long long n) const {
  long long m = n % p_;
  if (m < 0) m += p_;
  return FqElem(std::uint16_t(m));
}

FqElem FieldCtx::from_coords(std::span<const int> c) const {
  int index = 0;
  for (int i = int(c.size()) - 1; i >= 0; --i) index = index * p_ + ((c[i] % p_) + p_) % p_;
  return FqElem(std::uint16_t(index));
}

std::vector<int> FieldCtx::coords(FqElem a) const {
  std::vector<int> c(r_);
  int t = a.index;
  for (int i = 0; i < r_; ++i) {
    c[i] = t % p_;
    t /= p_;
  }
  return c;
}

FqElem FieldCtx::inv(FqElem a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in GF(q)");
  if (r_ > 1) return inv_[a.index];
  // Extended Euclid on integers mod p.
  long long t = 0, nt = 1, rr = p_, nr = a.index;
  while (nr != 0) {
    const long long qt = rr / nr;
    t -= qt * nt;
    std::swap(t, nt);
    rr -= qt * nr;
    std::swap(rr, nr);
  }
  return from_int(t);
}

FqElem FieldCtx::pow(FqElem a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  FqElem result = one();
  while (n > 0) {
    if (n & 1) result = mul(result, a);
    a = mul(a, a);
    n >>= 1;
  }
  return result;
}

std::string FieldCtx::render(FqElem a) const {
  if (r_ == 1) return std::to_string(a.index);
  if (a.is_zero()) return "0";
  const std::vector<int> c = coords(a);
  std::string out;
  for (int i = r_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += "w";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::ParseError, "bad integer in '" + std::string(whole) + "'");
  return value;
}

}  // namespace

FqElem FieldCtx::parse(std::string_view text) const {
  std::vector<int> c(r_, 0);
  std::size_t pos = 0;
  bool any = false;
  while (pos <= text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + std::string(text) + "'");
    any = true;
    const std::size_t wpos = term.find('w');
    if (wpos == std::string_view::npos) {
      const int v = parse_int(term, text);
      if (v < 0 || v >= p_) throw Error(ErrorCode::ParseError, "coefficient out of range in '" + std::string(text) + "'");
      c[0] = (c[0] + v) % p_;
    } else {
      if (r_ == 1) throw Error(ErrorCode::ParseError, "generator w used in a prime field");
      int coeff = 1;
      if (wpos > 0) {
        if (wpos < 2 || term[wpos - 1] != '*') throw Error(ErrorCode::ParseError, "bad term '" + std::string(term) + "'");
        coeff = parse_int(term.substr(0, wpos - 1), text);
      }
      int power = 1;
      std::string_view rest = term.substr(wpos + 1);
      if (!rest.empty()) {
        if (rest[0] != '^') throw Error(ErrorCode::ParseError, "bad term '" + std::string(term) + "'");
        power = parse_int(rest.substr(1), text);
      }
      if (power < 1 || power >= r_ || coeff < 1 || coeff >= p_)
        throw Error(ErrorCode::ParseError, "term out of range '" + std::string(term) + "'");
      c[power] = (c[power] + coeff) % p_;
    }
    pos = end + 1;
  }
  if (!any) throw Error(ErrorCode::ParseError, "empty field element");
  return from_coords(c);
}

const FieldCtx& make_field(int p, int r) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<FieldCtx>> fields;
  std::lock_guard lock(mutex);
  auto& slot = fields[{p, r}];
  if (!slot) {
    try {
      slot = std::make_unique<FieldCtx>(p, r);
    } catch (...) {
      fields.erase({p, r});
      throw;
    }
  }
  return *slot;
}

}  // namespace dmf
