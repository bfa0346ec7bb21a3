#include "dmf/kernels.hpp"

#include "dmf/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <mutex>

namespace dmf::kernels {

namespace {

int g_threads = 0;

int mod_class(long long e, int m) {
  long long r = e % m;
  return int(r < 0 ? r + m : r);
}

std::optional<int> product_class(const USeries& f, const USeries& g) {
  if (!f.support_class() || !g.support_class()) return std::nullopt;
  return mod_class(*f.support_class() + *g.support_class(), f.field().q() - 1);
}

std::vector<int> nonzero_indices(const std::vector<RatFunc>& c) {
  std::vector<int> nz;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) nz.push_back(int(i));
  return nz;
}

// Factorials mod p for Lucas' theorem, one table per prime.
struct FactorialTable {
  std::vector<int> fact, inv_fact;
};

const FactorialTable& factorials(int p) {
  static std::mutex mutex;
  static std::map<int, FactorialTable> tables;
  std::lock_guard lock(mutex);
  auto [it, inserted] = tables.try_emplace(p);
  if (inserted) {
    FactorialTable& t = it->second;
    t.fact.assign(std::size_t(p), 1);
    t.inv_fact.assign(std::size_t(p), 1);
    for (int i = 1; i < p; ++i) t.fact[std::size_t(i)] = int((long long)t.fact[std::size_t(i - 1)] * i % p);
    auto inv = [p](long long a) {
      long long result = 1, e = p - 2;
      while (e > 0) {
        if (e & 1) result = result * a % p;
        a = a * a % p;
        e >>= 1;
      }
      return int(result);
    };
    for (int i = 0; i < p; ++i) t.inv_fact[std::size_t(i)] = inv(t.fact[std::size_t(i)]);
  }
  return it->second;
}

}  // namespace

void set_threads(int n) {
  g_threads = n;
  if (n > 0) omp_set_num_threads(n);
}

int threads() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

int binomial_mod(long long n, long long k, int p) {
  if (k < 0 || n < 0 || k > n) return 0;
  const FactorialTable& t = factorials(p);
  long long result = 1;
  while (n > 0 || k > 0) {
    const int ni = int(n % p), ki = int(k % p);
    if (ki > ni) return 0;
    result = result * t.fact[std::size_t(ni)] % p * t.inv_fact[std::size_t(ki)] % p * t.inv_fact[std::size_t(ni - ki)] % p;
    n /= p;
    k /= p;
  }
  return int(result);
}

int neg_binomial_mod(long long e, long long j, int p) {
  if (j < 0) return 0;
  if (e <= 0) return binomial_mod(-e, j, p);
  const int b = binomial_mod(e + j - 1, j, p);
  return (j % 2 == 0 || b == 0) ? b : p - b;
}

USeries mul_reference(const USeries& f, const USeries& g, int prec_cap) {
  if (f.field_ptr() != g.field_ptr()) throw Error(ErrorCode::MixedField, "series over different fields");
  const FieldCtx& field = f.field();
  const int val = f.val() + g.val();
  const int prec = std::min({f.val() + g.prec(), g.val() + f.prec(), prec_cap});
  if (prec <= val) return USeries::zero(field, prec);
  std::vector<RatFunc> out(std::size_t(prec - val), RatFunc::zero(field));
  const auto& fc = f.data();
  const auto& gc = g.data();
  for (std::size_t i = 0; i < fc.size(); ++i)
    for (std::size_t j = 0; j < gc.size(); ++j) {
      const std::size_t n = i + j;
      if (n >= out.size()) break;
      out[n] += fc[i] * gc[j];
    }
  return USeries(field, val, prec, std::move(out), product_class(f, g));
}

USeries mul_parallel(const USeries& f, const USeries& g, int prec_cap) {
  if (f.field_ptr() != g.field_ptr()) throw Error(ErrorCode::MixedField, "series over different fields");
  const FieldCtx& field = f.field();
  const int val = f.val() + g.val();
  const int prec = std::min({f.val() + g.prec(), g.val() + f.prec(), prec_cap});
  if (prec <= val) return USeries::zero(field, prec);

  const auto& fc = f.data();
  const auto& gc = g.data();
  const std::vector<int> nzf = nonzero_indices(fc);
  std::vector<char> gnz(gc.size());
  for (std::size_t j = 0; j < gc.size(); ++j) gnz[j] = !gc[j].is_zero();
  const bool integral = f.is_integral() && g.is_integral();
  const int m = field.q() - 1;
  const auto cf = f.detect_support_class();
  const auto cg = g.detect_support_class();
  const int out_class = (cf && cg) ? mod_class(*cf + *cg, m) : -1;

  const int n_out = prec - val;
  const int g_size = int(gc.size());
  std::vector<RatFunc> out(std::size_t(n_out), RatFunc::zero(field));

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads())
  for (int n = 0; n < n_out; ++n) {
    if (out_class >= 0 && mod_class(val + n, m) != out_class) continue;
    if (integral) {
      PolyAccumulator acc(field);
      for (int i : nzf) {
        if (i > n) break;
        const int j = n - i;
        if (j < g_size && gnz[std::size_t(j)]) acc.add_product(fc[std::size_t(i)].num(), gc[std::size_t(j)].num());
      }
      if (!acc.empty()) out[std::size_t(n)] = RatFunc(acc.take());
    } else {
      RatFunc s = RatFunc::zero(field);
      for (int i : nzf) {
        if (i > n) break;
        const int j = n - i;
        if (j < g_size && gnz[std::size_t(j)]) s += fc[std::size_t(i)] * gc[std::size_t(j)];
      }
      out[std::size_t(n)] = std::move(s);
    }
  }
  return USeries(field, val, prec, std::move(out), product_class(f, g));
}

USeries inverse_recurrence(const USeries& f) {
  const USeries h = f.normalized();
  if (h.is_zero()) throw Error(ErrorCode::ZeroSeries, "inverse of a series with no nonzero coefficient below u^" +
                                                          std::to_string(f.prec()));
  const FieldCtx& field = f.field();
  const int v = h.val();
  const int rel = h.prec() - v;
  const auto& hc = h.data();
  std::vector<RatFunc> g(std::size_t(rel), RatFunc::zero(field));
  const RatFunc& lead = hc[0];
  g[0] = lead.inv();
  std::vector<int> nz = nonzero_indices(hc);
  nz.erase(nz.begin());

  const bool unit_lead = lead.is_integral() && lead.num().degree() == 0;
  if (unit_lead && h.is_integral()) {
    const FqElem neg_inv = field.neg(field.inv(lead.num().lead()));
    PolyAccumulator acc(field);
    for (int n = 1; n < rel; ++n) {
      for (int i : nz) {
        if (i > n) break;
        const RatFunc& gi = g[std::size_t(n - i)];
        if (!gi.is_zero()) acc.add_product(hc[std::size_t(i)].num(), gi.num());
      }
      if (!acc.empty()) g[std::size_t(n)] = RatFunc(acc.take().scaled(neg_inv));
    }
  } else {
    const RatFunc neg_inv = -g[0];
    for (int n = 1; n < rel; ++n) {
      RatFunc s = RatFunc::zero(field);
      for (int i : nz) {
        if (i > n) break;
        const RatFunc& gi = g[std::size_t(n - i)];
        if (!gi.is_zero()) s += hc[std::size_t(i)] * gi;
      }
      if (!s.is_zero()) g[std::size_t(n)] = s * neg_inv;
    }
  }
  std::optional<int> cls;
  if (f.support_class()) cls = mod_class(-*f.support_class(), field.q() - 1);
  return USeries(field, -v, -v + rel, std::move(g), cls);
}

USeries substitute_parallel(const USeries& f, int prec_cap) {
  const FieldCtx& field = f.field();
  const int q = field.q();
  const int p = field.p();
  const int m = q - 1;
  const int val = q * f.val();
  const int prec = std::min(q * f.prec(), prec_cap);
  if (prec <= val) return USeries::zero(field, prec);

  const auto& fc = f.data();
  const std::vector<int> nzf = nonzero_indices(fc);
  const bool integral = f.is_integral();
  const int n_out = prec - val;
  std::vector<RatFunc> out(std::size_t(n_out), RatFunc::zero(field));
  const Poly t_poly = Poly::T(field);

  // u_T^e = u^(q e) (1 + T u^(q-1))^(-e): the exponent q e + j (q - 1)
  // receives C(-e, j) T^j c_e.
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads())
  for (int n = 0; n < n_out; ++n) {
    const int target = val + n;
    PolyAccumulator acc(field);
    RatFunc s = RatFunc::zero(field);
    for (int i : nzf) {
      const int e = f.val() + i;
      const long long base = static_cast<long long>(q) * e;
      if (base > target) break;
      if ((target - base) % m != 0) continue;
      const long long j = (target - base) / m;
      const int b = neg_binomial_mod(e, j, p);
      if (b == 0) continue;
      if (integral) {
        acc.add(fc[std::size_t(i)].num(), field.from_int(b), int(j));
      } else {
        s += fc[std::size_t(i)] * RatFunc(Poly::monomial(field, field.from_int(b), int(j)));
      }
    }
    if (integral) {
      if (!acc.empty()) out[std::size_t(n)] = RatFunc(acc.take());
    } else {
      out[std::size_t(n)] = std::move(s);
    }
  }
  return USeries(field, val, prec, std::move(out), f.support_class());
}

USeries substitute_reference(const USeries& f, int prec_cap) {
  const FieldCtx& field = f.field();
  const int q = field.q();
  const int val = q * f.val();
  const int prec = std::min(q * f.prec(), prec_cap);
  if (prec <= val) return USeries::zero(field, prec);

  // u_T = u^q / (1 + T u^(q-1)) and u_T^(-1) = (1 + T u^(q-1)) u^(-q).
  const RatFunc t = RatFunc(Poly::T(field));
  const int rel = std::max(prec - q, 1);
  USeries d = USeries::one(field, rel) + USeries::monomial(field, t, q - 1, rel);
  const USeries u_t = inverse_recurrence(d).shifted(q);
  const int wide = prec + q * (std::abs(f.val()) + 1);
  const USeries u_t_inv =
      (USeries::one(field, wide + q) + USeries::monomial(field, t, q - 1, wide + q)).shifted(-q);

  USeries result = USeries::zero(field, prec).extended_down(std::min(val, prec - 1));
  USeries power = USeries::one(field, wide);
  for (int e = 0; e < f.prec(); ++e) {
    if (e > 0) power = mul_reference(power, u_t, wide);
    if (e >= f.val()) {
      const RatFunc c = f.coeff(e);
      if (!c.is_zero()) result = result + power.scaled(c).truncated(prec);
    }
    if (power.normalized().val() >= prec) break;
  }
  power = USeries::one(field, wide);
  for (int e = -1; e >= f.val(); --e) {
    power = mul_reference(power, u_t_inv, wide);
    const RatFunc c = f.coeff(e);
    if (!c.is_zero()) result = result + power.scaled(c).truncated(prec);
  }
  return result.truncated(prec);
}

}  // namespace dmf::kernels
