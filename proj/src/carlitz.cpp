#include "dmf/carlitz.hpp"

#include "dmf/errors.hpp"
#include "dmf/kernels.hpp"

#include <omp.h>

#include <map>

namespace dmf {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<int> monic_degrees(const FieldCtx& field, int power, int prec) {
  std::vector<int> degrees;
  for (int d = 0;; ++d) {
    const long long lead = power * ipow(field.q(), d);
    if (lead >= prec) break;
    degrees.push_back(d);
  }
  return degrees;
}

}  // namespace

CarlitzMap carlitz_map(const Poly& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "Carlitz action of 0");
  const FieldCtx& field = a.field();
  const int q = field.q();
  CarlitzMap rho{a, {Poly::constant(field, a.lead())}};
  for (int j = a.degree() - 1; j >= 0; --j) {
    // rho <- rho o rho_T + a_j X, with rho o rho_T = sum_k (c_k T^(q^k) + c_(k-1)) X^(q^k).
    std::vector<Poly> next(rho.coeffs.size() + 1, Poly(field));
    long long qk = 1;
    for (std::size_t k = 0; k < rho.coeffs.size(); ++k) {
      next[k] += rho.coeffs[k].shifted(int(qk));
      next[k + 1] += rho.coeffs[k];
      qk *= q;
    }
    next[0] += Poly::constant(field, a.coeff(j));
    rho.coeffs = std::move(next);
  }
  return rho;
}

CarlitzMap compose(const CarlitzMap& outer, const CarlitzMap& inner) {
  const FieldCtx& field = outer.a.field();
  const int q = field.q();
  CarlitzMap out{outer.a * inner.a, std::vector<Poly>(outer.coeffs.size() + inner.coeffs.size() - 1, Poly(field))};
  long long qi = 1;
  for (std::size_t i = 0; i < outer.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < inner.coeffs.size(); ++j)
      out.coeffs[i + j] += outer.coeffs[i] * inner.coeffs[j].inflate(int(qi));
    qi *= q;
  }
  while (out.coeffs.size() > 1 && out.coeffs.back().is_zero()) out.coeffs.pop_back();
  return out;
}

CarlitzMap operator+(const CarlitzMap& x, const CarlitzMap& y) {
  const FieldCtx& field = x.a.field();
  CarlitzMap out{x.a + y.a, std::vector<Poly>(std::max(x.coeffs.size(), y.coeffs.size()), Poly(field))};
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) out.coeffs[i] += x.coeffs[i];
  for (std::size_t i = 0; i < y.coeffs.size(); ++i) out.coeffs[i] += y.coeffs[i];
  while (out.coeffs.size() > 1 && out.coeffs.back().is_zero()) out.coeffs.pop_back();
  return out;
}

namespace {

// The exact polynomial D(u) = sum_i l_i u^(q^d - q^i); D(0) = 1.
std::map<int, Poly> carlitz_denominator(const Poly& a) {
  const CarlitzMap rho = carlitz_map(a);
  const int q = a.field().q();
  const long long top = ipow(q, a.degree());
  std::map<int, Poly> d;
  long long qi = 1;
  for (const Poly& l : rho.coeffs) {
    if (!l.is_zero()) d[int(top - qi)] = l;
    qi *= q;
  }
  return d;
}

USeries sparse_to_series(const FieldCtx& field, const std::map<int, Poly>& terms, int prec) {
  USeries s(field, 0, prec);
  std::vector<RatFunc> c(std::size_t(prec), RatFunc::zero(field));
  for (const auto& [e, poly] : terms)
    if (e < prec) c[std::size_t(e)] = RatFunc(poly);
  return USeries(field, 0, prec, std::move(c), 0);
}

std::map<int, Poly> sparse_mul(const std::map<int, Poly>& x, const std::map<int, Poly>& y, int limit) {
  std::map<int, Poly> out;
  for (const auto& [ex, px] : x)
    for (const auto& [ey, py] : y) {
      if (ex + ey >= limit) continue;
      auto [it, inserted] = out.try_emplace(ex + ey, px * py);
      if (!inserted) it->second += px * py;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

USeries u_sub_a(const Poly& a, int prec) {
  if (!a.is_monic()) throw Error(ErrorCode::NotMonic, a.to_string());
  return u_sub_a_power(a, 1, prec);
}

USeries u_sub_a_power(const Poly& a, int power, int prec) {
  if (!a.is_monic()) throw Error(ErrorCode::NotMonic, a.to_string());
  const FieldCtx& field = a.field();
  const long long lead = power * ipow(field.q(), a.degree());
  if (lead >= prec) return USeries::zero(field, prec).with_support_class(power % (field.q() - 1));
  const int rel = prec - int(lead);
  const std::map<int, Poly> d = carlitz_denominator(a);
  std::map<int, Poly> dp = {{0, Poly::one(field)}};
  for (int i = 0; i < power; ++i) dp = sparse_mul(dp, d, rel);
  return series_inv(sparse_to_series(field, dp, rel)).shifted(int(lead));
}

std::vector<Poly> monics(const FieldCtx& field, int deg) {
  const int q = field.q();
  const long long count = ipow(q, deg);
  std::vector<Poly> out;
  out.reserve(std::size_t(count));
  for (long long m = 0; m < count; ++m) {
    std::vector<FqElem> c(std::size_t(deg) + 1);
    long long t = m;
    for (int i = 0; i < deg; ++i) {
      c[std::size_t(i)] = field.element(int(t % q));
      t /= q;
    }
    c[std::size_t(deg)] = field.one();
    out.emplace_back(field, std::move(c));
  }
  return out;
}

USeries monic_series_sum(const FieldCtx& field, const MonicWeight& weight, int power, int prec) {
  const int cls = power % (field.q() - 1);
  std::vector<Poly> all;
  for (int d : monic_degrees(field, power, prec)) {
    std::vector<Poly> m = monics(field, d);
    all.insert(all.end(), std::make_move_iterator(m.begin()), std::make_move_iterator(m.end()));
  }
  const USeries zero = USeries(field, 0, std::max(prec, 1)).with_support_class(cls);
  const int n_threads = kernels::threads();
  std::vector<USeries> partial(std::size_t(n_threads), zero);
  const long long count = static_cast<long long>(all.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(n_threads)
  for (long long i = 0; i < count; ++i) {
    const Poly& a = all[std::size_t(i)];
    const Poly w = weight(a);
    if (w.is_zero()) continue;
    USeries term = u_sub_a_power(a, power, prec);
    if (!w.is_one()) term = term.scaled(RatFunc(w));
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    partial[std::size_t(tid)] += term;
  }
  USeries total = zero;
  for (const auto& s : partial) total += s;
  return total;
}

USeries monic_series_sum_reference(const FieldCtx& field, const MonicWeight& weight, int power, int prec) {
  USeries total = USeries(field, 0, std::max(prec, 1));
  for (int d : monic_degrees(field, power, prec))
    for (const Poly& a : monics(field, d)) {
      const Poly w = weight(a);
      if (w.is_zero()) continue;
      const USeries ua = u_sub_a(a, prec);
      total += series_pow(ua, power).truncated(prec).scaled(RatFunc(w));
    }
  return total.with_support_class(power % (field.q() - 1));
}

}  // namespace dmf
