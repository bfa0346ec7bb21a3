#include "dmf/forms.hpp"

#include "dmf/carlitz.hpp"
#include "dmf/errors.hpp"

#include <map>
#include <mutex>

namespace dmf {

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::E: return "E";
    case Generator::E_T: return "E_T";
    case Generator::g1: return "g1";
    case Generator::Delta_T: return "Delta_T";
    case Generator::Delta_W: return "Delta_W";
    case Generator::h: return "h";
  }
  return "?";
}

std::optional<Generator> generator_from_name(std::string_view name) {
  for (Generator g : {Generator::E, Generator::E_T, Generator::g1, Generator::Delta_T, Generator::Delta_W, Generator::h})
    if (generator_name(g) == name) return g;
  return std::nullopt;
}

std::optional<int> r_kl(const FieldCtx& field, int k, int l) {
  const int m = field.q() - 1;
  if (l < 0 || l > m - 1 || k < 0) return std::nullopt;
  const int diff = k - 2 * l;
  if (diff < 0 || diff % m != 0) return std::nullopt;
  return diff / m;
}

int space_dim(const FieldCtx& field, int k, int l) {
  const auto r = r_kl(field, k, l);
  return r ? 1 + *r : 0;
}

int require_space(const FieldCtx& field, int k, int l) {
  const int m = field.q() - 1;
  const std::string name = "M_{" + std::to_string(k) + "," + std::to_string(l) + "}";
  if (l < 0 || l > m - 1)
    throw Error(ErrorCode::EmptySpace, name + ": type lift l must lie in [0, " + std::to_string(m - 1) + "]");
  if (((k - 2 * l) % m + m) % m != 0)
    throw Error(ErrorCode::EmptySpace,
                name + " = {0}: k must be congruent to 2l mod (q-1) = " + std::to_string(m));
  const auto r = r_kl(field, k, l);
  if (!r) throw Error(ErrorCode::EmptySpace, name + " = {0}: k - 2l is negative");
  return *r;
}

std::string BasisMonomial::to_string() const {
  std::string out;
  auto part = [&out](std::string_view name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  part("Delta_W", e_W);
  part("Delta_T", e_T);
  part("E_T", e_E);
  return out.empty() ? "1" : out;
}

std::vector<BasisMonomial> basis(const FieldCtx& field, int k, int l) {
  const int r = require_space(field, k, l);
  std::vector<BasisMonomial> out;
  for (int j = 0; j <= r; ++j) out.push_back({r - j, j, l});
  return out;
}

int min_prec(const FieldCtx& field, Generator g) {
  const int q = field.q();
  switch (g) {
    case Generator::E: return 2;
    case Generator::E_T: return q + 1;
    case Generator::g1: return q;
    case Generator::Delta_T:
    case Generator::Delta_W: return q * (q - 1) + 1;
    case Generator::h: return (q - 1) * (q - 1) + 2;
  }
  return 1;
}

namespace {

void check_prec(const FieldCtx& field, Generator g, int prec) {
  if (prec < min_prec(field, g))
    throw Error(ErrorCode::PrecisionExceeded, std::string(generator_name(g)) + " needs precision at least " +
                                                  std::to_string(min_prec(field, g)));
}

Poly bracket1(const FieldCtx& field) { return special_modulus(field, 1); }

USeries ET_from_E(const USeries& e) {
  const FieldCtx& field = e.field();
  const RatFunc t(Poly::T(field));
  return (e - substitute_Tz(e, e.prec()).scaled(t)).with_support_class(1);
}

USeries g1_unchecked(const FieldCtx& field, int prec) {
  const USeries sum = monic_series_sum(field, [](const Poly& a) { return Poly::one(a.field()); }, field.q() - 1, prec);
  return (USeries::one(field, prec) - sum.scaled(RatFunc(bracket1(field)))).with_support_class(0);
}

USeries DeltaT_from_g1(const USeries& g1) {
  return (substitute_Tz(g1, g1.prec()) - g1).exact_divided(bracket1(g1.field())).with_support_class(0);
}

USeries DeltaW_from(const USeries& g1, const USeries& delta_t) {
  const FieldCtx& field = g1.field();
  return (g1 + delta_t.scaled(RatFunc(Poly::monomial(field, field.one(), field.q()))))
      .with_support_class(0);
}

}  // namespace

USeries build_E(const FieldCtx& field, int prec) {
  check_prec(field, Generator::E, prec);
  return monic_series_sum(field, [](const Poly& a) { return a; }, 1, prec).with_support_class(1);
}

USeries build_ET(const FieldCtx& field, int prec) {
  check_prec(field, Generator::E_T, prec);
  return ET_from_E(build_E(field, prec));
}

USeries build_g1(const FieldCtx& field, int prec) {
  check_prec(field, Generator::g1, prec);
  return g1_unchecked(field, prec);
}

USeries build_DeltaT(const FieldCtx& field, int prec, DeltaRoute route) {
  check_prec(field, Generator::Delta_T, prec);
  if (route == DeltaRoute::Direct) {
    const auto coprime_to_T = [](const Poly& a) {
      return a.coeff(0).is_zero() ? Poly::zero(a.field()) : Poly::one(a.field());
    };
    return monic_series_sum(field, coprime_to_T, field.q() - 1, prec).with_support_class(0);
  }
  return DeltaT_from_g1(g1_unchecked(field, prec));
}

USeries build_DeltaW(const FieldCtx& field, int prec, DeltaRoute route) {
  check_prec(field, Generator::Delta_W, prec);
  const USeries g1 = g1_unchecked(field, prec);
  if (route == DeltaRoute::Direct) return DeltaW_from(g1, DeltaT_from_g1(g1));
  const Poly tq = Poly::monomial(field, field.one(), field.q());
  const USeries numer =
      substitute_Tz(g1, prec).scaled(RatFunc(tq)) - g1.scaled(RatFunc(Poly::T(field)));
  return numer.exact_divided(bracket1(field)).with_support_class(0);
}

USeries build_h(const FieldCtx& field, int prec) {
  check_prec(field, Generator::h, prec);
  const int inner = std::max(prec, min_prec(field, Generator::Delta_W));
  return (-(build_DeltaW(field, inner) * build_ET(field, inner))).truncated(prec).with_support_class(1);
}

const USeries& Generators::get(Generator g) const {
  switch (g) {
    case Generator::E: return E;
    case Generator::E_T: return E_T;
    case Generator::g1: return g1;
    case Generator::Delta_T: return Delta_T;
    case Generator::Delta_W: return Delta_W;
    case Generator::h: return h;
  }
  return E;
}

std::shared_ptr<const Generators> generators(const FieldCtx& field, int prec) {
  static std::mutex mutex;
  static std::map<const FieldCtx*, std::shared_ptr<const Generators>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(&field);
    if (it != cache.end() && it->second->prec >= prec) return it->second;
  }
  const int q = field.q();
  const int p_all = std::max(prec, q * (q - 1) + 1);
  auto gens = std::make_shared<Generators>();
  gens->prec = p_all;
  gens->E = build_E(field, p_all);
  gens->E_T = ET_from_E(gens->E);
  gens->g1 = g1_unchecked(field, p_all);
  gens->Delta_T = DeltaT_from_g1(gens->g1);
  gens->Delta_W = DeltaW_from(gens->g1, gens->Delta_T);
  gens->h = (-(gens->Delta_W * gens->E_T)).with_support_class(1);
  std::lock_guard lock(mutex);
  auto& slot = cache[&field];
  if (!slot || slot->prec < gens->prec) slot = gens;
  return slot;
}

std::optional<std::pair<int, int>> generator_weight_type(const FieldCtx& field, Generator g) {
  const int q = field.q();
  switch (g) {
    case Generator::E: return std::nullopt;
    case Generator::E_T: return std::pair{2, 1 % (q - 1)};
    case Generator::g1:
    case Generator::Delta_T:
    case Generator::Delta_W: return std::pair{q - 1, 0};
    case Generator::h: return std::pair{q + 1, 1 % (q - 1)};
  }
  return std::nullopt;
}

}  // namespace dmf
