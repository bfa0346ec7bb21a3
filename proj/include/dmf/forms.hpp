#pragma once

#include "dmf/useries.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dmf {

enum class Generator { E, E_T, g1, Delta_T, Delta_W, h };

std::string_view generator_name(Generator g);
std::optional<Generator> generator_from_name(std::string_view name);

// Weight k and type lift l in [0, q-2].
struct FormSpec {
  int k = 0;
  int l = 0;
  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

// (k - 2l) / (q - 1) when it is a non-negative integer.
std::optional<int> r_kl(const FieldCtx& field, int k, int l);
// 1 + r_{k,l} for nonempty spaces, 0 otherwise. Weight 0 is accepted
// (the constants, dimension 1 for l = 0).
int space_dim(const FieldCtx& field, int k, int l);
// Throws EmptySpace unless k = 2l mod (q-1), r_{k,l} >= 0, 0 <= l <= q-2.
int require_space(const FieldCtx& field, int k, int l);

// Delta_W^e_W * Delta_T^e_T * E_T^e_E.
struct BasisMonomial {
  int e_W = 0;
  int e_T = 0;
  int e_E = 0;

  int weight(const FieldCtx& field) const { return (field.q() - 1) * (e_W + e_T) + 2 * e_E; }
  int type(const FieldCtx& field) const { return e_E % (field.q() - 1); }
  std::string to_string() const;
  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

// [Delta_W^(r-j) Delta_T^j E_T^l for j = 0..r]. Throws EmptySpace.
std::vector<BasisMonomial> basis(const FieldCtx& field, int k, int l);

// sum_{a monic} a u(az).
USeries build_E(const FieldCtx& field, int prec);
// E - T E(Tz).
USeries build_ET(const FieldCtx& field, int prec);
// 1 - (T^q - T) sum_{a monic} u(az)^(q-1).
USeries build_g1(const FieldCtx& field, int prec);

enum class DeltaRoute {
  Definitional,  // (g1(Tz) - g1) / (T^q - T), resp. (T^q g1(Tz) - T g1) / (T^q - T)
  Direct,        // sum_{a monic, T !| a} u(az)^(q-1), resp. g1 + T^q Delta_T
};

USeries build_DeltaT(const FieldCtx& field, int prec, DeltaRoute route = DeltaRoute::Definitional);
USeries build_DeltaW(const FieldCtx& field, int prec, DeltaRoute route = DeltaRoute::Direct);
// -Delta_W E_T.
USeries build_h(const FieldCtx& field, int prec);

// Smallest precision each builder accepts.
int min_prec(const FieldCtx& field, Generator g);

struct Generators {
  int prec = 0;
  USeries E, E_T, g1, Delta_T, Delta_W, h;

  const USeries& get(Generator g) const;
};

// All generators to at least prec (internally never below the builders'
// minimum), memoized per field. Thread-safe; results are identical to a
// fresh computation truncated to prec.
std::shared_ptr<const Generators> generators(const FieldCtx& field, int prec);

// Exact (k, type) of a generator, or nullopt for E (not modular).
std::optional<std::pair<int, int>> generator_weight_type(const FieldCtx& field, Generator g);

}  // namespace dmf
