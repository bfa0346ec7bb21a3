#pragma once

#include "dmf/forms.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dmf {

// Formal expression in the named generators with K scalars. Grammar:
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*      a / b means a * b^-1
//   factor  := primary ['^' exponent]
//   exponent:= ['-'] INT | '(' ['-'] INT ')'
//   primary := E | E_T | g1 | Delta_T | Delta_W | h | T | w | INT | '(' expr ')'
//
// Subexpressions free of generators are folded into a single scalar.
class FormExpr {
 public:
  enum class Kind { Generator, Scalar, Add, Sub, Neg, Mul, Pow };

  static FormExpr generator(Generator g);
  static FormExpr scalar(const RatFunc& c);
  static FormExpr parse(const FieldCtx& field, std::string_view text);
  static FormExpr monomial(const BasisMonomial& m);

  FormExpr pow(int n) const;
  friend FormExpr operator+(const FormExpr& a, const FormExpr& b);
  friend FormExpr operator-(const FormExpr& a, const FormExpr& b);
  friend FormExpr operator*(const FormExpr& a, const FormExpr& b);
  FormExpr operator-() const;

  Kind kind() const;
  bool is_scalar() const { return kind() == Kind::Scalar; }
  std::string to_string() const;

  // (weight, type mod (q-1)) when the expression is a homogeneous
  // combination of modular generators; nullopt otherwise (E is not modular).
  std::optional<std::pair<int, int>> weight_type(const FieldCtx& field) const;

  struct Node;

 private:
  explicit FormExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend class Evaluator;
};

// Evaluates expressions with every generator taken at one input precision.
// Powers of generators are cached; the cache is guarded and pure.
class Evaluator {
 public:
  Evaluator(const FieldCtx& field, int input_prec);

  const FieldCtx& field() const { return *field_; }
  int input_prec() const { return gens_->prec; }
  const Generators& gens() const { return *gens_; }
  // Result of the expression; a pure scalar becomes a constant series with
  // precision input_prec.
  USeries evaluate(const FormExpr& e) const;
  USeries generator_power(Generator g, int n) const;

 private:
  struct Value;
  Value eval_node(const FormExpr::Node& n) const;

  const FieldCtx* field_;
  std::shared_ptr<const Generators> gens_;
  struct PowerCache;
  std::shared_ptr<PowerCache> cache_;
};

// Largest precision expand() will work at, input or output.
inline constexpr int kMaxPrecision = 1 << 17;

// Expansion known to at least target_prec. The input precision is grown
// from target_prec plus one (q-1)-block until the output reaches the
// target; throws PrecisionExceeded if that needs more than kMaxPrecision.
USeries expand(const FormExpr& e, const FieldCtx& field, int target_prec);

}  // namespace dmf
