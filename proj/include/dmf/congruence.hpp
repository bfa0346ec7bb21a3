#pragma once

#include "dmf/form_expr.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dmf {

enum class Verdict { CongruentZero, ExactZero, Fail };

std::string_view verdict_name(Verdict v);

struct CongruenceWitness {
  FormSpec spec;
  int q = 0;
  int d = 1;
  int a = 0;
  int b = 0;
  std::string form;
  int target_exp = 0;
  Poly coeff;    // unreduced coefficient
  Poly modulus;  // T^(q^d) - T
  Poly residue;  // coeff mod modulus
  Verdict verdict = Verdict::Fail;

  bool passed() const { return verdict != Verdict::Fail; }
};

// Pairs (a, b), 1 <= b <= b_max, with r_{k,l} + 2 + a (q^d - 1)/(q - 1) = p^b
// and a >= 0, ascending in b.
std::vector<std::pair<int, int>> find_ab(const FieldCtx& field, int k, int l, int d, int b_max);

// Coefficient of f E_T^(q-l) at u^(p^b (q-1) + 1), reduced mod T^(q^d) - T.
// When a = 0 the coefficient itself has to vanish; a nonzero one is a Fail.
CongruenceWitness check_MT1(const FormExpr& f, const FieldCtx& field, int k, int l, int d, int a, int b);

// a_f((p^m - 1)(q - 1) + l) mod T^q - T under the hypotheses p^alpha | l,
// p^alpha | q - l, 1 <= m <= alpha, p^m > r_{k,l} + 1. The witness records
// the (a, b) = (p^m - r - 2, m) it specializes.
CongruenceWitness check_corollary(const FormExpr& f, const FieldCtx& field, int k, int l, int alpha, int m);

// a_g(1), i.e. -pi Res_infinity g dz with the period left out.
RatFunc residue_normalized(const USeries& g);

// -g1^a E_T^(q-l) f / Delta_T^(p^b) for the b with r + 2 + a = p^b, known to
// at least prec.
USeries build_G(const FormExpr& f, const FieldCtx& field, int k, int l, int a, int prec);

}  // namespace dmf
