#include "dmf/congruence.hpp"

#include "dmf/errors.hpp"

namespace dmf {

namespace {

long long ipow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Throws unless f is a form of weight k and type l.
void require_form(const FormExpr& f, const FieldCtx& field, int k, int l) {
  const auto wt = f.weight_type(field);
  if (!wt)
    throw Error(ErrorCode::BadWeight, "'" + f.to_string() + "' is not a homogeneous modular form");
  if (wt->first != k || wt->second != l % (field.q() - 1))
    throw Error(ErrorCode::BadWeight, "'" + f.to_string() + "' has weight " + std::to_string(wt->first) +
                                          " and type " + std::to_string(wt->second) + ", expected (" +
                                          std::to_string(k) + ", " + std::to_string(l) + ")");
}

Poly integral_coeff(const USeries& s, int e, const std::string& what) {
  const RatFunc c = s.coeff(e);
  if (!c.is_integral())
    throw Error(ErrorCode::NonIntegralCoefficient, what + " at u^" + std::to_string(e) + " is " + c.to_string());
  return c.num();
}

void settle(CongruenceWitness& w, const FieldCtx& field) {
  w.modulus = special_modulus(field, w.d);
  w.residue = w.coeff % w.modulus;
  if (!w.residue.is_zero()) w.verdict = Verdict::Fail;
  else if (w.a == 0) w.verdict = w.coeff.is_zero() ? Verdict::ExactZero : Verdict::Fail;
  else w.verdict = Verdict::CongruentZero;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CongruentZero: return "CongruentZero";
    case Verdict::ExactZero: return "ExactZero";
    case Verdict::Fail: return "Fail";
  }
  return "?";
}

std::vector<std::pair<int, int>> find_ab(const FieldCtx& field, int k, int l, int d, int b_max) {
  const int r = require_space(field, k, l);
  if (d < 1) throw Error(ErrorCode::BadDegree, "d must be at least 1");
  const long long q = field.q();
  const long long step = (ipow(q, d) - 1) / (q - 1);
  std::vector<std::pair<int, int>> out;
  long long pb = 1;
  for (int b = 1; b <= b_max; ++b) {
    pb *= field.p();
    if (pb > (1LL << 40)) break;
    const long long rest = pb - r - 2;
    if (rest < 0 || rest % step != 0) continue;
    if (rest / step > (1LL << 30)) break;
    out.emplace_back(int(rest / step), b);
  }
  return out;
}

CongruenceWitness check_MT1(const FormExpr& f, const FieldCtx& field, int k, int l, int d, int a, int b) {
  const int r = require_space(field, k, l);
  require_form(f, field, k, l);
  if (d < 1) throw Error(ErrorCode::BadDegree, "d must be at least 1");
  const int q = field.q();
  const long long step = (ipow(q, d) - 1) / (q - 1);
  if (a < 0 || b < 1 || b > 30 || r + 2 + a * step != ipow(field.p(), b))
    throw Error(ErrorCode::BadPair, "(a, b) = (" + std::to_string(a) + ", " + std::to_string(b) +
                                        ") does not satisfy r + 2 + a (q^d-1)/(q-1) = p^b");
  CongruenceWitness w;
  w.spec = {k, l};
  w.q = q;
  w.d = d;
  w.a = a;
  w.b = b;
  w.form = f.to_string();
  w.target_exp = int(ipow(field.p(), b)) * (q - 1) + 1;
  const USeries s = expand(f * FormExpr::generator(Generator::E_T).pow(q - l), field, w.target_exp + 1);
  w.coeff = integral_coeff(s, w.target_exp, "coefficient of f*E_T^(q-l)");
  settle(w, field);
  return w;
}

CongruenceWitness check_corollary(const FormExpr& f, const FieldCtx& field, int k, int l, int alpha, int m) {
  const int r = require_space(field, k, l);
  require_form(f, field, k, l);
  const int p = field.p();
  const int q = field.q();
  auto violated = [](const std::string& why) { throw Error(ErrorCode::HypothesisViolated, why); };
  if (alpha < 1 || alpha > 30) violated("alpha must be a positive integer");
  const long long pa = ipow(p, alpha);
  if (l % pa != 0) violated("p^alpha must divide l");
  if ((q - l) % pa != 0) violated("p^alpha must divide q - l");
  if (m < 1 || m > alpha) violated("m must satisfy 1 <= m <= alpha");
  const long long pm = ipow(p, m);
  if (pm <= r + 1) violated("p^m must exceed r_{k,l} + 1");

  CongruenceWitness w;
  w.spec = {k, l};
  w.q = q;
  w.d = 1;
  w.a = int(pm - r - 2);
  w.b = m;
  w.form = f.to_string();
  w.target_exp = int(pm - 1) * (q - 1) + l;
  const USeries s = expand(f, field, w.target_exp + 1);
  w.coeff = integral_coeff(s, w.target_exp, "coefficient of f");
  settle(w, field);
  return w;
}

RatFunc residue_normalized(const USeries& g) { return g.coeff(1); }

USeries build_G(const FormExpr& f, const FieldCtx& field, int k, int l, int a, int prec) {
  const int r = require_space(field, k, l);
  require_form(f, field, k, l);
  const int p = field.p();
  const int q = field.q();
  int b = 0;
  long long pb = 1;
  while (pb < r + 2 + static_cast<long long>(a)) {
    pb *= p;
    ++b;
  }
  if (a < 0 || b < 1 || pb != r + 2 + static_cast<long long>(a))
    throw Error(ErrorCode::BadPair, "r + 2 + a = " + std::to_string(r + 2 + a) + " is not a positive power of p");
  using G = Generator;
  const FormExpr e = -(FormExpr::generator(G::g1).pow(a) * FormExpr::generator(G::E_T).pow(q - l) * f *
                       FormExpr::generator(G::Delta_T).pow(-int(pb)));
  return expand(e, field, prec);
}

}  // namespace dmf
