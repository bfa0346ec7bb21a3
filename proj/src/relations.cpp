#include "dmf/relations.hpp"

#include "dmf/errors.hpp"

namespace dmf {

Matrix BMatrix::matrix(const FieldCtx& field) const {
  std::vector<Vector> rs;
  for (const auto& row : rows) rs.push_back(row.c);
  const int width = rows.empty() ? 0 : int(rows.front().c.size());
  return Matrix::from_rows(field, rs, width);
}

int r_klN(const FieldCtx& field, int k, int l, int N) {
  if (N < 0) throw Error(ErrorCode::BadWeight, "N must be non-negative");
  return require_space(field, k, l) + N + 1;
}

RatFunc dual_coeff(const USeries& f, int i, int l) {
  const int q = f.field().q();
  return f.coeff(i * (q - 1) + l);
}

RelationVector compute_b_vector(const FieldCtx& field, int k, int l, int N, const FormExpr& g, int prec) {
  const int R = r_klN(field, k, l, N);
  const int q = field.q();
  const int kg = N * (q - 1) + 2 * l;
  const auto wt = g.weight_type(field);
  if (!wt || wt->first != kg || wt->second != l % (q - 1))
    throw Error(ErrorCode::BadWeight, "'" + g.to_string() + "' is not in M_{" + std::to_string(kg) + "," +
                                          std::to_string(l) + "}");
  using G = Generator;
  const FormExpr e = FormExpr::generator(G::h) * g * FormExpr::generator(G::Delta_T).pow(-R) *
                     FormExpr::generator(G::E_T).pow(-2 * l);
  const USeries s = expand(e, field, std::max(prec, 2 - l));

  const int cls = (((1 - l) % (q - 1)) + (q - 1)) % (q - 1);
  for (const auto& [exp, c] : s.terms()) {
    if ((((exp % (q - 1)) + (q - 1)) % (q - 1)) != cls)
      throw std::logic_error("relation expansion has a term off its support class at u^" + std::to_string(exp));
  }

  RelationVector v;
  v.spec = {k, l};
  v.N = N;
  v.basis_g = g.to_string();
  for (int i = 0; i <= R; ++i) v.c.push_back(s.coeff(-i * (q - 1) + 1 - l));
  return v;
}

BMatrix phi(const FieldCtx& field, int k, int l, int N) {
  const int R = r_klN(field, k, l, N);
  (void)R;
  const int q = field.q();
  BMatrix out;
  out.spec = {k, l};
  out.N = N;
  for (const BasisMonomial& m : basis(field, N * (q - 1) + 2 * l, l))
    out.rows.push_back(compute_b_vector(field, k, l, N, FormExpr::monomial(m)));
  return out;
}

Matrix dual_matrix(const FieldCtx& field, int k, int l, int N) {
  const int R = r_klN(field, k, l, N);
  const int q = field.q();
  const auto fs = basis(field, k, l);
  Matrix a(field, R + 1, int(fs.size()));
  for (int j = 0; j < int(fs.size()); ++j) {
    const USeries f = expand(FormExpr::monomial(fs[std::size_t(j)]), field, R * (q - 1) + l + 1);
    for (int i = 0; i <= R; ++i) a(i, j) = dual_coeff(f, i, l);
  }
  return a;
}

std::vector<Vector> kernel_oracle(const FieldCtx& field, int k, int l, int N) {
  return left_kernel(dual_matrix(field, k, l, N));
}

RelationReport relation_report(const FieldCtx& field, int k, int l, int N) {
  RelationReport rep;
  rep.phi = phi(field, k, l, N);
  const Matrix a = dual_matrix(field, k, l, N);
  rep.kernel = left_kernel(a);
  rep.kernel_dim = int(rep.kernel.size());
  const Matrix pm = rep.phi.matrix(field);
  rep.phi_rank = pm.rank();

  rep.annihilates = true;
  rep.integral = true;
  for (const auto& row : rep.phi.rows) {
    for (const RatFunc& c : row_times(row.c, a))
      if (!c.is_zero()) rep.annihilates = false;
    for (const RatFunc& c : row.c)
      if (!c.is_integral()) rep.integral = false;
  }
  std::vector<Vector> rows;
  for (const auto& row : rep.phi.rows) rows.push_back(row.c);
  rep.spans_equal = echelon_basis(field, rows, a.rows()) == echelon_basis(field, rep.kernel, a.rows());
  return rep;
}

IsoReport corollary_iso_check(const FieldCtx& field, int k, int l, int N) {
  r_klN(field, k, l, N);
  r_klN(field, k - 2 * l, 0, N);
  IsoReport rep;
  rep.dim_kl = int(kernel_oracle(field, k, l, N).size());
  rep.dim_k2l0 = int(kernel_oracle(field, k - 2 * l, 0, N).size());
  return rep;
}

}  // namespace dmf
