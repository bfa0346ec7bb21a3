#pragma once

#include "dmf/form_expr.hpp"
#include "dmf/matrix.hpp"

#include <string>
#include <vector>

namespace dmf {

// Element of L_{k,l;N}: coefficients c_0..c_R, R = r_{k,l} + N + 1, with
// sum_i c_i a_f(i(q-1)+l) = 0 on M_{k,l}.
struct RelationVector {
  FormSpec spec;
  int N = 0;
  std::string basis_g;
  Vector c;
};

// Images of the basis of M_{N(q-1)+2l, l}, in basis order.
struct BMatrix {
  FormSpec spec;
  int N = 0;
  std::vector<RelationVector> rows;

  Matrix matrix(const FieldCtx& field) const;
};

// r_{k,l} + N + 1.
int r_klN(const FieldCtx& field, int k, int l, int N);

// a_f(i(q-1)+l).
RatFunc dual_coeff(const USeries& f, int i, int l);

// Reads b_i at u^(-i(q-1)+1-l) in h g / (Delta_T^R E_T^(2l)), i = 0..R.
// prec is the output precision of that expansion (raised to at least 2-l).
RelationVector compute_b_vector(const FieldCtx& field, int k, int l, int N, const FormExpr& g, int prec = 0);

BMatrix phi(const FieldCtx& field, int k, int l, int N);

// [a_i*(f_j)]: row i = 0..R, column j over the basis of M_{k,l}.
Matrix dual_matrix(const FieldCtx& field, int k, int l, int N);

// Left kernel of dual_matrix, canonical echelon basis.
std::vector<Vector> kernel_oracle(const FieldCtx& field, int k, int l, int N);

struct RelationReport {
  BMatrix phi;
  std::vector<Vector> kernel;
  int phi_rank = 0;
  int kernel_dim = 0;
  bool annihilates = false;  // every phi row kills every basis form exactly
  bool integral = false;     // every b_i lies in A
  bool spans_equal = false;

  bool ok() const {
    return annihilates && integral && spans_equal && phi_rank == phi.N + 1 && kernel_dim == phi.N + 1;
  }
};

RelationReport relation_report(const FieldCtx& field, int k, int l, int N);

struct IsoReport {
  int dim_kl = 0;    // dim L_{k,l;N}
  int dim_k2l0 = 0;  // dim L_{k-2l,0;N}
  bool equal() const { return dim_kl == dim_k2l0; }
};

IsoReport corollary_iso_check(const FieldCtx& field, int k, int l, int N);

}  // namespace dmf
