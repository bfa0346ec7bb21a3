#include "dmf/matrix.hpp"

#include "dmf/errors.hpp"

namespace dmf {

Matrix::Matrix(const FieldCtx& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols), a_(std::size_t(rows) * std::size_t(cols), RatFunc::zero(field)) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::BadDegree, "negative matrix dimension");
}

Matrix Matrix::from_rows(const FieldCtx& field, const std::vector<Vector>& rows, int cols) {
  Matrix m(field, int(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) {
    if (int(rows[std::size_t(i)].size()) != cols) throw Error(ErrorCode::BadDegree, "ragged matrix rows");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[std::size_t(i)][std::size_t(j)];
  }
  return m;
}

Vector Matrix::row(int i) const {
  return Vector(a_.begin() + std::ptrdiff_t(i) * cols_, a_.begin() + std::ptrdiff_t(i + 1) * cols_);
}

Matrix Matrix::transposed() const {
  Matrix t(*field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::rref() const {
  Matrix m(*this);
  int pivot_row = 0;
  for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
    int found = -1;
    for (int i = pivot_row; i < rows_; ++i)
      if (!m(i, col).is_zero()) {
        found = i;
        break;
      }
    if (found < 0) continue;
    if (found != pivot_row)
      for (int j = 0; j < cols_; ++j) std::swap(m(found, j), m(pivot_row, j));
    const RatFunc inv = m(pivot_row, col).inv();
    for (int j = col; j < cols_; ++j) m(pivot_row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == pivot_row || m(i, col).is_zero()) continue;
      const RatFunc factor = m(i, col);
      for (int j = col; j < cols_; ++j)
        if (!m(pivot_row, j).is_zero()) m(i, j) -= factor * m(pivot_row, j);
    }
    ++pivot_row;
  }
  Matrix out(*field_, pivot_row, cols_);
  for (int i = 0; i < pivot_row; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = m(i, j);
  return out;
}

Vector row_times(const Vector& v, const Matrix& m) {
  if (int(v.size()) != m.rows()) throw Error(ErrorCode::BadDegree, "vector length does not match matrix rows");
  Vector out(std::size_t(m.cols()), RatFunc::zero(m.field()));
  for (int i = 0; i < m.rows(); ++i) {
    if (v[std::size_t(i)].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[std::size_t(j)] += v[std::size_t(i)] * m(i, j);
  }
  return out;
}

std::vector<Vector> left_kernel(const Matrix& m) {
  // v M = 0  <=>  M^T v^T = 0: read a nullspace basis off rref(M^T).
  const Matrix r = m.transposed().rref();
  const int n = m.rows();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(std::size_t(n), false);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < n; ++j)
      if (!r(i, j).is_zero()) {
        pivot_col.push_back(j);
        is_pivot[std::size_t(j)] = true;
        break;
      }
  std::vector<Vector> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[std::size_t(free)]) continue;
    Vector v(std::size_t(n), RatFunc::zero(m.field()));
    v[std::size_t(free)] = RatFunc::one(m.field());
    for (int i = 0; i < r.rows(); ++i) v[std::size_t(pivot_col[std::size_t(i)])] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return echelon_basis(m.field(), basis, n);
}

std::vector<Vector> echelon_basis(const FieldCtx& field, const std::vector<Vector>& rows, int width) {
  const Matrix r = Matrix::from_rows(field, rows, width).rref();
  std::vector<Vector> out;
  for (int i = 0; i < r.rows(); ++i) out.push_back(r.row(i));
  return out;
}

std::string vector_to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace dmf
