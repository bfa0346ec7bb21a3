#pragma once

#include "dmf/ratfunc.hpp"

#include <string>
#include <vector>

namespace dmf {

using Vector = std::vector<RatFunc>;

// Dense rows x cols matrix over K.
class Matrix {
 public:
  Matrix(const FieldCtx& field, int rows, int cols);
  static Matrix from_rows(const FieldCtx& field, const std::vector<Vector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldCtx& field() const { return *field_; }

  RatFunc& operator()(int i, int j) { return a_[std::size_t(i) * std::size_t(cols_) + std::size_t(j)]; }
  const RatFunc& operator()(int i, int j) const { return a_[std::size_t(i) * std::size_t(cols_) + std::size_t(j)]; }
  Vector row(int i) const;

  Matrix transposed() const;
  // Reduced row-echelon form; zero rows are dropped. Pivot search takes the
  // first nonzero entry of each column, every pivot is 1.
  Matrix rref() const;
  int rank() const { return rref().rows(); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  const FieldCtx* field_;
  int rows_;
  int cols_;
  std::vector<RatFunc> a_;
};

// v * M for a row vector v of length M.rows().
Vector row_times(const Vector& v, const Matrix& m);

// Basis of {v : v M = 0} in reduced row-echelon form (leading entries 1).
std::vector<Vector> left_kernel(const Matrix& m);

// Canonical echelon basis of the row span of the given vectors.
std::vector<Vector> echelon_basis(const FieldCtx& field, const std::vector<Vector>& rows, int width);

std::string vector_to_string(const Vector& v);

}  // namespace dmf
