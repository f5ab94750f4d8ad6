#pragma once

#include <vector>

#include "qv/rational.hpp"

namespace qv {

/// Dense matrix over exact rationals. All operations are exact; singular
/// inputs to inverse/solve throw std::domain_error.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[r * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[r * cols_ + c]; }

  RatMatrix operator*(const RatMatrix& b) const;
  bool operator==(const RatMatrix& b) const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  RatMatrix inverse() const;
  std::vector<Rat> solve(const std::vector<Rat>& b) const;

  Rat determinant() const;
  /// Determinant of the top-left k x k block.
  Rat leading_minor(int k) const;
  /// Sylvester criterion on a symmetric matrix: all leading minors positive.
  bool positive_definite() const;

  /// LDL^T factorization of a symmetric positive-definite matrix:
  /// A = U^T D U with U unit upper triangular. Returns {U, diag(D)}.
  std::pair<RatMatrix, std::vector<Rat>> ldl() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace qv
