#include "qv/matrix.hpp"

#include <stdexcept>

namespace qv {

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

Rat frac_mod1(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  return c - Rat(f);
}

Int rat_floor(const Rat& r) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return f;
}

Int rat_ceil(const Rat& r) {
  Int f;
  mpz_cdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return f;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& b) const {
  if (cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix c(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

bool RatMatrix::operator==(const RatMatrix& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if ((int)v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Rat> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

namespace {

// Gauss-Jordan on [A | B], returns B transformed by A^{-1}.
RatMatrix eliminate(RatMatrix a, RatMatrix b) {
  int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      for (int j = 0; j < b.cols(); ++j) std::swap(b.at(piv, j), b.at(col, j));
    }
    Rat inv = 1 / a.at(col, col);
    for (int j = 0; j < n; ++j) a.at(col, j) *= inv;
    for (int j = 0; j < b.cols(); ++j) b.at(col, j) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = a.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
      for (int j = 0; j < b.cols(); ++j) b.at(r, j) -= f * b.at(col, j);
    }
  }
  return b;
}

}  // namespace

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  return eliminate(*this, identity(rows_));
}

std::vector<Rat> RatMatrix::solve(const std::vector<Rat>& b) const {
  if (rows_ != cols_ || (int)b.size() != rows_)
    throw std::invalid_argument("solve shape mismatch");
  RatMatrix rhs(rows_, 1);
  for (int i = 0; i < rows_; ++i) rhs.at(i, 0) = b[i];
  RatMatrix x = eliminate(*this, rhs);
  std::vector<Rat> out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = x.at(i, 0);
  return out;
}

Rat RatMatrix::determinant() const { return leading_minor(rows_); }

Rat RatMatrix::leading_minor(int k) const {
  RatMatrix m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = at(i, j);
  // fraction-free-ish elimination, tracking the determinant
  Rat det = 1;
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (m.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < k; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rat inv = 1 / m.at(col, col);
    for (int r = col + 1; r < k; ++r) {
      Rat f = m.at(r, col) * inv;
      if (f == 0) continue;
      for (int j = col; j < k; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return det;
}

bool RatMatrix::positive_definite() const {
  if (rows_ != cols_) return false;
  for (int k = 1; k <= rows_; ++k)
    if (leading_minor(k) <= 0) return false;
  return true;
}

std::pair<RatMatrix, std::vector<Rat>> RatMatrix::ldl() const {
  if (!positive_definite()) throw std::domain_error("ldl: matrix not positive definite");
  int n = rows_;
  // A = U^T D U with U unit upper triangular, so the quadratic form expands
  // as sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.
  RatMatrix rem = *this;
  RatMatrix u = identity(n);
  std::vector<Rat> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = rem.at(i, i);
    for (int j = i + 1; j < n; ++j) u.at(i, j) = rem.at(i, j) / d[i];
    for (int r = i + 1; r < n; ++r)
      for (int c = i + 1; c < n; ++c) rem.at(r, c) -= rem.at(r, i) * rem.at(i, c) / d[i];
  }
  return {u, d};
}

}  // namespace qv
