#pragma once

#include <map>
#include <vector>

#include "qv/cyclo.hpp"

namespace qv {

class Substitution;

/// Truncated formal series in variables e^{-alpha_i}, i in a fixed vertex
/// set, with Cyclo coefficients. A term maps an exponent vector v (indexed
/// like `variables()`) to the coefficient of prod_i e^{-v_i alpha_i}.
/// Truncation bounds the marks-weighted degree sum_i a_i v_i. Exponents may
/// be negative during assembly of lattice sums; generating functions call
/// assert_nonnegative_support() once assembled.
class MultiSeries {
 public:
  MultiSeries(std::vector<int> variables, std::vector<int> weights, int truncation);

  static MultiSeries one(std::vector<int> variables, std::vector<int> weights, int truncation);

  const std::vector<int>& variables() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  int truncation() const { return trunc_; }
  const std::map<std::vector<int>, Cyclo>& terms() const { return terms_; }

  int weighted_degree(const std::vector<int>& exp) const;

  /// Accumulates c * e^{-exp}; silently drops terms beyond the truncation.
  void add_term(const std::vector<int>& exp, const Cyclo& c);
  Cyclo coefficient(const std::vector<int>& exp) const;

  MultiSeries operator+(const MultiSeries& o) const;
  MultiSeries operator*(const MultiSeries& o) const;
  MultiSeries scalar_mul(const Cyclo& c) const;

  /// Inverse of a series with invertible constant term; a * a^{-1} = 1
  /// within the truncation. Rejects zero constant terms.
  MultiSeries invert_unit() const;

  /// Copy truncated to a smaller bound.
  MultiSeries truncated(int bound) const;

  /// Applies the substitution; result lives over the I+ variables.
  MultiSeries substituted(const Substitution& sub) const;

  /// Drops coefficients that reduce to zero.
  MultiSeries normalized() const;

  /// Throws std::logic_error if any stored nonzero term has a negative
  /// exponent.
  void assert_nonnegative_support() const;

  /// Exact coefficientwise equality (zero-coefficient aware).
  bool equal(const MultiSeries& o) const;

 private:
  int var_pos(int v) const;

  std::vector<int> vars_;     // sorted vertex ids
  std::vector<int> weights_;  // marks a_i aligned with vars_
  int trunc_;
  std::map<std::vector<int>, Cyclo> terms_;
};

}  // namespace qv
