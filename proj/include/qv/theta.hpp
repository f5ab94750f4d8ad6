#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "qv/matrix.hpp"
#include "qv/series.hpp"
#include "qv/subst.hpp"

namespace qv {

/// Positive-definite rational quadratic form Q(x) = x^T gram x with a
/// rational shift z, for shifted theta series.
struct QuadraticForm {
  RatMatrix gram;
  std::vector<Rat> shift;

  int dim() const { return gram.rows(); }
  Rat value(const std::vector<Rat>& x) const;  // (x+z)^T gram (x+z)
};

/// Formal q-series with exact rational exponents and Cyclo coefficients.
class QSeries {
 public:
  explicit QSeries(const Rat& truncation) : trunc_(truncation) {}

  const Rat& truncation() const { return trunc_; }
  const std::map<Rat, Cyclo>& terms() const { return terms_; }

  void add_term(const Rat& exponent, const Cyclo& c);
  Cyclo coefficient(const Rat& exponent) const;
  QSeries normalized() const;
  bool equal(const QSeries& o) const;

 private:
  Rat trunc_;
  std::map<Rat, Cyclo> terms_;
};

namespace theta {

/// Enumerates all v in Z^m with (v+t)^T G (v+t) <= bound for a rational
/// positive-definite G, exactly, by recursive LDL branch-and-bound.
void lattice_points(const RatMatrix& G, const std::vector<Rat>& t, const Rat& bound,
                    const std::function<void(const std::vector<Int>&)>& fn);

/// Smooth-model theta series over all of I (Cartan-twisted lattice sum with
/// the Euler-product prefactor), truncated in marks-weighted degree.
MultiSeries theta_full(const Diagram& d, int truncation);

/// The substituted (non-generic stability) series over I+ computed directly
/// from the k-vector twist, truncated in restricted marks-weighted degree.
MultiSeries theta_quot(const Diagram& d, const std::set<int>& Iplus, int truncation);

/// Shifted theta series Theta_{Q,z}(q) = sum over the lattice of q^{Q(k+z)},
/// truncated at the given exponent.
QSeries shifted_theta(const QuadraticForm& form, const Rat& truncation);

/// Collapses a series over variables e^{-alpha_i} to a one-variable q-series
/// via e^{-alpha_i} -> q^{a_i} using the given per-variable weights.
QSeries q_specialize(const MultiSeries& s);

/// A full-series truncation that provably determines every substituted
/// coefficient of restricted weighted degree <= window: the maximum
/// full-degree over lattice/prefactor contributions landing in the window.
int full_truncation_for_window(const Diagram& d, const std::set<int>& Iplus, int window);

}  // namespace theta

}  // namespace qv
