#pragma once

#include <map>
#include <string>
#include <vector>

#include "qv/rational.hpp"

namespace qv {

/// exp(2*pi*sqrt(-1) * p/q) represented by its reduced exponent p/q in [0,1).
class RootOfUnity {
 public:
  RootOfUnity() : exp_(0) {}
  explicit RootOfUnity(const Rat& exponent) : exp_(frac_mod1(exponent)) {}

  const Rat& exponent() const { return exp_; }
  long order() const { return exp_.get_den().get_si(); }
  bool is_one() const { return exp_ == 0; }
  /// True iff this is a primitive root of the given order.
  bool is_primitive(long order) const;

  RootOfUnity operator*(const RootOfUnity& o) const { return RootOfUnity(exp_ + o.exp_); }
  RootOfUnity inverse() const { return RootOfUnity(-exp_); }
  RootOfUnity pow(const Int& e) const { return RootOfUnity(Rat(e) * exp_); }
  bool operator==(const RootOfUnity& o) const { return exp_ == o.exp_; }

 private:
  Rat exp_;  // in [0,1), reduced
};

/// The L-th cyclotomic polynomial, as integer coefficients (index = degree).
const std::vector<Int>& cyclotomic_poly(long L);

/// An element of Q(zeta_L), stored as sum_k coeffs[k] * zeta_L^k with a
/// length-L dense coefficient vector. Equality and zero tests reduce modulo
/// the L-th cyclotomic polynomial; mixed orders embed into the lcm.
class Cyclo {
 public:
  Cyclo() : order_(1), coeffs_(1) {}
  explicit Cyclo(const Rat& r) : order_(1), coeffs_{r} {}
  Cyclo(long order, std::vector<Rat> coeffs);

  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return Cyclo(Rat(1)); }
  static Cyclo from_root(const RootOfUnity& r);
  /// exp(2*pi*i*p/q) for a reduced fraction.
  static Cyclo from_root(const Rat& exponent) { return from_root(RootOfUnity(exponent)); }

  long order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  /// Embeds the value into Q(zeta_M); requires order() | M.
  Cyclo embedded(long M) const;

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo scalar_mul(const Rat& r) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }

  /// Multiplicative inverse in Q(zeta_L); throws std::domain_error on zero.
  Cyclo inverse() const;

  bool is_zero() const;
  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  /// Canonical representative: reduced mod the cyclotomic polynomial, with
  /// the same order. Degree-phi(L) and higher coefficients are zero.
  Cyclo reduced() const;

  bool is_rational() const;
  /// The rational value; throws if not rational.
  Rat to_rational() const;

  /// Human-readable rendering, e.g. "1 - 2*z60^7" (z = zeta_order).
  std::string to_string() const;

 private:
  long order_;
  std::vector<Rat> coeffs_;
};

/// Gaussian binomial coefficient [n choose k]_q as a dense integer
/// coefficient vector (index = q-degree). Rejects k > n.
std::vector<Int> qbinom(int n, int k);

/// Value of [n choose k]_q at a primitive (n+1)-th root of unity.
/// Computes both the closed form (-1)^k xi^{-k(k+1)/2} and the direct
/// polynomial evaluation, checks they agree exactly, and returns the value.
Cyclo qbinom_at_root(int n, int k, const RootOfUnity& xi);

}  // namespace qv
