#pragma once

#include <map>
#include <set>

#include "qv/cyclo.hpp"
#include "qv/rootsys.hpp"

namespace qv {

/// The variable substitution attached to a split I = I0 + I+ of an affine
/// ADE diagram: e^{alpha_i} maps to the root of unity exp(2 pi i/(h_i+1))
/// for i in I0, and to e^{alpha_i} times a root-of-unity factor collected
/// over the double-quiver arrows into I0 for i in I+. Monomials e^{Lambda^fin_j}
/// are substituted through their alpha-expansion over I0.
class Substitution {
 public:
  /// General construction for any affine ADE diagram.
  static Substitution build(const Diagram& d, const std::set<int>& I0);

  /// Type A construction from the gap data (r_i, l_i, n_i); must agree with
  /// build() exactly. Rejects non-A diagrams.
  static Substitution build_type_a(const Diagram& d, const std::set<int>& I0);

  const Diagram& diagram() const { return dec_.diagram; }
  const SubdiagramDecomposition& decomposition() const { return dec_; }
  const std::vector<int>& I0() const { return dec_.I0; }
  const std::vector<int>& Iplus() const { return dec_.Iplus; }
  bool in_I0(int v) const { return dec_.in_I0(v); }

  /// Exponent fraction of the root-of-unity part of the image of e^{alpha_i}
  /// (the full image for i in I0; the factor multiplying e^{alpha_i} for
  /// i in I+).
  RootOfUnity alpha_image(int i) const;

  /// Exponent fraction of the image of e^{Lambda^fin_j}, j in I0.
  RootOfUnity lambda_fin_image(int j) const;

  /// Root-of-unity coefficient of the image of the monomial e^{-v} for an
  /// exponent vector over all of I; the surviving variable part is v|_{I+}.
  RootOfUnity monomial_factor(const std::map<int, Int>& v) const;

  /// c_{w,I0} = s_{I0}(e^{-w|_{I0}}) for w in the Lambda basis over I.
  RootOfUnity c_exponent(const WeightVector& w) const;
  Cyclo c_constant(const WeightVector& w) const;

  /// c_{Lambda_0, I0}, the constant entering the Quot-scheme series.
  RootOfUnity c_lambda0() const;

  /// Checks s_{I0}(e^{alpha_i - atilde_i}) = e^{alpha_i} for every i in I+,
  /// exactly.
  bool verify_property2() const;

 private:
  SubdiagramDecomposition dec_;
  std::map<int, RootOfUnity> alpha_image_;
  std::map<int, RootOfUnity> lambda_fin_image_;
};

}  // namespace qv
