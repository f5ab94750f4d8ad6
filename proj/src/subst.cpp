#include "qv/subst.hpp"

#include <stdexcept>

namespace qv {

Substitution Substitution::build(const Diagram& d, const std::set<int>& I0) {
  Substitution s;
  s.dec_ = decompose(d, I0);

  for (int i : s.dec_.I0)
    s.alpha_image_[i] = RootOfUnity(Rat(1) / Rat(s.dec_.h.at(i) + 1));
  for (int i : s.dec_.Iplus) {
    Rat e = 0;
    for (auto [j, m] : d.neighbors(i))
      if (I0.count(j)) e -= Rat(m) * s.dec_.c.at(j) / Rat(s.dec_.h.at(j) + 1);
    s.alpha_image_[i] = RootOfUnity(e);
  }

  // e^{Lambda^fin_j} through the alpha-expansion over I0:
  // Lambda^fin_j = sum_i ((C^fin)^{-1})_{ji} alpha_i.
  int m = (int)s.dec_.I0.size();
  RatMatrix cfin(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      cfin.at(a, b) = a == b ? 2 : -d.edge_mult(s.dec_.I0[a], s.dec_.I0[b]);
  RatMatrix inv = cfin.inverse();
  for (int a = 0; a < m; ++a) {
    Rat e = 0;
    for (int b = 0; b < m; ++b)
      e += inv.at(a, b) * s.alpha_image_.at(s.dec_.I0[b]).exponent();
    s.lambda_fin_image_[s.dec_.I0[a]] = RootOfUnity(e);
  }
  return s;
}

Substitution Substitution::build_type_a(const Diagram& d, const std::set<int>& I0) {
  if (d.family != Family::A || !d.affine)
    throw std::invalid_argument("build_type_a expects an affine type A diagram");
  Substitution s = build(d, I0);  // reuse decomposition and the Lambda^fin table
  for (int i : s.dec_.I0)
    s.alpha_image_[i] = RootOfUnity(Rat(1) / Rat(s.dec_.nrun.at(i) + 2));
  for (int i : s.dec_.Iplus)
    s.alpha_image_[i] =
        RootOfUnity(Rat(1) / Rat(s.dec_.r.at(i) + 2) + Rat(1) / Rat(s.dec_.l.at(i) + 2));
  return s;
}

RootOfUnity Substitution::alpha_image(int i) const { return alpha_image_.at(i); }

RootOfUnity Substitution::lambda_fin_image(int j) const { return lambda_fin_image_.at(j); }

RootOfUnity Substitution::monomial_factor(const std::map<int, Int>& v) const {
  Rat e = 0;
  for (const auto& [i, vi] : v) e -= Rat(vi) * alpha_image_.at(i).exponent();
  return RootOfUnity(e);
}

RootOfUnity Substitution::c_exponent(const WeightVector& w) const {
  if (w.basis != Basis::Lambda) throw std::invalid_argument("c_constant: w must be in Lambda basis");
  Rat e = 0;
  for (int j : dec_.I0) e -= w.coord(j) * lambda_fin_image_.at(j).exponent();
  return RootOfUnity(e);
}

Cyclo Substitution::c_constant(const WeightVector& w) const {
  return Cyclo::from_root(c_exponent(w));
}

RootOfUnity Substitution::c_lambda0() const {
  WeightVector lambda0{{{0, Rat(1)}}, Basis::Lambda};
  return c_exponent(lambda0);
}

bool Substitution::verify_property2() const {
  CartanMatrix c = cartan(dec_.diagram);
  for (int i : dec_.Iplus) {
    // s(e^{alpha_i - atilde_i}) with atilde_i = sum_{j in I0} C_ij Lambda^fin_j
    // must be exactly e^{alpha_i}: the root-of-unity factors cancel.
    Rat e = alpha_image_.at(i).exponent();
    for (int j : dec_.I0) e -= Rat(c.at(i, j)) * lambda_fin_image_.at(j).exponent();
    if (frac_mod1(e) != 0) return false;
  }
  return true;
}

}  // namespace qv
