#include "qv/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "qv/subst.hpp"

namespace qv {

MultiSeries::MultiSeries(std::vector<int> variables, std::vector<int> weights, int truncation)
    : vars_(std::move(variables)), weights_(std::move(weights)), trunc_(truncation) {
  if (vars_.size() != weights_.size())
    throw std::invalid_argument("MultiSeries: one weight per variable");
  if (!std::is_sorted(vars_.begin(), vars_.end()))
    throw std::invalid_argument("MultiSeries: variables must be sorted");
  if (trunc_ < 0) throw std::invalid_argument("MultiSeries: negative truncation");
}

MultiSeries MultiSeries::one(std::vector<int> variables, std::vector<int> weights,
                             int truncation) {
  MultiSeries s(std::move(variables), std::move(weights), truncation);
  s.add_term(std::vector<int>(s.vars_.size(), 0), Cyclo::one());
  return s;
}

int MultiSeries::var_pos(int v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) throw std::invalid_argument("unknown series variable");
  return (int)(it - vars_.begin());
}

int MultiSeries::weighted_degree(const std::vector<int>& exp) const {
  int d = 0;
  for (size_t i = 0; i < exp.size(); ++i) d += weights_[i] * exp[i];
  return d;
}

void MultiSeries::add_term(const std::vector<int>& exp, const Cyclo& c) {
  if (exp.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
  if (weighted_degree(exp) > trunc_) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) terms_.emplace(exp, c);
  else it->second += c;
}

Cyclo MultiSeries::coefficient(const std::vector<int>& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Cyclo::zero() : it->second;
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("series variable sets differ");
  MultiSeries out(vars_, weights_, std::min(trunc_, o.trunc_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("series variable sets differ");
  MultiSeries out(vars_, weights_, std::min(trunc_, o.trunc_));
  std::vector<int> e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    int da = weighted_degree(ea);
    for (const auto& [eb, cb] : o.terms_) {
      if (da + weighted_degree(eb) > out.trunc_) continue;
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiSeries MultiSeries::scalar_mul(const Cyclo& c) const {
  MultiSeries out(vars_, weights_, trunc_);
  for (const auto& [e, t] : terms_) out.add_term(e, t * c);
  return out;
}

MultiSeries MultiSeries::invert_unit() const {
  std::vector<int> zero(vars_.size(), 0);
  Cyclo a0 = coefficient(zero);
  if (a0.is_zero()) throw std::invalid_argument("invert_unit: constant term is zero");
  Cyclo a0inv = a0.inverse();

  // Split a = a0 (1 - r); invert by the truncated geometric series.
  MultiSeries r(vars_, weights_, trunc_);
  for (const auto& [e, c] : terms_) {
    if (e == zero) continue;
    if (weighted_degree(e) < 1 && !c.is_zero())
      throw std::invalid_argument("invert_unit: nonconstant term of weighted degree < 1");
    r.add_term(e, -(c * a0inv));
  }
  MultiSeries acc = one(vars_, weights_, trunc_);
  MultiSeries power = one(vars_, weights_, trunc_);
  for (int k = 0; k < trunc_; ++k) {
    power = power * r;
    if (power.terms_.empty()) break;
    acc = acc + power;
  }
  return acc.scalar_mul(a0inv).normalized();
}

MultiSeries MultiSeries::truncated(int bound) const {
  MultiSeries out(vars_, weights_, std::min(bound, trunc_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

MultiSeries MultiSeries::substituted(const Substitution& sub) const {
  const std::vector<int>& ip = sub.Iplus();
  std::vector<int> wplus;
  for (int v : ip) wplus.push_back(weights_[var_pos(v)]);
  MultiSeries out(ip, wplus, trunc_);

  std::vector<int> ippos;
  for (int v : ip) ippos.push_back(var_pos(v));
  std::vector<int> eplus(ip.size());
  std::map<int, Int> full;
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (size_t i = 0; i < ip.size(); ++i) {
      eplus[i] = e[ippos[i]];
      deg += wplus[i] * eplus[i];
    }
    if (deg > trunc_) continue;
    full.clear();
    for (size_t i = 0; i < vars_.size(); ++i)
      if (e[i] != 0) full[vars_[i]] = e[i];
    RootOfUnity f = sub.monomial_factor(full);
    out.add_term(eplus, c * Cyclo::from_root(f));
  }
  return out.normalized();
}

MultiSeries MultiSeries::normalized() const {
  MultiSeries out(vars_, weights_, trunc_);
  for (const auto& [e, c] : terms_)
    if (!c.is_zero()) out.terms_.emplace(e, c.reduced());
  return out;
}

void MultiSeries::assert_nonnegative_support() const {
  for (const auto& [e, c] : terms_) {
    if (c.is_zero()) continue;
    for (int x : e)
      if (x < 0) throw std::logic_error("series support has a negative exponent");
  }
}

bool MultiSeries::equal(const MultiSeries& o) const {
  if (vars_ != o.vars_) return false;
  for (const auto& [e, c] : terms_)
    if (!(c == o.coefficient(e))) return false;
  for (const auto& [e, c] : o.terms_)
    if (!terms_.count(e) && !c.is_zero()) return false;
  return true;
}

}  // namespace qv
