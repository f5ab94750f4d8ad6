#include "qv/fock.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qv {

FockVector FockVector::basis(const Partition& p) {
  FockVector v;
  v.terms_.emplace(p, 1);
  return v;
}

Rat FockVector::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rat(0) : it->second;
}

void FockVector::add(const Partition& p, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector out = *this;
  for (const auto& [p, c] : o.terms_) out.add(p, c);
  return out;
}

FockVector FockVector::operator-(const FockVector& o) const {
  FockVector out = *this;
  for (const auto& [p, c] : o.terms_) out.add(p, -c);
  return out;
}

FockVector FockVector::scalar_mul(const Rat& r) const {
  FockVector out;
  if (r == 0) return out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * r);
  return out;
}

namespace fock {

namespace {

// The addable box on integer diagonal c, if any.
bool addable_on(const Partition& y, long c, std::pair<int, int>& box) {
  for (auto [x, yy] : y.addable_boxes())
    if ((long)x - yy == c) { box = {x, yy}; return true; }
  return false;
}

bool removable_on(const Partition& y, long c, std::pair<int, int>& box) {
  for (auto [x, yy] : y.removable_boxes())
    if ((long)x - yy == c) { box = {x, yy}; return true; }
  return false;
}

}  // namespace

FockVector apply_op(OpKind kind, long c, const FockVector& v) {
  FockVector out;
  std::pair<int, int> box;
  for (const auto& [y, coef] : v.terms()) {
    switch (kind) {
      case OpKind::E:
        if (removable_on(y, c, box)) out.add(y.without_box(box.first, box.second), coef);
        break;
      case OpKind::F:
        if (addable_on(y, c, box)) out.add(y.with_box(box.first, box.second), coef);
        break;
      case OpKind::H: {
        int h = (addable_on(y, c, box) ? 1 : 0) - (removable_on(y, c, box) ? 1 : 0);
        if (h != 0) out.add(y, Rat(h) * coef);
        break;
      }
      case OpKind::D: {
        int w = y.diag_length((int)c);
        if (w != 0) out.add(y, Rat(w) * coef);
        break;
      }
    }
  }
  return out;
}

FockVector apply_E(long c, const FockVector& v) { return apply_op(OpKind::E, c, v); }
FockVector apply_F(long c, const FockVector& v) { return apply_op(OpKind::F, c, v); }
FockVector apply_H(long c, const FockVector& v) { return apply_op(OpKind::H, c, v); }
FockVector apply_D(long c, const FockVector& v) { return apply_op(OpKind::D, c, v); }

FockVector apply_periodic(OpKind kind, int c, int n, const FockVector& v) {
  if (n < 1) throw std::invalid_argument("apply_periodic: n >= 1");
  long m = n + 1;
  // Integer diagonals supporting any action on v are bounded by the largest
  // diagram in v; one extra period on each side covers every addable corner.
  long lo = 0, hi = 0;
  for (const auto& [y, coef] : v.terms()) {
    (void)coef;
    if (y.empty()) continue;
    lo = std::min(lo, -(long)y.rows().size());
    hi = std::max(hi, (long)y.rows()[0]);
  }
  FockVector out;
  long cc = ((c % m) + m) % m;
  long first = (lo - m) + ((cc - (lo - m)) % m + m) % m;
  for (long d = first; d <= hi + m; d += m) out = out + apply_op(kind, d, v);
  return out;
}

int a_cc(long c, long cp) {
  if (c == cp) return 2;
  long diff = c > cp ? c - cp : cp - c;
  return diff == 1 ? -1 : 0;
}

namespace {

Partition random_partition(std::mt19937_64& rng, int max_boxes) {
  Partition p;
  int target = (int)(rng() % (max_boxes + 1));
  while (p.size() < target) {
    auto adds = p.addable_boxes();
    auto [x, y] = adds[rng() % adds.size()];
    p = p.with_box(x, y);
  }
  return p;
}

[[noreturn]] void relation_fail(const char* identity) {
  throw std::logic_error(std::string("operator relation failed: ") + identity);
}

}  // namespace

void check_integer_relations(int samples, int max_boxes, unsigned long seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < samples; ++trial) {
    Partition y = random_partition(rng, max_boxes);
    FockVector v = FockVector::basis(y);
    long c = (long)(rng() % 17) - 8;
    long cp = (long)(rng() % 17) - 8;
    auto E = [&](long t, const FockVector& w) { return apply_E(t, w); };
    auto F = [&](long t, const FockVector& w) { return apply_F(t, w); };
    auto H = [&](long t, const FockVector& w) { return apply_H(t, w); };
    auto D = [&](long t, const FockVector& w) { return apply_D(t, w); };

    if (!(H(c, H(cp, v)) - H(cp, H(c, v))).is_zero()) relation_fail("[H_c, H_c'] = 0");
    FockVector ef = E(c, F(cp, v)) - F(cp, E(c, v));
    if (!(ef == (c == cp ? H(c, v) : FockVector()))) relation_fail("[E_c, F_c'] = delta H_c");
    FockVector he = H(c, E(cp, v)) - E(cp, H(c, v));
    if (!(he == E(cp, v).scalar_mul(a_cc(c, cp)))) relation_fail("[H_c, E_c'] = a E_c'");
    FockVector hf = H(c, F(cp, v)) - F(cp, H(c, v));
    if (!(hf == F(cp, v).scalar_mul(-a_cc(c, cp)))) relation_fail("[H_c, F_c'] = -a F_c'");
    if (!(D(c, D(cp, v)) - D(cp, D(c, v))).is_zero()) relation_fail("[D_c, D_c'] = 0");
    if (!(D(c, H(cp, v)) - H(cp, D(c, v))).is_zero()) relation_fail("[D_c, H_c'] = 0");
    FockVector ed = E(c, D(cp, v)) - D(cp, E(c, v));
    if (!(ed == (c == cp ? E(c, v) : FockVector()))) relation_fail("[E_c, D_c'] = delta E_c");
    FockVector fd = F(c, D(cp, v)) - D(cp, F(c, v));
    if (!(fd == (c == cp ? F(c, v).scalar_mul(-1) : FockVector())))
      relation_fail("[F_c, D_c'] = -delta F_c");
    if (c != cp) {
      if (a_cc(c, cp) == 0) {
        if (!(E(c, E(cp, v)) - E(cp, E(c, v))).is_zero()) relation_fail("[E_c, E_c'] = 0");
        if (!(F(c, F(cp, v)) - F(cp, F(c, v))).is_zero()) relation_fail("[F_c, F_c'] = 0");
      } else {
        FockVector se = E(c, E(c, E(cp, v))) - E(c, E(cp, E(c, v))).scalar_mul(2) +
                        E(cp, E(c, E(c, v)));
        if (!se.is_zero()) relation_fail("ad(E_c)^2 (E_c') = 0");
        FockVector sf = F(c, F(c, F(cp, v))) - F(c, F(cp, F(c, v))).scalar_mul(2) +
                        F(cp, F(c, F(c, v)));
        if (!sf.is_zero()) relation_fail("ad(F_c)^2 (F_c') = 0");
      }
    }
  }
}

void check_periodic_relations(int n, int samples, int max_boxes, unsigned long seed) {
  if (n < 1) throw std::invalid_argument("check_periodic_relations: n >= 1");
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < samples; ++trial) {
    Partition y = random_partition(rng, max_boxes);
    FockVector v = FockVector::basis(y);
    int c = (int)(rng() % (n + 1)), cp = (int)(rng() % (n + 1));
    auto op = [&](OpKind k, int t, const FockVector& w) { return apply_periodic(k, t, n, w); };

    FockVector dv = op(OpKind::D, c, v);
    if (!(dv == v.scalar_mul(parts::multiweight(y, n).count(c))))
      relation_fail("d_[c] |Y> = wt_[c](Y) |Y>");
    FockVector hh = op(OpKind::H, c, op(OpKind::H, cp, v)) -
                    op(OpKind::H, cp, op(OpKind::H, c, v));
    if (!hh.is_zero()) relation_fail("[h_[c], h_[c']] = 0");
    if (n >= 2 && c != cp) {
      auto e = [&](int t, const FockVector& w) { return op(OpKind::E, t, w); };
      auto f = [&](int t, const FockVector& w) { return op(OpKind::F, t, w); };
      int diff = std::min((c - cp + n + 1) % (n + 1), (cp - c + n + 1) % (n + 1));
      if (diff > 1) {
        if (!(e(c, e(cp, v)) - e(cp, e(c, v))).is_zero()) relation_fail("[e_[c], e_[c']] = 0");
        if (!(f(c, f(cp, v)) - f(cp, f(c, v))).is_zero()) relation_fail("[f_[c], f_[c']] = 0");
      } else {
        FockVector se = e(c, e(c, e(cp, v))) - e(c, e(cp, e(c, v))).scalar_mul(2) +
                        e(cp, e(c, e(c, v)));
        if (!se.is_zero()) relation_fail("ad(e_[c])^2 (e_[c']) = 0");
        FockVector sf = f(c, f(c, f(cp, v))) - f(c, f(cp, f(c, v))).scalar_mul(2) +
                        f(cp, f(c, f(c, v)));
        if (!sf.is_zero()) relation_fail("ad(f_[c])^2 (f_[c']) = 0");
      }
    }
  }
}

bool in_F_Iplus(const Partition& y, const std::set<int>& Iplus, int n) {
  // |Y> lies in every ker F_c with c mod (n+1) outside I+ iff no addable box
  // carries such a class.
  long m = n + 1;
  for (auto [x, yy] : y.addable_boxes()) {
    long c = (long)x - yy;
    int cls = (int)(((c % m) + m) % m);
    if (!Iplus.count(cls)) {
      FockVector image = apply_F(c, FockVector::basis(y));
      if (!image.is_zero()) return false;
    }
  }
  return true;
}

MultiSeries trace_over_FIplus(int n, const std::set<int>& Iplus, int bound) {
  std::vector<int> vars(Iplus.begin(), Iplus.end());
  std::vector<int> weights(vars.size(), 1);
  MultiSeries tr(vars, weights, bound);
  parts::for_each_partition_in_window(
      n, Iplus, bound, parts::window_box_cap(n, bound), [&](const Partition& y) {
        if (!in_F_Iplus(y, Iplus, n)) return;
        // d_{[i]} eigenvalue of |Y> per class, through the periodic operator
        std::vector<int> e(vars.size());
        FockVector by = FockVector::basis(y);
        for (size_t i = 0; i < vars.size(); ++i) {
          FockVector dv = apply_periodic(OpKind::D, vars[i], n, by);
          Rat ev = dv.coefficient(y);
          if (!(dv == by.scalar_mul(ev)))
            throw std::logic_error("d_[c] is not diagonal on a basis vector");
          e[i] = (int)ev.get_num().get_si();
        }
        tr.add_term(e, Cyclo::one());
      });
  return tr;
}

int RectangleModule::diagonal_of_label(int label) const {
  long m = n + 1;
  for (int d = -(height - 1); d <= width - 1; ++d)
    if ((int)(((b + d) % m + m) % m) == label) return d;
  throw std::invalid_argument("label does not meet the rectangle");
}

RatMatrix RectangleModule::op_matrix(OpKind kind, int label) const {
  if (std::find(path.begin(), path.end(), label) == path.end())
    throw std::invalid_argument("label is not on the rectangle path");
  int d = diagonal_of_label(label);
  int N = dim();
  RatMatrix mat(N, N);
  auto index_of = [&](const Partition& p) {
    auto it = std::lower_bound(basis.begin(), basis.end(), p);
    if (it == basis.end() || !(*it == p)) throw std::logic_error("image left the rectangle");
    return (int)(it - basis.begin());
  };
  for (int j = 0; j < N; ++j) {
    const Partition& y = basis[j];
    std::pair<int, int> box;
    bool add_ok = false, rem_ok = false;
    // addable within the rectangle only
    for (auto [x, yy] : y.addable_boxes())
      if (x - yy == d && x < width && yy < height) { box = {x, yy}; add_ok = true; break; }
    switch (kind) {
      case OpKind::F:
        if (add_ok) mat.at(index_of(y.with_box(box.first, box.second)), j) = 1;
        break;
      case OpKind::E:
        for (auto [x, yy] : y.removable_boxes())
          if (x - yy == d) { box = {x, yy}; rem_ok = true; break; }
        if (rem_ok) mat.at(index_of(y.without_box(box.first, box.second)), j) = 1;
        break;
      case OpKind::H: {
        for (auto [x, yy] : y.removable_boxes())
          if (x - yy == d) { rem_ok = true; break; }
        int h = (add_ok ? 1 : 0) - (rem_ok ? 1 : 0);
        mat.at(j, j) = h;
        break;
      }
      case OpKind::D:
        mat.at(j, j) = y.diag_length(d);
        break;
    }
  }
  return mat;
}

RectangleModule rectangle_module(int n, int a, int b, int c) {
  if (n < 1) throw std::invalid_argument("rectangle_module: n >= 1");
  long m = n + 1;
  auto norm = [&](long x) { return (int)(((x % m) + m) % m); };
  if (a != norm(a) || b != norm(b) || c != norm(c))
    throw std::invalid_argument("rectangle_module: labels must lie in 0..n");
  RectangleModule r;
  r.n = n; r.a = a; r.b = b; r.c = c;
  r.height = norm(b - a) + 1;
  r.width = norm(c - b) + 1;
  // each diagonal label can meet the rectangle at most once
  if (r.width + r.height - 1 > n + 1)
    throw std::invalid_argument("rectangle_module: rectangle meets a label twice");
  for (int k = 0; k < r.width + r.height - 1; ++k) r.path.push_back(norm(a + k));
  // all partitions inside height rows x width columns
  parts::for_each_partition(r.width * r.height, [&](const Partition& p) {
    if ((int)p.rows().size() <= r.height && (p.empty() || p.rows()[0] <= r.width))
      r.basis.push_back(p);
  });
  std::sort(r.basis.begin(), r.basis.end());
  return r;
}

}  // namespace fock

}  // namespace qv
