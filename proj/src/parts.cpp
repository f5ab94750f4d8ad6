#include "qv/parts.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qv {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (size_t y = 0; y < rows_.size(); ++y) {
    if (rows_[y] <= 0) throw std::invalid_argument("partition rows must be positive");
    if (y > 0 && rows_[y] > rows_[y - 1])
      throw std::invalid_argument("partition rows must be weakly decreasing");
    size_ += rows_[y];
  }
}

Partition Partition::parse(const std::string& s) {
  if (s.empty() || s == "-") return Partition();
  std::vector<int> rows;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) rows.push_back(std::stoi(tok));
  return Partition(std::move(rows));
}

bool Partition::contains_box(int x, int y) const {
  return x >= 0 && y >= 0 && y < (int)rows_.size() && x < rows_[y];
}

int Partition::diag_length(int d) const {
  // boxes (d+t, t); membership along a diagonal is a prefix in t
  int t = d >= 0 ? 0 : -d;
  int len = 0;
  while (contains_box(d + t, t)) { ++t; ++len; }
  return len;
}

std::map<int, int> Partition::profile() const {
  std::map<int, int> out;
  if (rows_.empty()) return out;
  for (int d = -(int)rows_.size() + 1; d < rows_[0]; ++d) {
    int l = diag_length(d);
    if (l > 0) out[d] = l;
  }
  return out;
}

std::vector<std::pair<int, int>> Partition::addable_boxes() const {
  std::vector<std::pair<int, int>> out;
  int h = (int)rows_.size();
  for (int y = 0; y <= h; ++y) {
    int x = y < h ? rows_[y] : 0;
    if (y == 0 || y == h || rows_[y - 1] > rows_[y]) out.push_back({x, y});
  }
  return out;
}

std::vector<std::pair<int, int>> Partition::removable_boxes() const {
  std::vector<std::pair<int, int>> out;
  int h = (int)rows_.size();
  for (int y = 0; y < h; ++y)
    if (y == h - 1 || rows_[y + 1] < rows_[y]) out.push_back({rows_[y] - 1, y});
  return out;
}

Partition Partition::with_box(int x, int y) const {
  std::vector<int> rows = rows_;
  if (y == (int)rows.size()) rows.push_back(0);
  if (y < 0 || y >= (int)rows.size() || x != rows[y])
    throw std::invalid_argument("box is not addable");
  rows[y] += 1;
  return Partition(std::move(rows));
}

Partition Partition::without_box(int x, int y) const {
  std::vector<int> rows = rows_;
  if (y < 0 || y >= (int)rows.size() || x != rows[y] - 1)
    throw std::invalid_argument("box is not removable");
  rows[y] -= 1;
  return Partition(std::move(rows));
}

bool Partition::contains(const Partition& o) const {
  if (o.rows_.size() > rows_.size()) return false;
  for (size_t y = 0; y < o.rows_.size(); ++y)
    if (o.rows_[y] > rows_[y]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int x = 0; rows_.empty() ? false : x < rows_[0]; ++x) {
    int h = 0;
    while (h < (int)rows_.size() && rows_[h] > x) ++h;
    cols.push_back(h);
  }
  return Partition(std::move(cols));
}

std::vector<Partition> Partition::subdiagrams() const {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t y) {
    out.push_back(Partition(cur));
    if (y >= rows_.size()) return;
    int upper = rows_[y];
    if (!cur.empty()) upper = std::min(upper, cur.back());
    for (int k = 1; k <= upper; ++k) {
      cur.push_back(k);
      rec(y + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Partition Partition::from_profile(const std::map<int, int>& profile) {
  auto len = [&](int d) {
    auto it = profile.find(d);
    return it == profile.end() ? 0 : it->second;
  };
  std::vector<int> rows;
  for (int y = 0;; ++y) {
    int x = 0;
    while (std::min(x, y) < len(x - y)) ++x;
    if (x == 0) break;
    rows.push_back(x);
  }
  Partition p(std::move(rows));
  std::map<int, int> cleaned;
  for (auto [d, l] : profile)
    if (l != 0) cleaned[d] = l;
  if (p.profile() != cleaned)
    throw std::invalid_argument("diagonal profile is not a partition profile");
  return p;
}

std::string Partition::to_string() const {
  if (rows_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << ",";
    os << rows_[i];
  }
  return os.str();
}

int ColoredWeight::count(int label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return 0;
  return counts[it - labels.begin()];
}

int ColoredWeight::total() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

namespace parts {

int label_of(int x, int y, int n) {
  int m = n + 1;
  return (((x - y) % m) + m) % m;
}

ColoredWeight multiweight(const Partition& p, int n) {
  ColoredWeight w;
  for (int c = 0; c <= n; ++c) w.labels.push_back(c);
  w.counts.assign(n + 1, 0);
  for (auto [d, l] : p.profile()) w.counts[label_of(d, 0, n)] += l;
  return w;
}

ColoredWeight multiweight_restricted(const Partition& p, const std::set<int>& Iplus, int n) {
  ColoredWeight full = multiweight(p, n);
  ColoredWeight w;
  for (int c : Iplus) {
    w.labels.push_back(c);
    w.counts.push_back(full.count(c));
  }
  return w;
}

std::vector<int> addable_labels(const Partition& p, int n) {
  std::vector<int> out;
  for (auto [x, y] : p.addable_boxes()) out.push_back(label_of(x, y, n));
  return out;
}

bool is_generated(const Partition& p, const std::set<int>& Iplus, int n) {
  if (Iplus.empty()) throw std::invalid_argument("I+ must be nonempty");
  for (int c : addable_labels(p, n))
    if (!Iplus.count(c)) return false;
  return true;
}

Partition project(const Partition& p, const std::set<int>& Iplus, int n) {
  if (Iplus.empty()) throw std::invalid_argument("I+ must be nonempty");
  Partition cur = p;
  long cap = 4L * (n + 2) * (n + 2) * (p.size() + n + 2) + 64;
  for (long steps = 0;; ++steps) {
    if (steps > cap) throw std::logic_error("project: closure did not terminate");
    bool added = false;
    for (auto [x, y] : cur.addable_boxes()) {
      if (!Iplus.count(label_of(x, y, n))) {
        cur = cur.with_box(x, y);
        added = true;
        break;
      }
    }
    if (!added) return cur;
  }
}

namespace {

bool lifted_in_iplus(long d, const std::set<int>& Iplus, int n) {
  long m = n + 1;
  return Iplus.count((int)(((d % m) + m) % m)) != 0;
}

// Boundary diagonals (lifted I+) of all strips that can carry boxes of mu
// or of anything below it, plus the strip whose interior contains 0.
std::vector<long> strip_boundaries(const Partition& mu, const std::set<int>& Iplus, int n) {
  long dmin = 0, dmax = 0;
  auto prof = mu.profile();
  if (!prof.empty()) {
    dmin = std::min<long>(0, prof.begin()->first);
    dmax = std::max<long>(0, prof.rbegin()->first);
  }
  std::vector<long> bs;
  for (long d = dmin - (n + 2); d <= dmax + (n + 2); ++d)
    if (lifted_in_iplus(d, Iplus, n)) bs.push_back(d);
  return bs;
}

// All interior diagonal-length sequences for the strip [i0, i1] with pinned
// endpoint lengths u, w. Steps d -> d+1 move by {0,-1} for d >= 0 and by
// {0,+1} for d < 0.
void interior_paths(long i0, long i1, int u, int w,
                    const std::function<void(const std::vector<int>&)>& fn) {
  int g = (int)(i1 - i0 - 1);
  std::vector<int> seq(g);
  std::function<void(int, int)> rec = [&](int idx, int prev) {
    long d = i0 + idx;  // step from diagonal d to d+1
    if (idx == g) {
      int lo = d >= 0 ? prev - 1 : prev;
      int hi = d >= 0 ? prev : prev + 1;
      if (w >= lo && w <= hi) fn(seq);
      return;
    }
    for (int next : {prev, d >= 0 ? prev - 1 : prev + 1}) {
      if (next < 0) continue;
      seq[idx] = next;
      rec(idx + 1, next);
    }
  };
  rec(0, u);
}

}  // namespace

std::vector<Partition> fiber(const Partition& mu, const std::set<int>& Iplus, int n) {
  if (!is_generated(mu, Iplus, n))
    throw std::invalid_argument("fiber: partition is not I+-generated");
  auto prof = mu.profile();
  auto len = [&](long d) {
    auto it = prof.find((int)d);
    return it == prof.end() ? 0 : it->second;
  };

  std::vector<long> bs = strip_boundaries(mu, Iplus, n);
  // Per strip, the list of interior choices (possibly the single forced one).
  std::vector<std::pair<long, std::vector<std::vector<int>>>> strips;
  for (size_t k = 0; k + 1 < bs.size(); ++k) {
    long i0 = bs[k], i1 = bs[k + 1];
    std::vector<std::vector<int>> choices;
    interior_paths(i0, i1, len(i0), len(i1), [&](const std::vector<int>& seq) {
      choices.push_back(seq);
    });
    if (choices.empty()) throw std::logic_error("fiber: no interior path (bad profile)");
    if (i1 - i0 > 1) strips.push_back({i0, std::move(choices)});
  }

  std::vector<Partition> out;
  std::map<int, int> work(prof.begin(), prof.end());
  std::function<void(size_t)> rec = [&](size_t si) {
    if (si == strips.size()) {
      out.push_back(Partition::from_profile(work));
      return;
    }
    auto& [i0, choices] = strips[si];
    for (const std::vector<int>& seq : choices) {
      for (size_t t = 0; t < seq.size(); ++t) {
        int d = (int)(i0 + 1 + t);
        if (seq[t] == 0) work.erase(d);
        else work[d] = seq[t];
      }
      rec(si + 1);
    }
    // restore mu's interior
    for (long d = i0 + 1; d < i0 + 1 + (long)choices[0].size(); ++d) {
      int l = len(d);
      if (l == 0) work.erase((int)d);
      else work[(int)d] = l;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StripFactor> strip_factors(const Partition& p, const std::set<int>& Iplus, int n) {
  if (!is_generated(p, Iplus, n))
    throw std::invalid_argument("strip_factors: partition is not I+-generated");
  auto prof = p.profile();
  auto len = [&](long d) {
    auto it = prof.find((int)d);
    return it == prof.end() ? 0 : it->second;
  };
  std::vector<long> bs = strip_boundaries(p, Iplus, n);
  std::vector<StripFactor> out;
  for (size_t k = 0; k + 1 < bs.size(); ++k) {
    long i0 = bs[k], i1 = bs[k + 1];
    int L0 = len(i0), L1 = len(i1);
    StripFactor f;
    f.i0 = i0;
    f.i1 = i1;
    if (i0 >= 0) {
      f.case_tag = 1;
      f.value = RootOfUnity(Rat(L0 - L1) / 2);
    } else if (i1 <= 0) {
      f.case_tag = 2;
      f.value = RootOfUnity(Rat(L1 - L0) / 2);
    } else {
      f.case_tag = 3;
      long r = i1 - i0 - 1;
      Rat e = Rat(L1 - L0 + i1) / 2 + Rat(i1 * (i1 + 1)) / Rat(2 * (r + 2));
      f.value = RootOfUnity(e);
    }
    if (f.case_tag == 3 || L0 != 0 || L1 != 0) out.push_back(f);
  }
  return out;
}

void for_each_partition(int max_boxes, const std::function<void(const Partition&)>& fn) {
  std::vector<int> rows;
  std::function<void(int, int)> rec = [&](int prev, int left) {
    fn(Partition(rows));
    for (int k = std::min(prev, left); k >= 1; --k) {
      rows.push_back(k);
      rec(k, left - k);
      rows.pop_back();
    }
  };
  rec(max_boxes, max_boxes);
}

int window_box_cap(int n, int weight_bound) {
  return (n + 1) * (weight_bound + n + 1) * (n + 2);
}

bool for_each_partition_in_window_capped(int n, const std::set<int>& Iplus, int weight_bound,
                                         int box_cap,
                                         const std::function<void(const Partition&)>& fn) {
  if (Iplus.empty()) throw std::invalid_argument("I+ must be nonempty");
  bool cap_hit = false;
  std::vector<int> rows;
  // weight added by a row of length k at height y
  auto row_weight = [&](int y, int k) {
    int w = 0;
    for (int x = 0; x < k; ++x)
      if (Iplus.count(label_of(x, y, n))) ++w;
    return w;
  };
  std::function<void(int, int, int)> rec = [&](int prev, int size, int wt) {
    fn(Partition(rows));
    if (size == box_cap) cap_hit = true;
    int y = (int)rows.size();
    for (int k = std::min(prev, box_cap - size); k >= 1; --k) {
      int w = wt + row_weight(y, k);
      if (w > weight_bound) continue;
      rows.push_back(k);
      rec(k, size + k, w);
      rows.pop_back();
    }
  };
  rec(box_cap, 0, 0);
  return cap_hit;
}

void for_each_partition_in_window(int n, const std::set<int>& Iplus, int weight_bound,
                                  int box_cap,
                                  const std::function<void(const Partition&)>& fn) {
  if (for_each_partition_in_window_capped(n, Iplus, weight_bound, box_cap, fn))
    throw std::logic_error(
        "partition window enumeration reached the box cap; window incomplete");
}

MultiSeries enumerate_Z_full(int n, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  std::vector<int> vars, weights;
  for (int i = 0; i <= n; ++i) { vars.push_back(i); weights.push_back(1); }
  MultiSeries z(vars, weights, bound);
  for_each_partition(bound, [&](const Partition& p) {
    z.add_term(multiweight(p, n).counts, Cyclo::one());
  });
  return z;
}

MultiSeries enumerate_Z_quot(int n, const std::set<int>& Iplus, int bound) {
  std::vector<int> vars(Iplus.begin(), Iplus.end());
  std::vector<int> weights(vars.size(), 1);
  MultiSeries z(vars, weights, bound);
  for_each_partition_in_window(n, Iplus, bound, window_box_cap(n, bound),
                               [&](const Partition& p) {
                                 if (!is_generated(p, Iplus, n)) return;
                                 z.add_term(multiweight_restricted(p, Iplus, n).counts,
                                            Cyclo::one());
                               });
  return z;
}

MultiSeries enumerate_Z_full_window(int n, const std::set<int>& Iplus, int bound) {
  std::vector<int> vars, weights;
  for (int i = 0; i <= n; ++i) { vars.push_back(i); weights.push_back(1); }
  int cap = window_box_cap(n, bound);
  MultiSeries z(vars, weights, cap);
  for_each_partition_in_window(n, Iplus, bound, cap, [&](const Partition& p) {
    z.add_term(multiweight(p, n).counts, Cyclo::one());
  });
  return z;
}

bool verify_fiber_identity(const Partition& lambda, const Substitution& sub) {
  const Diagram& d = sub.diagram();
  if (d.family != Family::A) throw std::invalid_argument("fiber identity is type A only");
  int n = d.rank;
  std::set<int> Iplus(sub.Iplus().begin(), sub.Iplus().end());
  Cyclo lhs = Cyclo::zero();
  for (const Partition& mu : fiber(lambda, Iplus, n)) {
    ColoredWeight w = multiweight(mu, n);
    std::map<int, Int> v;
    for (int i = 0; i <= n; ++i)
      if (w.counts[i] != 0) v[i] = w.counts[i];
    lhs += Cyclo::from_root(sub.monomial_factor(v));
  }
  return lhs == Cyclo::from_root(sub.c_lambda0());
}

}  // namespace parts

}  // namespace qv
