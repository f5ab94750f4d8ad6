#include "qv/theta.hpp"

#include <stdexcept>

#include "qv/rootsys.hpp"

namespace qv {

Rat QuadraticForm::value(const std::vector<Rat>& x) const {
  int m = dim();
  if ((int)x.size() != m || (int)shift.size() != m)
    throw std::invalid_argument("quadratic form dimension mismatch");
  std::vector<Rat> y(m);
  for (int i = 0; i < m; ++i) y[i] = x[i] + shift[i];
  Rat q = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) q += y[i] * gram.at(i, j) * y[j];
  return q;
}

void QSeries::add_term(const Rat& exponent, const Cyclo& c) {
  if (exponent > trunc_) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) terms_.emplace(exponent, c);
  else it->second += c;
}

Cyclo QSeries::coefficient(const Rat& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Cyclo::zero() : it->second;
}

QSeries QSeries::normalized() const {
  QSeries out(trunc_);
  for (const auto& [e, c] : terms_)
    if (!c.is_zero()) out.terms_.emplace(e, c.reduced());
  return out;
}

bool QSeries::equal(const QSeries& o) const {
  for (const auto& [e, c] : terms_)
    if (!(c == o.coefficient(e))) return false;
  for (const auto& [e, c] : o.terms_)
    if (!terms_.count(e) && !c.is_zero()) return false;
  return true;
}

namespace theta {

namespace {

// floor(a + sqrt(r)) for rationals a and r >= 0, exactly.
Int floor_add_sqrt(const Rat& a, const Rat& r) {
  if (r < 0) throw std::invalid_argument("negative radicand");
  Int ir = rat_floor(r);
  Int s;
  mpz_sqrt(s.get_mpz_t(), ir.get_mpz_t());
  Int x = rat_floor(a) + s;  // lower estimate
  auto le = [&](const Int& cand) {
    // cand <= a + sqrt(r)  <=>  cand - a <= 0 or (cand - a)^2 <= r
    Rat y = Rat(cand) - a;
    return y <= 0 || y * y <= r;
  };
  while (le(x + 1)) ++x;
  while (!le(x)) --x;
  return x;
}

}  // namespace

void lattice_points(const RatMatrix& G, const std::vector<Rat>& t, const Rat& bound,
                    const std::function<void(const std::vector<Int>&)>& fn) {
  int m = G.rows();
  if ((int)t.size() != m) throw std::invalid_argument("lattice shift dimension mismatch");
  if (bound < 0) return;
  if (m == 0) { fn({}); return; }
  auto [u, diag] = G.ldl();

  std::vector<Int> v(m);
  std::vector<Rat> x(m);  // x_j = v_j + t_j for chosen levels
  // Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2, levels fixed from m-1 down.
  std::function<void(int, const Rat&)> rec = [&](int i, const Rat& rem) {
    if (i < 0) { fn(v); return; }
    Rat s = t[i];
    for (int j = i + 1; j < m; ++j) s += u.at(i, j) * x[j];
    Rat radicand = rem / diag[i];
    Int hi = floor_add_sqrt(-s, radicand);
    Int lo = -floor_add_sqrt(s, radicand);
    for (Int vi = lo; vi <= hi; ++vi) {
      Rat term = Rat(vi) + s;
      Rat used = diag[i] * term * term;
      if (used > rem) continue;
      v[i] = vi;
      x[i] = Rat(vi) + t[i];
      rec(i - 1, rem - used);
    }
  };
  rec(m - 1, bound);
}

namespace {

struct AffineData {
  std::vector<int> verts;       // all of I, sorted
  std::vector<int> finite;      // I' = I minus 0
  std::map<int, int> mark;      // a_i
  RatMatrix cfin;               // finite Cartan matrix over I'
  int msum;                     // sum over I of a_i^2
};

AffineData affine_data(const Diagram& d) {
  if (!d.affine) throw std::invalid_argument("theta series need an affine diagram");
  AffineData a;
  a.verts = d.vertices;
  for (int v : d.vertices)
    if (v != 0) a.finite.push_back(v);
  a.mark = marks(d);
  int m = (int)a.finite.size();
  a.cfin = RatMatrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a.cfin.at(i, j) = i == j ? 2 : -d.edge_mult(a.finite[i], a.finite[j]);
  a.msum = 0;
  for (auto [v, av] : a.mark) a.msum += av * av;
  return a;
}

// Q(v) = (1/2) v C' v^T, exact, as an integer (the form is even).
Int half_norm(const AffineData& a, const std::vector<Int>& v) {
  Rat q = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) q += Rat(v[i]) * a.cfin.at(i, j) * Rat(v[j]);
  }
  q /= 2;
  if (q.get_den() != 1) throw std::logic_error("Cartan form is not even");
  return q.get_num();
}

// Enumerates v in Z^{I'} with scale*Q(v) + lin.v <= bound; lin indexed by I'.
void scan_lattice(const AffineData& a, int scale, const std::vector<Rat>& lin,
                  const Rat& bound,
                  const std::function<void(const std::vector<Int>&, const Int&)>& fn) {
  int m = (int)a.finite.size();
  RatMatrix G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G.at(i, j) = Rat(scale) / 2 * a.cfin.at(i, j);
  std::vector<Rat> t = G.solve([&] {
    std::vector<Rat> h(m);
    for (int i = 0; i < m; ++i) h[i] = lin[i] / 2;
    return h;
  }());
  Rat shift_norm = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) shift_norm += t[i] * G.at(i, j) * t[j];
  lattice_points(G, t, bound + shift_norm, [&](const std::vector<Int>& v) {
    Int q = half_norm(a, v);
    Rat deg = Rat(q) * scale;
    for (int i = 0; i < m; ++i) deg += lin[i] * Rat(v[i]);
    if (deg > bound) return;  // guards exact boundary ties from the sqrt bound
    fn(v, q);
  });
}

// (prod_{k>=1} (1 - e^{-k delta}))^{-|I|} expanded to the truncation, over
// the given variable set with delta restricted to it.
MultiSeries euler_prefactor(const AffineData& a, const std::vector<int>& vars,
                            int truncation) {
  std::vector<int> w;
  for (int v : vars) w.push_back(a.mark.at(v));
  int dstep = 0;
  for (int v : vars) dstep += a.mark.at(v) * a.mark.at(v);
  MultiSeries out = MultiSeries::one(vars, w, truncation);
  int copies = (int)a.verts.size();
  for (int k = 1; dstep * k <= truncation; ++k) {
    MultiSeries geo(vars, w, truncation);
    std::vector<int> e(vars.size());
    for (int j = 0; j * k * dstep <= truncation; ++j) {
      for (size_t i = 0; i < vars.size(); ++i) e[i] = j * k * a.mark.at(vars[i]);
      geo.add_term(e, Cyclo::one());
    }
    for (int c = 0; c < copies; ++c) out = out * geo;
  }
  return out;
}

}  // namespace

MultiSeries theta_full(const Diagram& d, int truncation) {
  AffineData a = affine_data(d);
  std::vector<int> vars = a.verts;
  std::vector<int> w;
  for (int v : vars) w.push_back(a.mark.at(v));

  MultiSeries lattice(vars, w, truncation);
  std::vector<Rat> lin(a.finite.size());
  for (size_t i = 0; i < a.finite.size(); ++i) lin[i] = a.mark.at(a.finite[i]);
  scan_lattice(a, a.msum, lin, truncation, [&](const std::vector<Int>& v, const Int& q) {
    // exponent u_i = v_i + Q * a_i over I', and Q * a_0 at the affine vertex
    std::vector<int> e(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) {
      Int u = q * a.mark.at(vars[i]);
      if (vars[i] != 0) {
        size_t pos = std::lower_bound(a.finite.begin(), a.finite.end(), vars[i]) -
                     a.finite.begin();
        u += v[pos];
      }
      e[i] = (int)u.get_si();
    }
    lattice.add_term(e, Cyclo::one());
  });

  MultiSeries out = (lattice * euler_prefactor(a, vars, truncation)).normalized();
  out.assert_nonnegative_support();
  return out;
}

MultiSeries theta_quot(const Diagram& d, const std::set<int>& Iplus, int truncation) {
  AffineData a = affine_data(d);
  if (Iplus.empty() || (int)Iplus.size() >= (int)a.verts.size())
    throw std::invalid_argument("theta_quot: I+ must be nonempty and proper");
  std::set<int> I0;
  for (int v : a.verts)
    if (!Iplus.count(v)) I0.insert(v);
  Substitution sub = Substitution::build(d, I0);
  WeightVector k = k_vector(d, Iplus);

  std::vector<int> vars(Iplus.begin(), Iplus.end());
  std::vector<int> w;
  int mplus = 0;
  for (int v : vars) {
    w.push_back(a.mark.at(v));
    mplus += a.mark.at(v) * a.mark.at(v);
  }

  MultiSeries lattice(vars, w, truncation);
  std::vector<Rat> lin(a.finite.size());
  for (size_t i = 0; i < a.finite.size(); ++i)
    lin[i] = Iplus.count(a.finite[i]) ? Rat(a.mark.at(a.finite[i])) : Rat(0);
  scan_lattice(a, mplus, lin, truncation, [&](const std::vector<Int>& v, const Int& q) {
    Rat kdotv = 0;
    for (size_t i = 0; i < a.finite.size(); ++i)
      if (v[i] != 0) kdotv += k.coord(a.finite[i]) * Rat(v[i]);
    std::vector<int> e(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) {
      Int u = q * a.mark.at(vars[i]);
      if (vars[i] != 0) {
        size_t pos = std::lower_bound(a.finite.begin(), a.finite.end(), vars[i]) -
                     a.finite.begin();
        u += v[pos];
      }
      e[i] = (int)u.get_si();
    }
    lattice.add_term(e, Cyclo::from_root(RootOfUnity(-kdotv)));
  });

  Cyclo cinv = Cyclo::from_root(sub.c_lambda0().inverse());
  MultiSeries out =
      (lattice * euler_prefactor(a, vars, truncation)).scalar_mul(cinv).normalized();
  out.assert_nonnegative_support();
  for (const auto& [e, c] : out.terms()) {
    (void)e;
    if (!c.is_rational() || c.to_rational().get_den() != 1 || c.to_rational() < 0)
      throw std::logic_error("theta_quot: coefficient is not a nonnegative integer");
  }
  return out;
}

QSeries shifted_theta(const QuadraticForm& form, const Rat& truncation) {
  if (!form.gram.positive_definite())
    throw std::invalid_argument("shifted_theta: form is not positive definite");
  QSeries out(truncation);
  lattice_points(form.gram, form.shift, truncation, [&](const std::vector<Int>& kvec) {
    std::vector<Rat> x(kvec.size());
    for (size_t i = 0; i < kvec.size(); ++i) x[i] = Rat(kvec[i]);
    Rat q = form.value(x);
    if (q > truncation) return;
    out.add_term(q, Cyclo::one());
  });
  return out.normalized();
}

QSeries q_specialize(const MultiSeries& s) {
  QSeries out{Rat(s.truncation())};
  for (const auto& [e, c] : s.terms()) out.add_term(Rat(s.weighted_degree(e)), c);
  return out.normalized();
}

int full_truncation_for_window(const Diagram& d, const std::set<int>& Iplus, int window) {
  AffineData a = affine_data(d);
  int mplus = 0;
  for (int v : Iplus) mplus += a.mark.at(v) * a.mark.at(v);
  std::vector<Rat> lin(a.finite.size());
  for (size_t i = 0; i < a.finite.size(); ++i)
    lin[i] = Iplus.count(a.finite[i]) ? Rat(a.mark.at(a.finite[i])) : Rat(0);

  // Over every lattice/prefactor contribution landing in the window, the
  // largest full-degree it can carry.
  Int best = window;
  scan_lattice(a, mplus, lin, window, [&](const std::vector<Int>& v, const Int& q) {
    Rat degp = Rat(q) * mplus;
    Rat degf = Rat(q) * a.msum;
    for (size_t i = 0; i < a.finite.size(); ++i) {
      degp += lin[i] * Rat(v[i]);
      degf += Rat(a.mark.at(a.finite[i])) * Rat(v[i]);
    }
    Int jmax = rat_floor((Rat(window) - degp) / mplus);
    Rat full = degf + Rat(jmax) * a.msum;
    Int fi = rat_ceil(full);
    if (fi > best) best = fi;
  });
  return (int)best.get_si();
}

}  // namespace theta

}  // namespace qv
