#include "qv/cyclo.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qv {

bool RootOfUnity::is_primitive(long order) const {
  if (order <= 0) return false;
  if (exp_ == 0) return order == 1;
  return exp_.get_den() == order;
}

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
  if (den.back() != 1) throw std::logic_error("poly_divide_exact: divisor not monic");
  std::vector<Int> q(dn - dd + 1);
  for (int i = dn; i >= dd; --i) {
    Int c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (int k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
  return q;
}

std::map<long, std::vector<Int>> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

const std::vector<Int>& cyclotomic_poly(long L) {
  if (L < 1) throw std::invalid_argument("cyclotomic_poly: order must be positive");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(L);
  if (it != g_phi_cache.end()) return it->second;
  // Phi_L = (x^L - 1) / prod_{d | L, d < L} Phi_d
  std::vector<Int> num(L + 1);
  num[0] = -1;
  num[L] = 1;
  for (long d = 1; d < L; ++d) {
    if (L % d != 0) continue;
    // recurse without holding a second lock: cache fills bottom-up
    if (!g_phi_cache.count(d)) {
      std::vector<Int> nd(d + 1);
      nd[0] = -1;
      nd[d] = 1;
      for (long e = 1; e < d; ++e)
        if (d % e == 0) nd = poly_divide_exact(nd, g_phi_cache.at(e));
      g_phi_cache[d] = nd;
    }
    num = poly_divide_exact(num, g_phi_cache.at(d));
  }
  return g_phi_cache[L] = num;
}

Cyclo::Cyclo(long order, std::vector<Rat> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ < 1 || (long)coeffs_.size() != order_)
    throw std::invalid_argument("Cyclo: coefficient vector must have length = order");
}

Cyclo Cyclo::from_root(const RootOfUnity& r) {
  long q = r.order();
  std::vector<Rat> c(q);
  long p = r.exponent().get_num().get_si();
  c[p] = 1;
  return Cyclo(q, std::move(c));
}

Cyclo Cyclo::embedded(long M) const {
  if (M % order_ != 0) throw std::invalid_argument("Cyclo::embedded: order must divide target");
  if (M == order_) return *this;
  long f = M / order_;
  std::vector<Rat> c(M);
  for (long k = 0; k < order_; ++k)
    if (coeffs_[k] != 0) c[k * f] = coeffs_[k];
  return Cyclo(M, std::move(c));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  long M = std::lcm(order_, o.order_);
  Cyclo a = embedded(M), b = o.embedded(M);
  for (long k = 0; k < M; ++k) a.coeffs_[k] += b.coeffs_[k];
  return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const {
  Cyclo a = *this;
  for (Rat& c : a.coeffs_) c = -c;
  return a;
}

Cyclo Cyclo::scalar_mul(const Rat& r) const {
  Cyclo a = *this;
  for (Rat& c : a.coeffs_) c *= r;
  return a;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  long M = std::lcm(order_, o.order_);
  Cyclo a = embedded(M), b = o.embedded(M);
  std::vector<Rat> out(M);
  for (long i = 0; i < M; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (long j = 0; j < M; ++j) {
      if (b.coeffs_[j] == 0) continue;
      long k = i + j;
      if (k >= M) k -= M;
      out[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclo(M, std::move(out));
}

Cyclo Cyclo::reduced() const {
  const std::vector<Int>& phi = cyclotomic_poly(order_);
  long deg = (long)phi.size() - 1;
  std::vector<Rat> c = coeffs_;
  for (long i = order_ - 1; i >= deg; --i) {
    if (c[i] == 0) continue;
    Rat f = c[i];
    c[i] = 0;
    for (long k = 0; k < deg; ++k)
      if (phi[k] != 0) c[i - deg + k] -= f * Rat(phi[k]);
  }
  return Cyclo(order_, std::move(c));
}

bool Cyclo::is_zero() const {
  for (const Rat& r : reduced().coeffs_)
    if (r != 0) return false;
  return true;
}

bool Cyclo::operator==(const Cyclo& o) const { return (*this - o).is_zero(); }

bool Cyclo::is_rational() const {
  Cyclo r = reduced();
  for (size_t k = 1; k < r.coeffs_.size(); ++k)
    if (r.coeffs_[k] != 0) return false;
  return true;
}

Rat Cyclo::to_rational() const {
  Cyclo r = reduced();
  for (size_t k = 1; k < r.coeffs_.size(); ++k)
    if (r.coeffs_[k] != 0) throw std::domain_error("Cyclo value is not rational");
  return r.coeffs_[0];
}

namespace {

// Dense rational polynomial helpers for the extended Euclid inverse.
using RPoly = std::vector<Rat>;

int rdeg(const RPoly& p) {
  for (int i = (int)p.size() - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

RPoly rtrim(RPoly p) {
  p.resize(rdeg(p) + 1);
  return p;
}

// (quotient, remainder) of a by b over Q.
std::pair<RPoly, RPoly> rdivmod(RPoly a, const RPoly& b) {
  int db = rdeg(b);
  RPoly q(std::max<int>(rdeg(a) - db + 1, 0));
  for (int i = rdeg(a); i >= db; --i) {
    if (a[i] == 0) continue;
    Rat f = a[i] / b[db];
    q[i - db] = f;
    for (int k = 0; k <= db; ++k) a[i - db + k] -= f * b[k];
  }
  return {rtrim(q), rtrim(a)};
}

RPoly rsub_mul(const RPoly& a, const RPoly& q, const RPoly& b) {
  // a - q*b
  RPoly out = a;
  if (rdeg(q) >= 0 && rdeg(b) >= 0) {
    out.resize(std::max<size_t>(out.size(), q.size() + b.size()), Rat(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
  }
  return rtrim(out);
}

}  // namespace

Cyclo Cyclo::inverse() const {
  Cyclo red = reduced();
  RPoly a = rtrim(red.coeffs_);
  if (rdeg(a) < 0) throw std::domain_error("Cyclo: division by zero");
  const std::vector<Int>& phi_i = cyclotomic_poly(order_);
  RPoly phi(phi_i.size());
  for (size_t i = 0; i < phi_i.size(); ++i) phi[i] = Rat(phi_i[i]);
  // extended Euclid: s*a + t*phi = gcd = const, inverse = s / gcd
  RPoly r0 = phi, r1 = a;
  RPoly s0 = {Rat(0)}, s1 = {Rat(1)};
  while (rdeg(r1) > 0) {
    auto [q, r2] = rdivmod(r0, r1);
    RPoly s2 = rsub_mul(s0, q, s1);
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (rdeg(r1) < 0) throw std::domain_error("Cyclo: not invertible (zero divisor)");
  Rat g = r1[0];
  std::vector<Rat> out(order_);
  for (size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / g;
  return Cyclo(order_, std::move(out));
}

std::string Cyclo::to_string() const {
  Cyclo r = reduced();
  std::ostringstream os;
  bool first = true;
  for (long k = 0; k < r.order_; ++k) {
    const Rat& c = r.coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat ac = abs(c);
    if (k == 0) os << rat_str(ac);
    else {
      if (ac != 1) os << rat_str(ac) << "*";
      os << "z" << r.order_;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<Int> qbinom(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("qbinom: need 0 <= k <= n");
  // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q, row by row.
  std::vector<std::vector<Int>> row(k + 1);
  row[0] = {Int(1)};
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      std::vector<Int> cur(j * (m - j) + 1);
      if (j <= m - 1) {
        const std::vector<Int>& shift = row[j];  // [m-1 j]_q, may be empty
        for (size_t t = 0; t < shift.size(); ++t) cur[t + j] += shift[t];
      }
      const std::vector<Int>& keep = row[j - 1];  // [m-1 j-1]_q
      for (size_t t = 0; t < keep.size(); ++t) cur[t] += keep[t];
      row[j] = std::move(cur);
    }
  }
  return row[k];
}

Cyclo qbinom_at_root(int n, int k, const RootOfUnity& xi) {
  if (!xi.is_primitive(n + 1))
    throw std::invalid_argument("qbinom_at_root: xi must be a primitive (n+1)-th root");
  // closed form (-1)^k xi^{-k(k+1)/2}
  Rat expo = Rat(k) / 2 - xi.exponent() * Rat(k) * Rat(k + 1) / 2;
  Cyclo closed = Cyclo::from_root(RootOfUnity(expo));
  // direct polynomial evaluation
  std::vector<Int> poly = qbinom(n, k);
  Cyclo direct = Cyclo::zero();
  RootOfUnity power;
  for (size_t t = 0; t < poly.size(); ++t) {
    if (poly[t] != 0) direct += Cyclo::from_root(power).scalar_mul(Rat(poly[t]));
    power = power * xi;
  }
  if (closed != direct)
    throw std::logic_error("qbinom_at_root: closed form and evaluation disagree");
  return closed;
}

}  // namespace qv
