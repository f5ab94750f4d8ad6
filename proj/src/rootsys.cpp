#include "qv/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace qv {

namespace {

std::pair<int, int> ekey(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

void add_edge(Diagram& d, int i, int j, int mult = 1) { d.edges[ekey(i, j)] += mult; }

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

}  // namespace

int Diagram::edge_mult(int i, int j) const {
  auto it = edges.find(ekey(i, j));
  return it == edges.end() ? 0 : it->second;
}

std::vector<std::pair<int, int>> Diagram::neighbors(int i) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [e, m] : edges) {
    if (e.first == i) out.push_back({e.second, m});
    else if (e.second == i) out.push_back({e.first, m});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Diagram::has_vertex(int i) const {
  return std::binary_search(vertices.begin(), vertices.end(), i);
}

std::string Diagram::name() const {
  return std::string(1, family_char(family)) + std::to_string(rank) + (affine ? "~" : "");
}

Diagram build_diagram(Family family, int rank, bool affine) {
  bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
            (family == Family::E && (rank == 6 || rank == 7 || rank == 8));
  if (!ok)
    throw std::invalid_argument("no ADE diagram " + std::string(1, family_char(family)) +
                                std::to_string(rank));

  Diagram d;
  d.family = family;
  d.rank = rank;
  d.affine = affine;
  for (int v = affine ? 0 : 1; v <= rank; ++v) d.vertices.push_back(v);

  if (family == Family::A) {
    for (int i = 1; i + 1 <= rank; ++i) add_edge(d, i, i + 1);
    if (affine) {
      if (rank == 1) add_edge(d, 0, 1, 2);
      else { add_edge(d, 0, 1); add_edge(d, 0, rank); }
    }
  } else if (family == Family::D) {
    for (int i = 1; i + 1 <= rank - 1; ++i) add_edge(d, i, i + 1);
    add_edge(d, rank - 2, rank);
    if (affine) add_edge(d, 0, 2);
  } else {
    for (int i = 1; i + 1 <= rank - 1; ++i) add_edge(d, i, i + 1);
    int branch = rank == 6 ? 3 : (rank == 7 ? 4 : 5);
    add_edge(d, branch, rank);
    if (affine) add_edge(d, 0, rank == 6 ? 6 : (rank == 7 ? 6 : 1));
  }
  return d;
}

Diagram parse_diagram(const std::string& spec) {
  if (spec.size() < 2) throw std::invalid_argument("bad diagram spec: " + spec);
  Family f;
  switch (spec[0]) {
    case 'A': case 'a': f = Family::A; break;
    case 'D': case 'd': f = Family::D; break;
    case 'E': case 'e': f = Family::E; break;
    default: throw std::invalid_argument("bad diagram family in: " + spec);
  }
  bool affine = spec.back() == '~';
  std::string digits = spec.substr(1, spec.size() - 1 - (affine ? 1 : 0));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad diagram rank in: " + spec);
  return build_diagram(f, std::stoi(digits), affine);
}

int CartanMatrix::pos(int vertex) const {
  auto it = std::lower_bound(index.begin(), index.end(), vertex);
  if (it == index.end() || *it != vertex) throw std::invalid_argument("vertex not in matrix");
  return (int)(it - index.begin());
}

int CartanMatrix::at(int vi, int vj) const { return entries[pos(vi)][pos(vj)]; }

RatMatrix CartanMatrix::to_rat() const {
  int n = (int)index.size();
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = entries[i][j];
  return m;
}

CartanMatrix cartan(const Diagram& d) {
  CartanMatrix c;
  c.index = d.vertices;
  int n = d.num_vertices();
  c.entries.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c.entries[i][j] = i == j ? 2 : -d.edge_mult(c.index[i], c.index[j]);
  return c;
}

RatMatrix inverse_cartan(const Diagram& d) {
  if (d.affine) throw std::invalid_argument("affine Cartan matrix is singular");
  return cartan(d).to_rat().inverse();
}

int dual_coxeter(const Diagram& d) {
  if (d.affine) throw std::invalid_argument("dual Coxeter number of a finite diagram only");
  switch (d.family) {
    case Family::A: return d.rank + 1;
    case Family::D: return 2 * d.rank - 2;
    case Family::E: return d.rank == 6 ? 12 : (d.rank == 7 ? 18 : 30);
  }
  throw std::logic_error("unreachable");
}

std::map<int, int> marks(const Diagram& d) {
  if (!d.affine) throw std::invalid_argument("marks are defined for affine diagrams");
  // Solve C^fin x = -C[.,0] for the kernel vector normalized to a_0 = 1.
  CartanMatrix c = cartan(d);
  int n = d.num_vertices();
  RatMatrix fin(n - 1, n - 1);
  std::vector<Rat> rhs(n - 1);
  for (int i = 1; i < n; ++i) {
    rhs[i - 1] = -c.entries[i][0];
    for (int j = 1; j < n; ++j) fin.at(i - 1, j - 1) = c.entries[i][j];
  }
  std::vector<Rat> x = fin.solve(rhs);
  std::map<int, int> out{{0, 1}};
  for (int i = 1; i < n; ++i) {
    if (x[i - 1].get_den() != 1 || x[i - 1] <= 0)
      throw std::logic_error("marks are not positive integers");
    out[d.vertices[i]] = (int)x[i - 1].get_num().get_si();
  }
  return out;
}

namespace {

// Classifies a connected full subgraph of an ADE diagram as finite ADE.
std::pair<Family, int> classify_component(const Diagram& d, const std::vector<int>& verts) {
  int n = (int)verts.size();
  auto deg = [&](int v) {
    int k = 0;
    for (int u : verts)
      if (u != v) k += d.edge_mult(u, v);
    return k;
  };
  std::vector<int> branch;
  for (int v : verts)
    if (deg(v) >= 3) branch.push_back(v);
  if (branch.empty()) return {Family::A, n};
  if (branch.size() > 1) throw std::logic_error("component is not finite ADE");
  // Arm lengths from the unique branch vertex.
  int center = branch[0];
  std::vector<int> arms;
  for (auto [u, m] : d.neighbors(center)) {
    if (!std::count(verts.begin(), verts.end(), u)) continue;
    (void)m;
    int len = 1, prev = center, cur = u;
    for (;;) {
      int next = -1;
      for (auto [w, mw] : d.neighbors(cur)) {
        (void)mw;
        if (w != prev && std::count(verts.begin(), verts.end(), w)) { next = w; break; }
      }
      if (next < 0) break;
      prev = cur; cur = next; ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::logic_error("component is not finite ADE");
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, arms[2] + 3};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return {Family::E, arms[2] + 4};
  throw std::logic_error("component is not finite ADE");
}

}  // namespace

bool SubdiagramDecomposition::in_I0(int v) const {
  return std::binary_search(I0.begin(), I0.end(), v);
}

SubdiagramDecomposition decompose(const Diagram& d, const std::set<int>& I0set) {
  if (!d.affine) throw std::invalid_argument("decompose expects an affine diagram");
  if (I0set.empty() || (int)I0set.size() == d.num_vertices())
    throw std::invalid_argument("I0 must be a nonempty proper vertex subset");
  for (int v : I0set)
    if (!d.has_vertex(v)) throw std::invalid_argument("I0 contains unknown vertex");

  SubdiagramDecomposition dec;
  dec.diagram = d;
  dec.I0.assign(I0set.begin(), I0set.end());
  for (int v : d.vertices)
    if (!I0set.count(v)) dec.Iplus.push_back(v);

  // Connected components of the full subgraph on I0.
  std::set<int> todo = I0set;
  while (!todo.empty()) {
    std::vector<int> comp{*todo.begin()};
    todo.erase(todo.begin());
    for (size_t k = 0; k < comp.size(); ++k)
      for (auto [u, m] : d.neighbors(comp[k])) {
        (void)m;
        if (todo.count(u)) { comp.push_back(u); todo.erase(u); }
      }
    std::sort(comp.begin(), comp.end());

    SubComponent sc;
    sc.vertices = comp;
    auto fam = classify_component(d, comp);
    sc.family = fam.first;
    sc.rank = fam.second;
    sc.dual_coxeter = dual_coxeter(build_diagram(sc.family, sc.rank, false));

    // c_j = row sums of the component's inverse Cartan: solve C x = 1.
    int m = (int)comp.size();
    RatMatrix cm(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        cm.at(i, j) = i == j ? 2 : -d.edge_mult(comp[i], comp[j]);
    std::vector<Rat> ones(m, 1);
    std::vector<Rat> rowsums = cm.solve(ones);
    for (int i = 0; i < m; ++i) {
      dec.h[comp[i]] = sc.dual_coxeter;
      dec.c[comp[i]] = rowsums[i];
    }
    dec.components.push_back(std::move(sc));
  }

  // Type A gap data on the integer lift of I+ (labels mod n+1).
  if (d.family == Family::A) {
    int n1 = d.num_vertices();
    auto in_iplus = [&](long x) {
      int r = (int)(((x % n1) + n1) % n1);
      return !I0set.count(r);
    };
    for (int i : dec.Iplus) {
      int r = 0;
      while (!in_iplus(i + 1 + r)) ++r;
      int l = 0;
      while (!in_iplus(i - 1 - l)) ++l;
      dec.r[i] = r;
      dec.l[i] = l;
    }
    for (int i : dec.I0) {
      int len = 1, x = i;
      while (!in_iplus(x - 1)) { --x; ++len; }
      x = i;
      while (!in_iplus(x + 1)) { ++x; ++len; }
      dec.nrun[i] = len;
    }
  }
  return dec;
}

bool verify_h_cj(const Diagram& d) {
  if (!d.affine) throw std::invalid_argument("verify_h_cj expects an affine diagram");
  std::set<int> I0(d.vertices.begin(), d.vertices.end());
  I0.erase(0);
  SubdiagramDecomposition dec = decompose(d, I0);
  Rat sum = 0;
  for (auto [j, m] : d.neighbors(0)) sum += Rat(m) * dec.c.at(j);
  int h = dual_coxeter(build_diagram(d.family, d.rank, false));
  return Rat(h) == 1 + sum;
}

Rat WeightVector::coord(int vertex) const {
  auto it = coords.find(vertex);
  return it == coords.end() ? Rat(0) : it->second;
}

WeightVector alpha_to_lambda(const Diagram& d, const WeightVector& v) {
  if (d.affine) throw std::invalid_argument("basis conversion needs a finite diagram");
  if (v.basis != Basis::Alpha) throw std::invalid_argument("expected alpha basis");
  CartanMatrix c = cartan(d);
  WeightVector out{{}, Basis::Lambda};
  for (int j : d.vertices) {
    Rat s = 0;
    for (int i : d.vertices) s += Rat(c.at(i, j)) * v.coord(i);
    if (s != 0) out.coords[j] = s;
  }
  return out;
}

WeightVector lambda_to_alpha(const Diagram& d, const WeightVector& v) {
  if (d.affine) throw std::invalid_argument("basis conversion needs a finite diagram");
  if (v.basis != Basis::Lambda) throw std::invalid_argument("expected Lambda basis");
  RatMatrix inv = inverse_cartan(d);
  CartanMatrix c = cartan(d);
  WeightVector out{{}, Basis::Alpha};
  for (int i : d.vertices) {
    Rat s = 0;
    for (int j : d.vertices) s += inv.at(c.pos(i), c.pos(j)) * v.coord(j);
    if (s != 0) out.coords[i] = s;
  }
  return out;
}

WeightVector k_vector(const Diagram& d, const std::set<int>& Iplus) {
  if (!d.affine) throw std::invalid_argument("k_vector expects an affine diagram");
  std::set<int> I0;
  for (int v : d.vertices)
    if (!Iplus.count(v)) I0.insert(v);
  SubdiagramDecomposition dec = decompose(d, I0);
  WeightVector k{{}, Basis::Alpha};
  for (int i : dec.I0) k.coords[i] = Rat(1) / Rat(dec.h.at(i) + 1);
  for (int i : dec.Iplus) {
    Rat s = 0;
    for (auto [j, m] : d.neighbors(i))
      if (I0.count(j)) s -= Rat(m) * dec.c.at(j) / Rat(dec.h.at(j) + 1);
    if (s != 0) k.coords[i] = s;
  }
  return k;
}

WeightVector ws_from(const WeightVector& w, const WeightVector& vprime,
                     const SubdiagramDecomposition& dec) {
  if (w.basis != Basis::Lambda) throw std::invalid_argument("w must be in the Lambda basis");
  if (vprime.basis != Basis::Alpha) throw std::invalid_argument("v' must be in the alpha basis");
  CartanMatrix c = cartan(dec.diagram);
  WeightVector out{{}, Basis::Lambda};
  for (int i : dec.I0) {
    // <w - v', alpha_i^vee> = w_i - sum_j v'_j C_ji
    Rat s = w.coord(i);
    for (int j : dec.diagram.vertices) s -= vprime.coord(j) * Rat(c.at(j, i));
    if (s != 0) out.coords[i] = s;
  }
  return out;
}

}  // namespace qv
