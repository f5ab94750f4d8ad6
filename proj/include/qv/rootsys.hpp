#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qv/matrix.hpp"
#include "qv/rational.hpp"

namespace qv {

enum class Family { A, D, E };

/// An affine or finite ADE Dynkin diagram with multiplicity-aware edges.
///
/// Vertex numbering convention (also emitted by the CLI `describe` command):
///   finite A_l:  path 1 - 2 - ... - l
///   finite D_l:  chain 1 - ... - (l-2), with l-1 and l attached to l-2
///   finite E_l:  chain 1 - ... - (l-1), with l attached to the branch vertex
///                (3 for E6, 4 for E7, 5 for E8)
///   affine:      vertex 0 appended to the finite diagram; type A labels the
///                cycle 0..n (A_1 affine carries a double edge 0 - 1), and
///                for D/E vertex 0 attaches at the standard extension point
///                (D_l: vertex 2, E6: vertex 6, E7: vertex 6, E8: vertex 1).
struct Diagram {
  Family family;
  int rank;
  bool affine;
  std::vector<int> vertices;                 // sorted ids
  std::map<std::pair<int, int>, int> edges;  // (min,max) -> multiplicity

  int num_vertices() const { return (int)vertices.size(); }
  int edge_mult(int i, int j) const;
  /// Neighbors as (vertex, multiplicity) pairs, sorted by vertex.
  std::vector<std::pair<int, int>> neighbors(int i) const;
  bool has_vertex(int i) const;
  std::string name() const;  // "A2~", "D4"
};

Diagram build_diagram(Family family, int rank, bool affine);

/// Parses a diagram spec string like "A2~" (affine) or "D4" (finite).
Diagram parse_diagram(const std::string& spec);

/// Integer Cartan matrix indexed by the diagram's vertex list.
struct CartanMatrix {
  std::vector<int> index;  // vertex ids, sorted
  std::vector<std::vector<int>> entries;

  int pos(int vertex) const;
  int at(int vi, int vj) const;  // by vertex id
  RatMatrix to_rat() const;
};

CartanMatrix cartan(const Diagram& d);

/// Exact inverse Cartan matrix of a finite diagram, by Gaussian elimination.
/// Affine diagrams are rejected (singular).
RatMatrix inverse_cartan(const Diagram& d);

/// Dual Coxeter number of a finite ADE diagram.
int dual_coxeter(const Diagram& d);

/// Marks a_i of an affine diagram (the kernel vector of the Cartan matrix
/// normalized to a_0 = 1), as a map vertex -> positive integer.
std::map<int, int> marks(const Diagram& d);

/// One connected component of the subdiagram on I0.
struct SubComponent {
  std::vector<int> vertices;  // sorted subset of I0
  Family family;
  int rank;
  int dual_coxeter;
};

/// Decomposition data for a vertex split I = I0 + I+ of an affine diagram.
struct SubdiagramDecomposition {
  Diagram diagram;
  std::vector<int> I0, Iplus;  // sorted
  std::vector<SubComponent> components;
  std::map<int, int> h;   // j in I0 -> dual Coxeter number of j's component
  std::map<int, Rat> c;   // j in I0 -> row sum of the component inverse Cartan
  // Type A affine only: gap data on the lift of I+ to Z (mod n+1).
  std::map<int, int> r;   // i in I+ -> consecutive I0 elements to the right
  std::map<int, int> l;   // i in I+ -> consecutive I0 elements to the left
  std::map<int, int> nrun;  // i in I0 -> length of the maximal I0 run through i

  bool in_I0(int v) const;
};

SubdiagramDecomposition decompose(const Diagram& d, const std::set<int>& I0);

/// Checks h = 1 + sum over double-quiver arrows 0 -> j of c_j, exactly,
/// for the split I0 = I \ {0}.
bool verify_h_cj(const Diagram& d);

enum class Basis { Alpha, Lambda };

/// A rational coordinate vector over (a subset of) the diagram's vertices,
/// tagged with the basis it is expressed in.
struct WeightVector {
  std::map<int, Rat> coords;
  Basis basis;

  Rat coord(int vertex) const;
};

/// Basis conversions for finite diagrams (alpha_i = sum_j C_ij Lambda_j).
WeightVector alpha_to_lambda(const Diagram& d, const WeightVector& v);
WeightVector lambda_to_alpha(const Diagram& d, const WeightVector& v);

/// The vector of root-of-unity exponents used by the substituted theta
/// series: (k)_i = 1/(h_i+1) on I0 and -sum over arrows i->j in I0 of
/// c_j/(h_j+1) on I+. Coordinates are exact rationals; the 2*pi*sqrt(-1)
/// factor is implicit.
WeightVector k_vector(const Diagram& d, const std::set<int>& Iplus);

/// Restriction w^s = sum_{i in I0} <w - v', alpha_i^vee> Lambda_i^fin for
/// w in the Lambda basis over I and v' in the alpha basis over I.
/// Result lives in the Lambda basis over I0.
WeightVector ws_from(const WeightVector& w, const WeightVector& vprime,
                     const SubdiagramDecomposition& dec);

}  // namespace qv
