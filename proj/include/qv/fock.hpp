#pragma once

#include <map>
#include <set>
#include <vector>

#include "qv/parts.hpp"

namespace qv {

/// Finite linear combination of partition basis vectors |Y> with exact
/// rational coefficients.
class FockVector {
 public:
  FockVector() = default;
  static FockVector basis(const Partition& p);

  const std::map<Partition, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(const Partition& p) const;

  void add(const Partition& p, const Rat& c);
  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector scalar_mul(const Rat& r) const;
  bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

 private:
  std::map<Partition, Rat> terms_;
};

namespace fock {

enum class OpKind { E, F, H, D };

/// Integer-label box operators: E_c removes the removable box on diagonal c,
/// F_c adds the addable box on diagonal c, H_c scales by (#addable -
/// #removable) on diagonal c, D_c scales by the number of boxes on it.
FockVector apply_op(OpKind kind, long c, const FockVector& v);

FockVector apply_E(long c, const FockVector& v);
FockVector apply_F(long c, const FockVector& v);
FockVector apply_H(long c, const FockVector& v);
FockVector apply_D(long c, const FockVector& v);

/// Periodic operators e_[c], f_[c], h_[c], d_[c]: sums of the integer-label
/// operators over the congruence class c mod (n+1); finitely many act on any
/// finite vector.
FockVector apply_periodic(OpKind kind, int c, int n, const FockVector& v);

/// The a_{cc'} coefficient of the commutation relations (2 / -1 / 0).
int a_cc(long c, long cp);

/// Seeded random checks of every displayed commutation, grading, and Serre
/// relation of the integer-label operators. Throws std::logic_error naming
/// the failing identity.
void check_integer_relations(int samples, int max_boxes, unsigned long seed);

/// Same for the periodic operators mod n+1 (commutators, d-eigenvalues
/// against the multiweight, Serre relations).
void check_periodic_relations(int n, int samples, int max_boxes, unsigned long seed);

/// Membership of |Y> in F_{I+} = intersection of ker F_c over classes
/// outside I+, decided through the finitely many addable boxes of Y.
bool in_F_Iplus(const Partition& y, const std::set<int>& Iplus, int n);

/// tr over F_{I+} of e^{-d_{I+}}: generating series of the I+-kernel basis
/// partitions by their d-eigenvalues, complete for I+-weights <= bound.
MultiSeries trace_over_FIplus(int n, const std::set<int>& Iplus, int bound);

/// The finite module spanned by the partitions inside the labeled rectangle
/// R_{a,b,c}: bottom-left box labeled b, top-left a, bottom-right c, meeting
/// each diagonal label at most once.
struct RectangleModule {
  int n, a, b, c;
  int width, height;
  std::vector<int> path;          // vertex labels of the finite path a..c
  std::vector<Partition> basis;   // all partitions inside the rectangle

  int dim() const { return (int)basis.size(); }
  int diagonal_of_label(int label) const;  // rectangle diagonal carrying it

  /// Matrix of e_i / f_i / h_i on the basis (rows/cols in basis order).
  RatMatrix op_matrix(OpKind kind, int label) const;
};

RectangleModule rectangle_module(int n, int a, int b, int c);

}  // namespace fock

}  // namespace qv
