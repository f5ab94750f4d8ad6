#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qv/cyclo.hpp"
#include "qv/series.hpp"
#include "qv/subst.hpp"

namespace qv {

/// Integer partition as weakly decreasing row lengths, bottom row first.
/// Box (x, y) lies in the diagram iff y < #rows and x < rows()[y]; its
/// diagonal label in the A_n pattern is (x - y) mod (n+1).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> rows);

  static Partition parse(const std::string& comma_list);  // "" or "-" = empty
  /// Rebuilds a partition from diagonal lengths L_d (d -> #boxes on the
  /// diagonal x - y = d). Throws if the profile is not a valid partition.
  static Partition from_profile(const std::map<int, int>& profile);

  const std::vector<int>& rows() const { return rows_; }
  int size() const { return size_; }
  bool empty() const { return rows_.empty(); }
  bool contains_box(int x, int y) const;

  /// Number of boxes on the diagonal x - y = d.
  int diag_length(int d) const;
  /// All nonzero diagonal lengths.
  std::map<int, int> profile() const;

  /// Corner coordinates (x, y) whose addition keeps a valid diagram; every
  /// partition has one per distinct row length plus the first empty row.
  std::vector<std::pair<int, int>> addable_boxes() const;
  std::vector<std::pair<int, int>> removable_boxes() const;

  Partition with_box(int x, int y) const;
  Partition without_box(int x, int y) const;

  /// True iff this contains o (componentwise on rows).
  bool contains(const Partition& o) const;
  Partition conjugate() const;

  /// All sub-diagrams (every mu with mu subset of this).
  std::vector<Partition> subdiagrams() const;

  std::string to_string() const;  // "7,5,4,4,3,1,1", "-" for empty

  auto operator<=>(const Partition& o) const = default;

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

/// Box counts per diagonal label.
struct ColoredWeight {
  std::vector<int> labels;  // index set: 0..n or sorted I+
  std::vector<int> counts;

  int count(int label) const;
  int total() const;
  bool operator==(const ColoredWeight&) const = default;
};

/// One diagonal strip's contribution to the fiber identity, tagged by the
/// shape case of its bounding diagonals i0 < i1.
struct StripFactor {
  long i0, i1;   // consecutive elements of the lifted I+
  int case_tag;  // 1: i0 >= 0, 2: i1 <= 0, 3: i0 < 0 < i1
  RootOfUnity value;
};

namespace parts {

int label_of(int x, int y, int n);

/// Multiweight over all n+1 labels.
ColoredWeight multiweight(const Partition& p, int n);
/// Restriction of the multiweight to the labels in I+.
ColoredWeight multiweight_restricted(const Partition& p, const std::set<int>& Iplus, int n);

/// Labels of all addable boxes (one entry per addable corner).
std::vector<int> addable_labels(const Partition& p, int n);

bool is_generated(const Partition& p, const std::set<int>& Iplus, int n);

/// The smallest I+-generated partition containing p: repeatedly add any
/// addable box whose label lies in I0.
Partition project(const Partition& p, const std::set<int>& Iplus, int n);

/// All partitions projecting to mu (mu must be I+-generated), built as the
/// product over diagonal strips of the interior boundary choices.
std::vector<Partition> fiber(const Partition& mu, const std::set<int>& Iplus, int n);

/// Per-strip root-of-unity factors of an I+-generated partition; their
/// product equals c_{Lambda_0, I0}.
std::vector<StripFactor> strip_factors(const Partition& p, const std::set<int>& Iplus, int n);

/// Generating series of all partitions with at most `bound` boxes, as a
/// series over I = {0..n} (coefficient of e^{-v} = #{lambda : mwt = v}).
MultiSeries enumerate_Z_full(int n, int bound);

/// Generating series of I+-generated partitions by restricted multiweight,
/// complete for all I+-weights <= bound.
MultiSeries enumerate_Z_quot(int n, const std::set<int>& Iplus, int bound);

/// Σ over all partitions with I+-weight <= bound of e^{-mwt} over the full
/// vertex set I: the window of enumerate_Z_full that determines every
/// substituted coefficient of I+-weight <= bound.
MultiSeries enumerate_Z_full_window(int n, const std::set<int>& Iplus, int bound);

/// Checks s_{I0}(sum over the fiber of e^{-mwt}) = c_{I0} e^{-mwt_{I+}}
/// exactly in Cyclo, for an I+-generated lambda.
bool verify_fiber_identity(const Partition& lambda, const Substitution& sub);

/// Streams every partition with at most max_boxes boxes (including the
/// empty one) in a deterministic order.
void for_each_partition(int max_boxes, const std::function<void(const Partition&)>& fn);

/// Streams every partition whose I+-weight is <= weight_bound and whose box
/// count is <= box_cap. Throws std::logic_error if some partition with
/// I+-weight <= weight_bound reaches box_cap exactly (cap too small to be a
/// completeness certificate).
void for_each_partition_in_window(int n, const std::set<int>& Iplus, int weight_bound,
                                  int box_cap,
                                  const std::function<void(const Partition&)>& fn);

/// Same enumeration without the completeness requirement. Returns true iff
/// the cap was reached by a weight-feasible partition (enumeration possibly
/// incomplete beyond it).
bool for_each_partition_in_window_capped(int n, const std::set<int>& Iplus, int weight_bound,
                                         int box_cap,
                                         const std::function<void(const Partition&)>& fn);

/// Conservative box bound for the weight window, from the strip analysis.
int window_box_cap(int n, int weight_bound);

}  // namespace parts

}  // namespace qv
