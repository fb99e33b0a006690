#ifndef MFCAT_GRADING_HPP
#define MFCAT_GRADING_HPP

#include <optional>
#include <set>
#include <vector>

#include "mfcat/poly_matrix.hpp"

namespace mfcat {

/// Degree labels of the generators of a pair of free modules (P1, P0).
struct DegreeLabels {
  std::vector<int> p1;
  std::vector<int> p0;

  friend bool operator==(const DegreeLabels&, const DegreeLabels&) = default;
};

/// Infers integer generator degrees making a family of matrices homogeneous.
///
/// Nodes are generators; a matrix M: src -> tgt of degree `shift` imposes
/// deg(M(i,j)) = label(tgt_i) - label(src_j) + shift for every nonzero entry.
/// Each connected component is normalized so its smallest anchor label is 0.
class LabelSolver {
 public:
  explicit LabelSolver(std::vector<int> weights) : weights_(std::move(weights)) {}

  /// Adds `count` generator nodes; returns the index of the first.
  std::size_t add_nodes(std::size_t count, bool anchor);
  /// False if some entry is not homogeneous.
  bool add_map(const PolyMatrix& m, std::size_t tgt_first, std::size_t src_first, int shift);
  /// Constraint label(a) - label(b) = diff.
  void add_difference(std::size_t a, std::size_t b, int diff);

  std::optional<std::vector<int>> solve() const;

 private:
  struct Edge {
    std::size_t to;
    int diff;  // label(to) - label(from)
  };
  std::vector<int> weights_;
  std::vector<bool> anchor_;
  std::vector<std::vector<Edge>> adj_;
};

/// Offsets for the entries of a map src -> tgt of degree `shift`:
/// entry (i,j) has degree tgt[i] - src[j] + shift (row-major).
std::vector<int> map_offsets(const std::vector<int>& tgt, const std::vector<int>& src, int shift);

/// The set of degrees d such that m has a nonzero component of degree d as a
/// map src -> tgt.
std::set<int> map_degrees(const PolyMatrix& m, const std::vector<int>& tgt, const std::vector<int>& src,
                          const std::vector<int>& weights);

/// The degree-d component of m as a map src -> tgt.
PolyMatrix map_component(const PolyMatrix& m, const std::vector<int>& tgt, const std::vector<int>& src,
                         const std::vector<int>& weights, int d);

}  // namespace mfcat

#endif  // MFCAT_GRADING_HPP
