#ifndef MFCAT_SOLVER_HPP
#define MFCAT_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfcat/errors.hpp"
#include "mfcat/grading.hpp"
#include "mfcat/poly_matrix.hpp"

namespace mfcat {

/// automatic: graded whenever every input is homogeneous, bounded otherwise.
enum class Mode { automatic, graded, bounded };

struct SolveOptions {
  Mode mode = Mode::automatic;
  /// Initial degree bound in bounded mode (default: max input degree + slack + 2).
  std::optional<int> max_degree;
  /// Bounded searches double the bound up to this cap.
  int degree_cap = 32;
  /// Escalation stops once a system would need more field unknowns than this.
  std::size_t max_unknowns = 60000;
};

/// A polynomial-matrix unknown.
///
/// Graded unknowns range, entry by entry, over monomials of weighted degree
/// offsets[k] + s for s in `shifts`; completeness for homogeneous systems makes
/// their non-existence answers proofs. Bounded unknowns range over all
/// monomials of total degree <= bound (or the system's escalating bound).
struct Unknown {
  std::string name;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool graded = false;
  std::vector<int> offsets;
  std::vector<int> shifts{0};
  std::optional<int> bound;
};

/// left * X * right; an absent factor is the identity.
struct MatTerm {
  std::size_t unknown = 0;
  std::optional<PolyMatrix> left = std::nullopt;
  std::optional<PolyMatrix> right = std::nullopt;
};

/// sum of terms = target
struct Equation {
  std::vector<MatTerm> terms;
  PolyMatrix target;
};

using Assignment = std::vector<PolyMatrix>;

class LinearSystem {
 public:
  explicit LinearSystem(RingPtr ring) : ring_(std::move(ring)) {}

  std::size_t add_unknown(Unknown u);
  std::size_t add_graded(std::string name, std::size_t rows, std::size_t cols, std::vector<int> offsets,
                         std::vector<int> shifts = {0});
  std::size_t add_bounded(std::string name, std::size_t rows, std::size_t cols,
                          std::optional<int> bound = std::nullopt);
  void add_equation(std::vector<MatTerm> terms, PolyMatrix target);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Unknown>& unknowns() const { return unknowns_; }
  const std::vector<Equation>& equations() const { return equations_; }

  bool fully_graded() const;
  bool has_unset_bounds() const;
  /// max degree of the known matrices + `degree_hint` + 2
  int default_bound() const;
  /// Extra slack for the default bound, e.g. deg(omega).
  int degree_hint = 0;

  /// Substitutes an assignment and checks every equation exactly.
  bool satisfied_by(const Assignment& a) const;

 private:
  RingPtr ring_;
  std::vector<Unknown> unknowns_;
  std::vector<Equation> equations_;
};

struct SolveResult {
  std::optional<Assignment> solution;
  Certainty certainty = Certainty::proven;
  /// Bound reached by bounded search; -1 when the system is fully graded.
  int degree_bound = -1;
};

struct SolutionSpace {
  std::optional<Assignment> particular;
  std::vector<Assignment> basis;
  std::size_t dim = 0;
  Certainty certainty = Certainty::proven;
  int degree_bound = -1;
};

/// Exact solution within the degree bounds, escalating unset bounds by
/// doubling up to the cap.
SolveResult solve_bounded(const LinearSystem& sys, const SolveOptions& opts = {});

/// Particular solution (if any) and a field basis of the homogeneous
/// solutions, using `opts.max_degree` (or the default) for unset bounds.
SolutionSpace solution_space(const LinearSystem& sys, const SolveOptions& opts = {});

/// Dimension of the span of the given unknowns' components of `vectors`.
std::size_t span_dimension(const RingPtr& ring, const std::vector<Assignment>& vectors,
                           const std::vector<std::size_t>& which);

/// True iff A: S^cols -> S^rows is injective. Random evaluation gives a
/// candidate maximal minor whose determinant is then verified exactly; after
/// three failed trials every maximal minor is checked. Needs a free ring.
bool injectivity_test(const PolyMatrix& a, std::uint64_t seed = 0);

/// B with B*A = I, if one exists within the bound (graded when A is homogeneous).
std::optional<PolyMatrix> find_retraction(const PolyMatrix& a, const SolveOptions& opts = {});
/// B with A*B = I, if one exists within the bound.
std::optional<PolyMatrix> find_section(const PolyMatrix& a, const SolveOptions& opts = {});

/// Labels (tgt, src) making the single map a homogeneous degree-0 map.
std::optional<DegreeLabels> infer_map_labels(const PolyMatrix& a);

/// True when graded mode should be used for inputs that are (or are not) homogeneous.
bool use_graded(const SolveOptions& opts, bool homogeneous);

}  // namespace mfcat

#endif  // MFCAT_SOLVER_HPP
