#ifndef MFCAT_HYPERSURFACE_HPP
#define MFCAT_HYPERSURFACE_HPP

#include <optional>

#include "mfcat/mf.hpp"
#include "mfcat/mon.hpp"

namespace mfcat {

/// The module M = coker(A mod omega) over R = S/(omega), with A stored over
/// the free ring S. Labels, when present, make A homogeneous of degree 0.
struct RModulePresentation {
  RingPtr ring;
  Poly omega;
  PolyMatrix A;
  std::optional<DegreeLabels> labels;

  std::size_t generators() const { return A.rows(); }
};

/// Errors: ModulusPresent, RingMismatch, OmegaZeroDivisor, DimensionMismatch,
/// NotHomogeneous (labels inconsistent with A).
void rmod_validate(const RModulePresentation& p);
RModulePresentation rmod_make(const Poly& omega, PolyMatrix A, std::optional<DegreeLabels> labels = std::nullopt);

/// Square presentation of the same module: zero columns dropped, then one
/// column omega*e_i appended per zero row while columns are short.
/// Errors: NonSquare (too few relations), NotMCM (too many).
RModulePresentation rmod_pad(const RModulePresentation& p);

/// (A, B) with A*B = B*A = omega*I for the padded A. Errors: NonSquare, NotMCM
/// (proven when the search bound covers every possible B).
MFObject eisenbud_mf(const RModulePresentation& p, const SolveOptions& opts = {});

/// g1 = padded A with companion B.
MonObject functor_T(const RModulePresentation& p, const SolveOptions& opts = {});

/// True iff both presentations have the same generators and the columns of
/// each lie in the span of the other's columns and omega.
Verdict presentation_equivalent(const RModulePresentation& p, const RModulePresentation& q,
                                const SolveOptions& opts = {});

/// Homs M -> M' over R modulo maps factoring through free R-modules, in
/// degrees <= opts.max_degree (default 0). Errors: NotMCM, OmegaMismatch.
StableHomDim r_stable_hom_dim(const RModulePresentation& p, const RModulePresentation& q,
                              const SolveOptions& opts = {});

struct TCompareReport {
  StableHomDim r;
  StableHomDim mon;
  bool equal = false;
};

/// r_stable_hom_dim(P, Q) against the stable hom dimension of F(T(P)), F(T(Q)).
TCompareReport t_compare(const RModulePresentation& p, const RModulePresentation& q, const SolveOptions& opts = {});

}  // namespace mfcat

#endif  // MFCAT_HYPERSURFACE_HPP
