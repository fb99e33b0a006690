#ifndef MFCAT_GORENSTEIN_HPP
#define MFCAT_GORENSTEIN_HPP

#include <optional>
#include <vector>

#include "mfcat/mf.hpp"
#include "mfcat/mon.hpp"

namespace mfcat {

/// The module coker(rho1) over S = S0/(f), presented by a matrix
/// factorization (rho1, rho0) of f over the free ring S0.
struct GPModule {
  RingPtr ambient;
  Poly f;
  MFObject presentation;

  std::size_t rank() const { return presentation.rank(); }
  const PolyMatrix& rho1() const { return presentation.rho1; }

  friend bool operator==(const GPModule& a, const GPModule& b) {
    return same_ring(a.ambient, b.ambient) && a.f == b.f && a.presentation == b.presentation;
  }
};

/// A map of cokernels given on generators by v, with witness u:
/// v * rho1 = sigma1 * u where sigma1 presents the target.
struct GPMorphism {
  GPModule source;
  GPModule target;
  PolyMatrix v;
  PolyMatrix u;

  friend bool operator==(const GPMorphism&, const GPMorphism&) = default;
};

GPModule gp_make(const MFObject& presentation);
/// Free module of rank n: n copies of ([f], [1]).
GPModule gp_free(const RingPtr& ambient, const Poly& f, std::size_t n);
/// Errors: ModulusPresent, RingMismatch, NotAFactorization.
void gp_validate(const GPModule& g);

/// Solves for the witness when it is not given. Errors: SquareFails.
GPMorphism gp_morphism(const GPModule& source, const GPModule& target, PolyMatrix v,
                       std::optional<PolyMatrix> u = std::nullopt, const SolveOptions& opts = {});
void gpmor_validate(const GPMorphism& f);
GPMorphism gp_identity(const GPModule& g);
GPMorphism gp_zero(const GPModule& g, const GPModule& h);
GPMorphism gp_scale(const GPMorphism& a, const Poly& c);
GPMorphism gp_add(const GPMorphism& a, const GPMorphism& b);
/// psi after phi, with entries of v reduced modulo f.
GPMorphism gp_compose(const GPMorphism& psi, const GPMorphism& phi);
/// Reduces v modulo f and adjusts the witness.
GPMorphism gp_normalize(const GPMorphism& a);

/// True iff a.v - b.v = sigma1 * w (+ f * z) for some w; proven in graded mode.
Verdict gp_equal(const GPMorphism& a, const GPMorphism& b, const SolveOptions& opts = {});

struct GPHomBasis {
  std::vector<GPMorphism> basis;
  Certainty certainty = Certainty::proven;
};

/// Field basis of morphisms G -> H of degree <= opts.max_degree (default 0)
/// modulo those equal to zero.
GPHomBasis gp_hom_basis(const GPModule& g, const GPModule& h, const SolveOptions& opts = {});

/// A pair g1: G1 -> G0, g0: G0 -> G1 with both composites equal to omega.
struct MFGObject {
  RingPtr ambient;
  Poly f;
  Poly omega;
  GPMorphism g1;
  GPMorphism g0;

  const GPModule& first() const { return g1.source; }
  const GPModule& second() const { return g1.target; }
};

/// g1: G1 -> G0 together with its certified companion.
struct MonGObject {
  RingPtr ambient;
  Poly f;
  Poly omega;
  GPMorphism g1;
  GPMorphism g0;

  const GPModule& first() const { return g1.source; }
  const GPModule& second() const { return g1.target; }
};

struct MFGMorphism {
  MFGObject source;
  MFGObject target;
  GPMorphism phi1;
  GPMorphism phi0;
};

struct MonGMorphism {
  MonGObject source;
  MonGObject target;
  GPMorphism phi1;
  GPMorphism phi0;
};

/// Errors: ObjectMismatch, OmegaZeroDivisor (omega on S0/(f)),
/// NotAFactorization (certainty attached).
void mfg_validate(const MFGObject& x, const SolveOptions& opts = {});
MFGObject mfg_make(const Poly& omega, const GPMorphism& g1, const GPMorphism& g0, const SolveOptions& opts = {});
/// An object over a quotient ring S0/(f) lifted through free presentations.
MFGObject mfg_from_mf(const MFObject& x);

/// Solves for the companion. Errors: CokernelNotAnnihilated, NotMono,
/// OmegaZeroDivisor.
MonGObject mong_validate(const RingPtr& ambient, const Poly& f, const Poly& omega, const GPMorphism& g1,
                         const SolveOptions& opts = {});
/// A free-ring object over the quotient S0/(f), lifted through free presentations.
MonGObject mong_from_mon(const MonObject& m, const Poly& f);

/// Errors: SquareFails (certainty attached).
MFGMorphism mfg_morphism(const MFGObject& source, const MFGObject& target, const GPMorphism& phi1,
                         const GPMorphism& phi0, const SolveOptions& opts = {});
MonGMorphism mong_morphism(const MonGObject& source, const MonGObject& target, const GPMorphism& phi1,
                           const GPMorphism& phi0, const SolveOptions& opts = {});

MFGObject functor_F_g(const MonGObject& m);
MonGObject functor_U_g(const MFGObject& x);
/// Re-validates, including the second square.
MFGMorphism functor_F_g(const MonGMorphism& f, const SolveOptions& opts = {});
MonGMorphism functor_U_g(const MFGMorphism& f);

/// Labels for both modules making g1 of degree 0 and g0 of degree deg omega.
struct MFGLabels {
  DegreeLabels first;
  DegreeLabels second;
};
std::optional<MFGLabels> mfg_labels(const MFGObject& x);

/// Morphisms X -> Y modulo null-homotopic ones and maps equal to zero, in
/// degrees <= opts.max_degree (default 0).
StableHomDim mfg_stable_hom_dim(const MFGObject& x, const MFGObject& y, const SolveOptions& opts = {});

}  // namespace mfcat

#endif  // MFCAT_GORENSTEIN_HPP
