#ifndef MFCAT_MON_HPP
#define MFCAT_MON_HPP

#include <cstdint>
#include <optional>
#include <tuple>

#include "mfcat/mf.hpp"

namespace mfcat {

/// An injective map g1: P1 -> P0 of free modules whose cokernel is killed by
/// omega, with its companion g0 (g1 g0 = omega I = g0 g1).
struct MonObject {
  RingPtr ring;
  Poly omega;
  PolyMatrix g1;
  PolyMatrix g0;
  std::optional<DegreeLabels> labels;

  std::size_t rank() const { return g1.rows(); }

  friend bool operator==(const MonObject& a, const MonObject& b) {
    return same_ring(a.ring, b.ring) && a.omega == b.omega && a.g1 == b.g1 && a.g0 == b.g0;
  }
};

struct MonMorphism {
  MonObject source;
  MonObject target;
  PolyMatrix phi1;
  PolyMatrix phi0;

  friend bool operator==(const MonMorphism&, const MonMorphism&) = default;
};

/// Checks injectivity, solves g1 X = omega I for the companion and verifies
/// X g1 = omega I. Errors: ModulusPresent, DimensionMismatch, NotInjective,
/// CokernelNotAnnihilated (certainty attached), CompanionAssertFailed.
MonObject mon_validate(const RingPtr& ring, const Poly& omega, const PolyMatrix& g1, const SolveOptions& opts = {});
/// Unchecked object whose companion is still unknown; conflation_validate
/// re-validates such terms.
MonObject mon_unchecked(const RingPtr& ring, const Poly& omega, const PolyMatrix& g1);

void monmor_validate(const MonMorphism& f);
MonMorphism mon_morphism(const MonObject& source, const MonObject& target, PolyMatrix phi1, PolyMatrix phi0);
MonMorphism mon_identity(const MonObject& x);
MonMorphism mon_zero_morphism(const MonObject& x, const MonObject& y);
MonMorphism mon_compose(const MonMorphism& psi, const MonMorphism& phi);
MonObject mon_dsum(const MonObject& x, const MonObject& y);

MFObject functor_F(const MonObject& m);
MFMorphism functor_F(const MonMorphism& f);
MonObject functor_U(const MFObject& x);
MonMorphism functor_U(const MFMorphism& f);

/// A certified kernel-cokernel pair X -> E -> Z. At each level i:
/// r_i iota_i = I, pi_i s_i = I, r_i s_i = 0 and iota_i r_i + s_i pi_i = I.
struct Conflation {
  MonMorphism inflation;
  MonMorphism deflation;
  PolyMatrix r1, r0;
  PolyMatrix s1, s0;

  const MonObject& left() const { return inflation.source; }
  const MonObject& middle() const { return inflation.target; }
  const MonObject& right() const { return deflation.target; }
};

/// Errors: TermInvalid (a term fails mon_validate), ObjectMismatch,
/// SquareFails, NotExact (level and reason; certainty attached).
Conflation conflation_validate(const MonMorphism& inflation, const MonMorphism& deflation,
                               const SolveOptions& opts = {});

struct Pushout {
  MonObject object;      // T (+) coker
  Conflation inflation;  // T -> object -> coker
  MonMorphism map;       // E -> object
};

/// Pushout of the conflation's inflation along theta: X -> T.
Pushout pushout_inflation(const Conflation& c, const MonMorphism& theta);

struct Pullback {
  MonObject object;      // ker (+) W
  Conflation deflation;  // ker -> object -> W
  MonMorphism map;       // object -> E
};

/// Pullback of the conflation's deflation along theta: W -> Z.
Pullback pullback_deflation(const Conflation& c, const MonMorphism& theta);

/// The composite of inflations X -> Y -> E, certified with its cokernel.
Conflation compose_inflations(const Conflation& first, const Conflation& second);

/// K -> (P1 (+) P0, diag(I, omega I)) -> M.
Conflation projective_envelope(const MonObject& m);
/// M -> (Q1 (+) Q0, diag(omega I, I)) -> C with Q_i = S^(rank + pad).
Conflation injective_envelope(const MonObject& m, std::size_t pad = 0, const SolveOptions& opts = {});

/// Direct summand of sums of (P, id) and (P, omega): the reduced F(M) is zero.
bool is_proj_inj(const MonObject& m);
/// Vanishing in the stable category: F(f) is null-homotopic.
Verdict stable_zero(const MonMorphism& f, const SolveOptions& opts = {});

/// Some psi: T -> E with deflation * psi = f, if one exists within the bound.
std::optional<MonMorphism> mon_lift(const MonMorphism& deflation, const MonMorphism& f, const SolveOptions& opts = {});
/// Some psi: E -> T with psi * inflation = f, if one exists within the bound.
std::optional<MonMorphism> mon_extend(const MonMorphism& inflation, const MonMorphism& f,
                                      const SolveOptions& opts = {});

/// functor_U of a generated matrix factorization, re-validated.
MonObject mon_generate(std::uint64_t seed, const RingPtr& ring, const Poly& omega, const GenerateOptions& opts = {});
/// A certified extension X -> E -> Z with E = [[x, x a + b z], [0, z]] in
/// disguised coordinates.
Conflation mon_random_extension(std::uint64_t seed, const MonObject& x, const MonObject& z);
MonMorphism mon_random_morphism(std::uint64_t seed, const MonObject& x, const MonObject& y, int degree = 0);

}  // namespace mfcat

#endif  // MFCAT_MON_HPP
