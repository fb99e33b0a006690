#ifndef MFCAT_MF_HPP
#define MFCAT_MF_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mfcat/errors.hpp"
#include "mfcat/grading.hpp"
#include "mfcat/poly_matrix.hpp"
#include "mfcat/solver.hpp"

namespace mfcat {

/// A matrix factorization (rho1: P1 -> P0, rho0: P0 -> P1) of omega.
struct MFObject {
  RingPtr ring;
  Poly omega;
  PolyMatrix rho1;
  PolyMatrix rho0;
  std::optional<DegreeLabels> labels;

  std::size_t rank() const { return rho1.rows(); }

  /// Matrix equality; labels are ignored.
  friend bool operator==(const MFObject& a, const MFObject& b) {
    return same_ring(a.ring, b.ring) && a.omega == b.omega && a.rho1 == b.rho1 && a.rho0 == b.rho0;
  }
};

struct MFMorphism {
  MFObject source;
  MFObject target;
  PolyMatrix phi1;  // P1 -> Q1
  PolyMatrix phi0;  // P0 -> Q0

  friend bool operator==(const MFMorphism&, const MFMorphism&) = default;
};

/// Builds and validates an object.
MFObject mf_make(const RingPtr& ring, const Poly& omega, PolyMatrix rho1, PolyMatrix rho0,
                 std::optional<DegreeLabels> labels = std::nullopt);
MFObject mf_zero(const RingPtr& ring, const Poly& omega);
/// ([1],[omega]) when `unit_first`, else ([omega],[1]).
MFObject mf_trivial(const RingPtr& ring, const Poly& omega, bool unit_first);

/// Throws NotAFactorization, OmegaZeroDivisor, DimensionMismatch, RingMismatch,
/// or NotHomogeneous (for inconsistent stored labels).
void mf_validate(const MFObject& x);
void mfmor_validate(const MFMorphism& f);

MFMorphism mf_morphism(const MFObject& source, const MFObject& target, PolyMatrix phi1, PolyMatrix phi0);
MFMorphism mf_identity(const MFObject& x);
MFMorphism mf_zero_morphism(const MFObject& x, const MFObject& y);
/// psi after phi; ObjectMismatch unless phi.target == psi.source.
MFMorphism mf_compose(const MFMorphism& psi, const MFMorphism& phi);
MFMorphism mf_add(const MFMorphism& a, const MFMorphism& b);
MFMorphism mf_scale(const MFMorphism& a, const Poly& c);

MFObject mf_dsum(const MFObject& x, const MFObject& y);
MFObject mf_dsum(const std::vector<MFObject>& xs);

/// (rho1, rho0) -> (-rho0, -rho1).
MFObject mf_shift(const MFObject& x);
/// (phi1, phi0) -> (phi0, phi1).
MFMorphism mf_shift(const MFMorphism& f);

/// Mapping cone on Q (+) Sigma P.
MFObject mf_cone(const MFMorphism& f);
/// The canonical maps Y -> cone(f) and cone(f) -> Sigma X.
MFMorphism mf_cone_inclusion(const MFMorphism& f);
MFMorphism mf_cone_projection(const MFMorphism& f);

/// Generator degrees making both matrices homogeneous (rho1 of degree 0,
/// rho0 of degree deg omega); nullopt when no such grading exists.
std::optional<DegreeLabels> mf_infer_labels(const MFObject& x);
/// Stored labels, or inferred ones.
std::optional<DegreeLabels> mf_labels(const MFObject& x);

struct Homotopy {
  PolyMatrix s0;  // P0 -> Q1
  PolyMatrix s1;  // P1 -> Q0
};

struct HomotopyResult {
  Verdict verdict;
  std::optional<Homotopy> homotopy;
  int degree_bound = -1;
};

/// phi0 = q1 s0 + s1 rho0 and phi1 = q0 s1 + s0 rho1.
HomotopyResult mf_find_homotopy(const MFMorphism& f, const SolveOptions& opts = {});
Verdict mf_null_homotopic(const MFMorphism& f, const SolveOptions& opts = {});
Verdict mf_is_contractible(const MFObject& x, const SolveOptions& opts = {});

/// Splitting of trivial blocks: u0 * rho1 * u1_inv and u1 * rho0 * u0_inv are
/// block diagonal with `reduced` in the leading block followed by
/// `unit_blocks` copies of ([1],[omega]) and `omega_blocks` of ([omega],[1]).
struct Reduction {
  MFObject reduced;
  MFObject transformed;
  PolyMatrix u1, u0, u1_inv, u0_inv;
  std::size_t unit_blocks = 0;
  std::size_t omega_blocks = 0;
};

Reduction mf_reduce(const MFObject& x);

struct StableHomDim {
  std::size_t dim = 0;
  Certainty certainty = Certainty::proven;
  int degree_bound = 0;
};

/// Dimension of morphisms X -> Y modulo null-homotopic ones, up to degree
/// D = opts.max_degree (default 0). Graded: summed over morphism degrees <= D.
/// Bounded: entries of total degree <= D.
StableHomDim mf_stable_hom_dim(const MFObject& x, const MFObject& y, const SolveOptions& opts = {});

enum class BlockChoice { random, trivial, family };

struct GenerateOptions {
  std::size_t size = 2;
  std::size_t ops = 0;
  BlockChoice blocks = BlockChoice::random;
  int max_entry_degree = 4;
};

/// Direct sum of seed blocks scrambled by `ops` homogeneous elementary
/// transformations. Family blocks ([m],[omega/m]) exist when omega is a monomial
/// with a proper divisor m; otherwise requesting them raises UnsupportedOmega.
MFObject mf_generate(std::uint64_t seed, const RingPtr& ring, const Poly& omega, const GenerateOptions& opts = {});

/// Random morphism X -> Y of degree 0 (graded) built from a homotopy-free
/// solve; may be zero when no nonzero morphism exists in low degree.
MFMorphism mf_random_morphism(std::uint64_t seed, const MFObject& x, const MFObject& y, int degree = 0);

}  // namespace mfcat

#endif  // MFCAT_MF_HPP
