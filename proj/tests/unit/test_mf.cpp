#include <functional>
#include <random>

#include "doctest.h"
#include "mfcat/mf.hpp"
#include "support.hpp"

using namespace mfcat;
using testing::M;
using testing::P;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Validation;
}

MFObject node(const RingPtr& r) { return mf_make(r, P(r, "x*y"), M(r, {{"x"}}), M(r, {{"y"}})); }

// Sample objects over Q[x], Q[x,y] and F5[x,y].
std::vector<MFObject> samples(std::size_t count, std::uint64_t seed) {
  std::vector<std::pair<RingPtr, std::string>> bases = {
      {testing::ring("Q", {"x"}), "x^2"}, {testing::ring("Q", {"x", "y"}), "x*y"},
      {testing::ring("F5", {"x", "y"}), "x^2*y"}, {testing::ring("Q", {"x"}), "x^3"}};
  std::vector<MFObject> out;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& [r, w] = bases[k % bases.size()];
    GenerateOptions g;
    g.size = 1 + (k % 3);
    g.ops = k % 5;
    out.push_back(mf_generate(seed + k, r, P(r, w), g));
  }
  return out;
}

}  // namespace

TEST_CASE("mf_validate examples") {
  auto r = testing::ring("Q", {"x", "y"});
  CHECK_NOTHROW(node(r));
  auto qx = testing::ring("Q", {"x"});
  CHECK_NOTHROW(mf_make(qx, P(qx, "x"), M(qx, {{"1"}}), M(qx, {{"x"}})));
  CHECK(kind_of([&] { mf_make(r, P(r, "x^2"), M(r, {{"x"}}), M(r, {{"y"}})); }) == ErrorKind::NotAFactorization);
  CHECK(kind_of([&] { mf_make(r, P(r, "x*y"), M(r, {{"x", "y"}}), M(r, {{"y"}})); }) ==
        ErrorKind::DimensionMismatch);
  auto quo = testing::quotient("Q", {"x", "y"}, "x*y");
  CHECK(kind_of([&] { mf_make(quo, P(quo, "x"), M(quo, {{"x"}}), M(quo, {{"1"}})); }) ==
        ErrorKind::OmegaZeroDivisor);
  MFObject bad = node(r);
  bad.labels = DegreeLabels{{0}, {0}};
  CHECK(kind_of([&] { mf_validate(bad); }) == ErrorKind::NotHomogeneous);
}

TEST_CASE("mfmor_validate examples") {
  auto r = testing::ring("Q", {"x", "y"});
  MFObject x = node(r);
  CHECK_NOTHROW(mfmor_validate(mf_identity(x)));
  CHECK_NOTHROW(mf_morphism(x, x, M(r, {{"y"}}), M(r, {{"y"}})));
  CHECK(kind_of([&] { mf_morphism(x, x, M(r, {{"1"}}), M(r, {{"0"}})); }) == ErrorKind::SquareFails);
  CHECK(kind_of([&] { mf_morphism(x, x, M(r, {{"1", "0"}}), M(r, {{"1"}})); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("mf_compose examples") {
  auto r = testing::ring("Q", {"x", "y"});
  MFObject x = node(r);
  auto f = mf_morphism(x, x, M(r, {{"y"}}), M(r, {{"y"}}));
  CHECK(mf_compose(mf_identity(x), f) == f);
  auto g = mf_morphism(x, x, M(r, {{"x"}}), M(r, {{"x"}}));
  auto gf = mf_compose(g, f);
  CHECK(gf.phi1 == M(r, {{"x*y"}}));
  CHECK(gf.phi0 == M(r, {{"x*y"}}));
  MFObject other = mf_trivial(r, P(r, "x*y"), true);
  CHECK(kind_of([&] { mf_compose(mf_identity(other), f); }) == ErrorKind::ObjectMismatch);
}

TEST_CASE("mf_dsum examples") {
  auto r = testing::ring("Q", {"x"});
  Poly w = P(r, "x");
  MFObject a = mf_trivial(r, w, true), b = mf_trivial(r, w, false);
  MFObject s = mf_dsum(a, b);
  CHECK(s.rank() == 2);
  CHECK(s.rho1 == M(r, {{"1", "0"}, {"0", "x"}}));
  CHECK(mf_dsum(a, mf_zero(r, w)) == a);
  CHECK(mf_dsum(s, a).rank() == s.rank() + a.rank());
  auto r2 = testing::ring("F5", {"x"});
  CHECK(kind_of([&] { mf_dsum(a, mf_trivial(r2, P(r2, "x"), true)); }) == ErrorKind::RingMismatch);
  CHECK(kind_of([&] { mf_dsum(a, mf_trivial(r, P(r, "x^2"), true)); }) == ErrorKind::OmegaMismatch);
}

TEST_CASE("mf_shift examples") {
  auto r = testing::ring("Q", {"x", "y"});
  MFObject x = node(r);
  MFObject sx = mf_shift(x);
  CHECK(sx.rho1 == M(r, {{"-y"}}));
  CHECK(sx.rho0 == M(r, {{"-x"}}));
  CHECK(mf_shift(sx) == x);
  auto qx = testing::ring("Q", {"x"});
  MFObject t = mf_shift(mf_trivial(qx, P(qx, "x"), true));
  CHECK(t.rho1 == M(qx, {{"-x"}}));
  CHECK(t.rho0 == M(qx, {{"-1"}}));
  CHECK(mf_reduce(t).reduced.rank() == 0);
}

TEST_CASE("mf_cone examples") {
  auto r = testing::ring("Q", {"x", "y"});
  MFObject x = node(r);
  MFObject c = mf_cone(mf_identity(x));
  CHECK(c.rho1 == M(r, {{"x", "1"}, {"0", "-y"}}));
  CHECK(c.rho0 == M(r, {{"y", "1"}, {"0", "-x"}}));
  CHECK_NOTHROW(mf_validate(c));
  MFObject y = mf_trivial(r, P(r, "x*y"), false);
  CHECK(mf_cone(mf_zero_morphism(x, y)) == mf_dsum(y, mf_shift(x)));
}

TEST_CASE("mf_null_homotopic examples") {
  auto r = testing::ring("Q", {"x"});
  MFObject x = mf_make(r, P(r, "x^2"), M(r, {{"x"}}), M(r, {{"x"}}));
  CHECK(mf_null_homotopic(mf_zero_morphism(x, x)).value);
  SolveOptions graded;
  graded.mode = Mode::graded;
  Verdict v = mf_null_homotopic(mf_identity(x), graded);
  CHECK_FALSE(v.value);
  CHECK(v.certainty == Certainty::proven);
  auto f = mf_morphism(x, x, M(r, {{"x"}}), M(r, {{"x"}}));
  auto h = mf_find_homotopy(f, graded);
  CHECK(h.verdict.value);
  REQUIRE(h.homotopy);
  CHECK(x.rho1 * h.homotopy->s0 + h.homotopy->s1 * x.rho0 == f.phi0);
  CHECK(x.rho0 * h.homotopy->s1 + h.homotopy->s0 * x.rho1 == f.phi1);
  SolveOptions bounded;
  bounded.mode = Mode::bounded;
  bounded.max_degree = 3;
  bounded.degree_cap = 3;
  v = mf_null_homotopic(mf_identity(x), bounded);
  CHECK_FALSE(v.value);
  CHECK(v.certainty == Certainty::bounded);
}

TEST_CASE("graded mode rejects inhomogeneous input") {
  auto r = testing::ring("Q", {"x"});
  MFObject x = mf_make(r, P(r, "x^2 + x^3"), M(r, {{"x"}}), M(r, {{"x + x^2"}}));
  SolveOptions graded;
  graded.mode = Mode::graded;
  CHECK(kind_of([&] { mf_is_contractible(x, graded); }) == ErrorKind::NotHomogeneous);
  CHECK(mf_is_contractible(x).certainty == Certainty::bounded);
}

TEST_CASE("mf_reduce examples") {
  auto qx = testing::ring("Q", {"x"});
  CHECK(mf_reduce(mf_trivial(qx, P(qx, "x"), true)).reduced.rank() == 0);
  auto r = testing::ring("Q", {"x", "y"});
  MFObject x = node(r);
  Reduction red = mf_reduce(x);
  CHECK(red.reduced == x);
  MFObject sum = mf_dsum(mf_trivial(r, P(r, "x*y"), true), x);
  red = mf_reduce(sum);
  CHECK(red.reduced == x);
  CHECK(red.unit_blocks == 1);
}

TEST_CASE("mf_is_contractible examples") {
  auto qx = testing::ring("Q", {"x"});
  CHECK(mf_is_contractible(mf_trivial(qx, P(qx, "x"), true)).value);
  auto r = testing::ring("Q", {"x", "y"});
  Verdict v = mf_is_contractible(node(r));
  CHECK_FALSE(v.value);
  CHECK(v.certainty == Certainty::proven);
  CHECK(mf_is_contractible(mf_cone(mf_identity(node(r)))).value);
}

TEST_CASE("mf_stable_hom_dim examples") {
  auto qx = testing::ring("Q", {"x"});
  MFObject k = mf_make(qx, P(qx, "x^2"), M(qx, {{"x"}}), M(qx, {{"x"}}));
  SolveOptions d0;
  d0.max_degree = 0;
  CHECK(mf_stable_hom_dim(k, k, d0).dim == 1);
  CHECK(mf_stable_hom_dim(mf_trivial(qx, P(qx, "x^2"), true), k, d0).dim == 0);
  CHECK(mf_stable_hom_dim(k, mf_trivial(qx, P(qx, "x^2"), false), d0).dim == 0);
  auto r = testing::ring("Q", {"x", "y"});
  CHECK(mf_stable_hom_dim(node(r), node(r), d0).dim == 1);
  SolveOptions bounded = d0;
  bounded.mode = Mode::bounded;
  auto b = mf_stable_hom_dim(k, k, bounded);
  CHECK(b.dim == 1);
  CHECK(b.certainty == Certainty::bounded);
}

TEST_CASE("mf_generate examples") {
  auto qx = testing::ring("Q", {"x"});
  GenerateOptions g;
  g.size = 2;
  g.ops = 0;
  MFObject x = mf_generate(1, qx, P(qx, "x"), g);
  CHECK(x == mf_dsum(mf_trivial(qx, P(qx, "x"), true), mf_trivial(qx, P(qx, "x"), false)));
  g.size = 1;
  g.blocks = BlockChoice::family;
  x = mf_generate(1, qx, P(qx, "x^2"), g);
  CHECK(x.rho1 == M(qx, {{"x"}}));
  CHECK(x.rho0 == M(qx, {{"x"}}));
  CHECK(kind_of([&] { mf_generate(1, qx, P(qx, "x"), g); }) == ErrorKind::UnsupportedOmega);
}

TEST_CASE("property: generated objects validate, shift is an involution, cones validate") {
  auto objs = samples(40, 100);
  for (std::size_t k = 0; k < objs.size(); ++k) {
    const MFObject& x = objs[k];
    CHECK_NOTHROW(mf_validate(x));
    CHECK(mf_shift(mf_shift(x)) == x);
    const MFObject& y = objs[(k + 4) % objs.size()];
    if (!same_ring(x.ring, y.ring) || x.omega != y.omega) continue;
    MFMorphism f = mf_random_morphism(k, x, y);
    CHECK_NOTHROW(mf_validate(mf_cone(f)));
    CHECK_NOTHROW(mfmor_validate(mf_cone_inclusion(f)));
    CHECK_NOTHROW(mfmor_validate(mf_cone_projection(f)));
  }
}

TEST_CASE("property: null-homotopic maps form a two-sided ideal") {
  auto objs = samples(24, 300);
  int tested = 0;
  for (std::size_t k = 0; k + 8 < objs.size(); ++k) {
    const MFObject& x = objs[k];
    const MFObject& y = objs[k + 4];
    const MFObject& z = objs[k + 8];
    MFMorphism f = mf_random_morphism(k, x, y);
    if (!mf_null_homotopic(f).value) continue;
    MFMorphism g = mf_random_morphism(k + 1, y, z);
    MFMorphism h = mf_random_morphism(k + 2, z, x);
    CHECK(mf_null_homotopic(mf_compose(g, f)).value);
    CHECK(mf_null_homotopic(mf_compose(f, h)).value);
    ++tested;
  }
  CHECK(tested > 3);
}

TEST_CASE("property: reduction certificates, contractibility, stable dims") {
  auto objs = samples(24, 500);
  SolveOptions d1;
  d1.max_degree = 1;
  for (std::size_t k = 0; k < objs.size(); ++k) {
    const MFObject& x = objs[k];
    Reduction red = mf_reduce(x);
    const std::size_t n = x.rank();
    CHECK(red.u0 * red.u0_inv == PolyMatrix::identity(x.ring, n));
    CHECK(red.u1 * red.u1_inv == PolyMatrix::identity(x.ring, n));
    CHECK(red.u0 * x.rho1 * red.u1_inv == red.transformed.rho1);
    CHECK(red.u1 * x.rho0 * red.u0_inv == red.transformed.rho0);
    const std::size_t r = red.reduced.rank();
    for (std::size_t b = 0; b < red.unit_blocks + red.omega_blocks; ++b) {
      const bool unit = b < red.unit_blocks;
      CHECK(red.transformed.rho1(r + b, r + b) == (unit ? Poly::constant(x.ring, 1) : x.omega));
    }
    CHECK_NOTHROW(mf_validate(red.reduced));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        CHECK_FALSE(red.reduced.rho1(i, j).is_unit_constant());
        CHECK_FALSE(red.reduced.rho0(i, j).is_unit_constant());
      }
    CHECK(mf_is_contractible(x).value == (r == 0));
    const MFObject& y = objs[(k + 4) % objs.size()];
    if (same_ring(x.ring, y.ring) && x.omega == y.omega)
      CHECK(mf_stable_hom_dim(x, y, d1).dim == mf_stable_hom_dim(red.reduced, mf_reduce(y).reduced, d1).dim);
  }
}

// Componentwise split sequence X -> E -> Z with e1 = [[x1, x1 a - c z1], [0, z1]],
// e0 = [[x0, x0 c - a z0], [0, z0]].
TEST_CASE("property: trivial objects lift through and extend along split sequences") {
  auto r = testing::ring("Q", {"x", "y"});
  Poly w = P(r, "x*y");
  std::mt19937_64 rng(9);
  GenerateOptions g;
  g.size = 2;
  g.ops = 2;
  for (int trial = 0; trial < 6; ++trial) {
    MFObject x = mf_generate(10 + trial, r, w, g), z = mf_generate(20 + trial, r, w, g);
    const std::size_t n = x.rank(), m = z.rank();
    PolyMatrix a(r, n, m), c(r, n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        a(i, j) = Poly::constant(r, Scalar(static_cast<long>(rng() % 3)));
        c(i, j) = Poly::constant(r, Scalar(static_cast<long>(rng() % 3)));
      }
    MFObject e{r, w, block2x2(x.rho1, x.rho1 * a - c * z.rho1, PolyMatrix(r, m, n), z.rho1),
               block2x2(x.rho0, x.rho0 * c - a * z.rho0, PolyMatrix(r, m, n), z.rho0), std::nullopt};
    REQUIRE_NOTHROW(mf_validate(e));
    PolyMatrix pi = hstack(PolyMatrix(r, m, n), PolyMatrix::identity(r, m));
    PolyMatrix iota = vstack(PolyMatrix::identity(r, n), PolyMatrix(r, m, n));
    for (bool unit : {true, false}) {
      MFObject t = mf_dsum(mf_trivial(r, w, unit), mf_trivial(r, w, !unit));
      // lift t -> z through e -> z
      MFMorphism f = mf_random_morphism(trial, t, z);
      LinearSystem lift(r);
      auto p1 = lift.add_bounded("psi1", n + m, 2, 2);
      auto p0 = lift.add_bounded("psi0", n + m, 2, 2);
      lift.add_equation({MatTerm{p1, e.rho1}, MatTerm{p0, std::nullopt, -t.rho1}}, PolyMatrix(r, n + m, 2));
      lift.add_equation({MatTerm{p1, std::nullopt, t.rho0}, MatTerm{p0, -e.rho0}}, PolyMatrix(r, n + m, 2));
      lift.add_equation({MatTerm{p1, pi}}, f.phi1);
      lift.add_equation({MatTerm{p0, pi}}, f.phi0);
      CHECK(solve_bounded(lift).solution.has_value());
      // extend x -> t along x -> e
      MFMorphism h = mf_random_morphism(trial + 7, x, t);
      LinearSystem ext(r);
      auto q1 = ext.add_bounded("chi1", 2, n + m, 2);
      auto q0 = ext.add_bounded("chi0", 2, n + m, 2);
      ext.add_equation({MatTerm{q1, t.rho1}, MatTerm{q0, std::nullopt, -e.rho1}}, PolyMatrix(r, 2, n + m));
      ext.add_equation({MatTerm{q1, std::nullopt, e.rho0}, MatTerm{q0, -t.rho0}}, PolyMatrix(r, 2, n + m));
      ext.add_equation({MatTerm{q1, std::nullopt, iota}}, h.phi1);
      ext.add_equation({MatTerm{q0, std::nullopt, iota}}, h.phi0);
      CHECK(solve_bounded(ext).solution.has_value());
    }
  }
}
