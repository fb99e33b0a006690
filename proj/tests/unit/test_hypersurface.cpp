#include <algorithm>
#include <functional>

#include "doctest.h"
#include "mfcat/hypersurface.hpp"
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

SolveOptions graded(int d = 0) {
  SolveOptions o;
  o.mode = Mode::graded;
  o.max_degree = d;
  return o;
}

RModulePresentation pres(const RingPtr& r, const std::string& omega, const std::vector<std::vector<std::string>>& a) {
  return rmod_make(P(r, omega), M(r, a));
}

std::string power(const std::string& x, int e) { return e == 0 ? "1" : x + "^" + std::to_string(e); }

}  // namespace

TEST_CASE("eisenbud_mf: residue field of k[x]/(x^2)") {
  auto r = testing::ring("Q", {"x"});
  MFObject x = eisenbud_mf(pres(r, "x^2", {{"x"}}));
  CHECK(x.rho1 == M(r, {{"x"}}));
  CHECK(x.rho0 == M(r, {{"x"}}));
  CHECK_NOTHROW(mf_validate(x));
}

TEST_CASE("eisenbud_mf: a zero relation becomes a trivial block") {
  auto r = testing::ring("Q", {"x", "y"});
  MFObject x = eisenbud_mf(pres(r, "x*y", {{"0"}}));
  CHECK(x.rho1 == M(r, {{"x*y"}}));
  CHECK(x.rho0 == M(r, {{"1"}}));
}

TEST_CASE("eisenbud_mf: padding keeps existing relations and fills zero rows") {
  auto r = testing::ring("Q", {"x"});
  MFObject x = eisenbud_mf(pres(r, "x^2", {{"x"}, {"0"}}));
  CHECK(x.rho1 == M(r, {{"x", "0"}, {"0", "x^2"}}));
  CHECK(x.rho0 == M(r, {{"x", "0"}, {"0", "1"}}));
}

TEST_CASE("eisenbud_mf: residue field of k[x,y]/(xy) is not MCM-presented") {
  auto r = testing::ring("Q", {"x", "y"});
  auto p = pres(r, "x*y", {{"x", "y"}});
  try {
    eisenbud_mf(p);
    FAIL("expected NotMCM");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMCM);
    CHECK(e.certainty() == Certainty::proven);
  }
  // [y; 0] solves A*B = omega but B*A is not omega*I.
  PolyMatrix b = M(r, {{"y"}, {"0"}});
  CHECK(p.A * b == M(r, {{"x*y"}}));
  CHECK(b * p.A != PolyMatrix::scalar(P(r, "x*y"), 2));
}

TEST_CASE("eisenbud_mf: non-square and degenerate inputs") {
  auto r = testing::ring("Q", {"x", "y"});
  CHECK(kind_of([&] { eisenbud_mf(pres(r, "x*y", {{"x"}, {"y"}})); }) == ErrorKind::NonSquare);
  CHECK(kind_of([&] { eisenbud_mf(pres(r, "x*y", {{"x", "y"}, {"x", "y"}})); }) == ErrorKind::NotMCM);
  CHECK(kind_of([&] { eisenbud_mf(pres(r, "x*y", {{"x^2"}})); }) == ErrorKind::NotMCM);
  CHECK(kind_of([&] { rmod_make(P(r, "0"), M(r, {{"x"}})); }) == ErrorKind::ZeroInput);
  auto q = testing::quotient("Q", {"x"}, "x^2");
  CHECK(kind_of([&] { rmod_make(P(q, "x"), M(q, {{"x"}})); }) == ErrorKind::ModulusPresent);
  CHECK(kind_of([&] { rmod_make(P(r, "x*y"), M(r, {{"x"}}), DegreeLabels{{0}, {0}}); }) == ErrorKind::NotHomogeneous);
}

TEST_CASE("eisenbud_mf: bounded search reports a proof when the bound is complete") {
  auto r = testing::ring("Q", {"x", "y"});
  SolveOptions o;
  o.mode = Mode::bounded;
  auto p = pres(r, "x*y", {{"x+y^2"}});
  try {
    eisenbud_mf(p, o);
    FAIL("expected NotMCM");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMCM);
    CHECK(e.certainty() == Certainty::proven);
  }
  MFObject ok = eisenbud_mf(pres(r, "x*y", {{"x"}}), o);
  CHECK(ok.rho0 == M(r, {{"y"}}));
}

TEST_CASE("functor_T: examples") {
  auto q = testing::ring("Q", {"x"});
  MonObject k = functor_T(pres(q, "x^2", {{"x"}}));
  CHECK(k.g1 == M(q, {{"x"}}));
  CHECK(k.g0 == M(q, {{"x"}}));
  CHECK_FALSE(is_proj_inj(k));

  auto r = testing::ring("Q", {"x", "y"});
  MonObject free = functor_T(pres(r, "x*y", {{"0"}}));
  CHECK(free.g1 == M(r, {{"x*y"}}));
  CHECK(is_proj_inj(free));

  MonObject kx = functor_T(pres(r, "x*y", {{"x"}}));
  CHECK(kx.g1 == M(r, {{"x"}}));
  CHECK(kx.g0 == M(r, {{"y"}}));
}

TEST_CASE("presentation_equivalent: examples") {
  auto r = testing::ring("Q", {"x", "y"});
  auto a = pres(r, "x*y", {{"x"}});
  CHECK(presentation_equivalent(a, pres(r, "x*y", {{"x", "x*y"}})).value);
  CHECK(presentation_equivalent(a, pres(r, "x*y", {{"x+x*y"}})).value);
  CHECK(presentation_equivalent(a, pres(r, "x*y", {{"x*(1+y)"}}), SolveOptions{Mode::bounded}).value);
  Verdict v = presentation_equivalent(a, pres(r, "x*y", {{"y"}}));
  CHECK_FALSE(v.value);
  CHECK(v.certainty == Certainty::proven);
  CHECK_FALSE(presentation_equivalent(a, pres(r, "x*y", {{"x"}, {"0"}})).value);
  CHECK(presentation_equivalent(pres(r, "x*y", {{"0"}}), pres(r, "x*y", {{"x*y"}})).value);
}

TEST_CASE("r_stable_hom_dim: examples") {
  auto q = testing::ring("Q", {"x"});
  auto k = pres(q, "x^2", {{"x"}});
  auto free = pres(q, "x^2", {{"0"}});
  StableHomDim d = r_stable_hom_dim(k, k, graded(0));
  CHECK(d.dim == 1);
  CHECK(d.certainty == Certainty::proven);
  CHECK(r_stable_hom_dim(k, free, graded(2)).dim == 0);
  CHECK(r_stable_hom_dim(free, k, graded(2)).dim == 0);

  auto r = testing::ring("Q", {"x", "y"});
  auto kx = pres(r, "x*y", {{"x"}});
  auto ky = pres(r, "x*y", {{"y"}});
  CHECK(r_stable_hom_dim(kx, kx, graded(0)).dim == 1);
  CHECK(r_stable_hom_dim(kx, ky, graded(0)).dim == 0);
  CHECK(kind_of([&] { r_stable_hom_dim(kx, pres(r, "x*y", {{"x", "y"}})); }) == ErrorKind::NotMCM);
  CHECK(kind_of([&] { r_stable_hom_dim(kx, pres(r, "x^2", {{"x"}})); }) == ErrorKind::OmegaMismatch);
}

TEST_CASE("t_compare: examples") {
  auto q = testing::ring("Q", {"x"});
  auto k = pres(q, "x^2", {{"x"}});
  TCompareReport rep = t_compare(k, k, graded(0));
  CHECK(rep.r.dim == 1);
  CHECK(rep.mon.dim == 1);
  CHECK(rep.equal);
  TCompareReport free = t_compare(pres(q, "x^2", {{"0"}}), k, graded(1));
  CHECK(free.r.dim == 0);
  CHECK(free.mon.dim == 0);
  CHECK(free.equal);
}

TEST_CASE("property: cyclic modules over k[x]/(x^n) match the valuation count") {
  // coker(x^a) -> coker(x^b) over k[x]/(x^n): the degree-d map x^d exists iff
  // d + a >= min(b, n), and factors through a free module iff d >= min(b, n - a).
  for (const char* field : {"Q", "F3"}) {
    auto r = testing::ring(field, {"x"});
    for (int n = 2; n <= 4; ++n)
      for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
          for (int D = 0; D <= 3; ++D) {
            std::size_t expected = 0;
            for (int d = 0; d <= D; ++d)
              if (d + a >= std::min(b, n) && d < std::min(b, n - a)) ++expected;
            auto pa = pres(r, power("x", n), {{power("x", a)}});
            auto pb = pres(r, power("x", n), {{power("x", b)}});
            CAPTURE(field);
            CAPTURE(n);
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(D);
            TCompareReport rep = t_compare(pa, pb, graded(D));
            CHECK(rep.r.dim == expected);
            CHECK(rep.equal);
          }
  }
}

TEST_CASE("property: generated MCM presentations") {
  auto r = testing::ring("F5", {"x", "y"});
  Poly w = P(r, "x^2*y");
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    GenerateOptions g;
    g.size = 1 + seed % 3;
    g.ops = seed % 4;
    g.blocks = seed % 2 ? BlockChoice::family : BlockChoice::random;
    MFObject x = mf_generate(seed, r, w, g);
    RModulePresentation p{r, w, x.rho1, std::nullopt};
    CAPTURE(seed);

    MFObject e = eisenbud_mf(p);
    CHECK_NOTHROW(mf_validate(e));
    CHECK(e.rho1 * e.rho0 == PolyMatrix::scalar(w, e.rank()));
    CHECK(e.rho0 * e.rho1 == PolyMatrix::scalar(w, e.rank()));
    CHECK(presentation_equivalent(p, RModulePresentation{r, w, e.rho1, std::nullopt}).value);

    // Swapping the factors recovers A.
    MFObject swapped = eisenbud_mf(RModulePresentation{r, w, e.rho0, std::nullopt});
    CHECK(swapped.rho0 == e.rho1);

    MonObject t = functor_T(p);
    CHECK_NOTHROW(mon_validate(r, w, t.g1));
    CHECK(is_proj_inj(t) == mf_is_contractible(e).value);

    RModulePresentation free{r, w, PolyMatrix(r, g.size, g.size), std::nullopt};
    CHECK(is_proj_inj(functor_T(free)));
    CHECK(t_compare(free, p, graded(1)).equal);
    CHECK(t_compare(p, free, graded(1)).r.dim == 0);
  }
}

TEST_CASE("property: full faithfulness on small catalogs") {
  auto r = testing::ring("Q", {"x", "y"});
  std::vector<RModulePresentation> cat = {pres(r, "x*y", {{"x"}}), pres(r, "x*y", {{"y"}}),
                                          pres(r, "x*y", {{"x", "0"}, {"0", "y"}}), pres(r, "x*y", {{"0"}})};
  for (const auto& a : cat)
    for (const auto& b : cat)
      for (int D : {0, 1, 2}) {
        TCompareReport rep = t_compare(a, b, graded(D));
        CHECK(rep.equal);
        CHECK(rep.r.certainty == Certainty::proven);
      }
  CHECK(t_compare(cat[2], cat[2], graded(0)).r.dim == 2);
  CHECK(t_compare(cat[0], cat[2], graded(0)).r.dim == 1);
}
