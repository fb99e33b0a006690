#include <benchmark/benchmark.h>

#include "mfcat/hypersurface.hpp"
#include "mfcat/mf.hpp"
#include "mfcat/mon.hpp"
#include "mfcat/solver.hpp"

using namespace mfcat;

namespace {

RingPtr qxy() {
  static RingPtr r = RingSpec::make(FieldSpec::rationals(), {"x", "y"});
  return r;
}

MFObject sample(std::size_t size, std::uint64_t seed) {
  GenerateOptions g;
  g.size = size;
  g.ops = 2 * size;
  return mf_generate(seed, qxy(), parse_poly("x^2*y", qxy()), g);
}

SolveOptions graded(int d) {
  SolveOptions o;
  o.mode = Mode::graded;
  o.max_degree = d;
  return o;
}

void BM_mon_validate(benchmark::State& state) {
  MonObject m = functor_U(sample(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(mon_validate(m.ring, m.omega, m.g1, graded(0)));
}
BENCHMARK(BM_mon_validate)->DenseRange(1, 4);

void BM_mf_reduce(benchmark::State& state) {
  MFObject x = sample(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(mf_reduce(x));
}
BENCHMARK(BM_mf_reduce)->DenseRange(1, 6);

void BM_null_homotopic(benchmark::State& state) {
  MFObject x = sample(static_cast<std::size_t>(state.range(0)), 3);
  MFMorphism id = mf_identity(x);
  for (auto _ : state) benchmark::DoNotOptimize(mf_null_homotopic(id, graded(0)));
}
BENCHMARK(BM_null_homotopic)->DenseRange(1, 4);

void BM_stable_hom_dim(benchmark::State& state) {
  MFObject x = sample(2, 4), y = sample(2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(mf_stable_hom_dim(x, y, graded(static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_stable_hom_dim)->DenseRange(0, 3);

void BM_t_compare(benchmark::State& state) {
  auto r = RingSpec::make(FieldSpec::rationals(), {"x"});
  Poly w = parse_poly("x^4", r);
  auto p = rmod_make(w, PolyMatrix::from_strings(r, {{"x"}}));
  auto q = rmod_make(w, PolyMatrix::from_strings(r, {{"x^2"}}));
  for (auto _ : state) benchmark::DoNotOptimize(t_compare(p, q, graded(static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_t_compare)->DenseRange(0, 3);

void BM_solve_bounded(benchmark::State& state) {
  auto r = qxy();
  auto a = PolyMatrix::from_strings(r, {{"x", "y^2"}, {"x*y", "x + y"}});
  auto b = PolyMatrix::from_strings(r, {{"x^3 + y^4"}, {"x^3*y + x^2 + 2*x*y"}});
  const int bound = static_cast<int>(state.range(0));
  LinearSystem sys(r);
  auto u = sys.add_bounded("X", 2, 1, bound);
  sys.add_equation({MatTerm{u, a}}, b);
  SolveOptions opts;
  opts.mode = Mode::bounded;
  opts.max_degree = bound;
  opts.degree_cap = bound;
  for (auto _ : state) benchmark::DoNotOptimize(solve_bounded(sys, opts));
}
BENCHMARK(BM_solve_bounded)->DenseRange(2, 8, 2);

}  // namespace
BENCHMARK_MAIN();
