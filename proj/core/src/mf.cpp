#include "mfcat/mf.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "internal.hpp"
#include "mfcat/gcd.hpp"

namespace mfcat {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_scalar_identity(const PolyMatrix& m, const Poly& omega, const char* what) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& want = i == j ? omega : Poly(omega.ring());
      if (m(i, j) != want)
        throw Error(ErrorKind::NotAFactorization, std::string(what) + " differs from omega*I at entry " +
                                                      entry_name(i, j) + ": " + m(i, j).to_string());
    }
}

std::optional<int> omega_degree(const MFObject& x) { return x.omega.homogeneous_degree(x.ring->weights()); }

void check_labels(const MFObject& x) {
  const DegreeLabels& l = *x.labels;
  const std::size_t n = x.rank();
  if (l.p1.size() != n || l.p0.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "degree labels do not match the rank");
  auto w = omega_degree(x);
  if (!w) throw Error(ErrorKind::NotHomogeneous, "labels given but omega is not homogeneous");
  const auto weights = x.ring->weights();
  auto check = [&](const PolyMatrix& m, const std::vector<int>& tgt, const std::vector<int>& src, int shift,
                   const char* name) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j).is_zero()) continue;
        auto d = m(i, j).homogeneous_degree(weights);
        if (!d || *d != tgt[i] - src[j] + shift)
          throw Error(ErrorKind::NotHomogeneous,
                      std::string(name) + " entry " + entry_name(i, j) + " does not match the degree labels");
      }
  };
  check(x.rho1, l.p0, l.p1, 0, "rho1");
  check(x.rho0, l.p1, l.p0, *w, "rho0");
}

void require_compatible(const MFObject& x, const MFObject& y) {
  if (!same_ring(x.ring, y.ring)) throw Error(ErrorKind::RingMismatch, "objects over different rings");
  if (x.omega != y.omega) throw Error(ErrorKind::OmegaMismatch, "objects factor different elements");
}

}  // namespace

void mf_validate(const MFObject& x) {
  if (!x.ring) throw Error(ErrorKind::InvalidRing, "object without a ring");
  if (!same_ring(x.omega.ring(), x.ring) || !same_ring(x.rho1.ring(), x.ring) || !same_ring(x.rho0.ring(), x.ring))
    throw Error(ErrorKind::RingMismatch, "object data over different rings");
  const std::size_t n = x.rho1.rows();
  if (x.rho1.cols() != n || x.rho0.rows() != n || x.rho0.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "rho1 and rho0 must be square of equal size");
  if (!is_nonzerodivisor(x.omega))
    throw Error(ErrorKind::OmegaZeroDivisor, "omega = " + x.omega.to_string() + " is a zero divisor");
  require_scalar_identity(x.rho0 * x.rho1, x.omega, "rho0*rho1");
  require_scalar_identity(x.rho1 * x.rho0, x.omega, "rho1*rho0");
  if (x.labels) check_labels(x);
}

MFObject mf_make(const RingPtr& ring, const Poly& omega, PolyMatrix rho1, PolyMatrix rho0,
                 std::optional<DegreeLabels> labels) {
  MFObject x{ring, omega, std::move(rho1), std::move(rho0), std::move(labels)};
  mf_validate(x);
  return x;
}

MFObject mf_zero(const RingPtr& ring, const Poly& omega) {
  return mf_make(ring, omega, PolyMatrix(ring, 0, 0), PolyMatrix(ring, 0, 0), DegreeLabels{});
}

MFObject mf_trivial(const RingPtr& ring, const Poly& omega, bool unit_first) {
  PolyMatrix one = PolyMatrix::identity(ring, 1);
  PolyMatrix w = PolyMatrix::scalar(omega, 1);
  std::optional<DegreeLabels> labels;
  if (auto d = omega.homogeneous_degree(ring->weights())) labels = DegreeLabels{{unit_first ? 0 : -*d}, {0}};
  return unit_first ? mf_make(ring, omega, one, w, labels) : mf_make(ring, omega, w, one, labels);
}

void mfmor_validate(const MFMorphism& f) {
  const MFObject& x = f.source;
  const MFObject& y = f.target;
  require_compatible(x, y);
  if (!same_ring(f.phi1.ring(), x.ring) || !same_ring(f.phi0.ring(), x.ring))
    throw Error(ErrorKind::RingMismatch, "morphism matrices over a different ring");
  if (f.phi1.rows() != y.rank() || f.phi1.cols() != x.rank() || f.phi0.rows() != y.rank() ||
      f.phi0.cols() != x.rank())
    throw Error(ErrorKind::DimensionMismatch, "morphism matrices must be " + std::to_string(y.rank()) + "x" +
                                                  std::to_string(x.rank()));
  if (y.rho1 * f.phi1 != f.phi0 * x.rho1) throw Error(ErrorKind::SquareFails, "q1*phi1 != phi0*rho1");
  if (f.phi1 * x.rho0 != y.rho0 * f.phi0) throw Error(ErrorKind::SquareFails, "phi1*rho0 != q0*phi0");
}

MFMorphism mf_morphism(const MFObject& source, const MFObject& target, PolyMatrix phi1, PolyMatrix phi0) {
  MFMorphism f{source, target, std::move(phi1), std::move(phi0)};
  mfmor_validate(f);
  return f;
}

MFMorphism mf_identity(const MFObject& x) {
  PolyMatrix id = PolyMatrix::identity(x.ring, x.rank());
  return {x, x, id, id};
}

MFMorphism mf_zero_morphism(const MFObject& x, const MFObject& y) {
  require_compatible(x, y);
  PolyMatrix z(x.ring, y.rank(), x.rank());
  return {x, y, z, z};
}

MFMorphism mf_compose(const MFMorphism& psi, const MFMorphism& phi) {
  if (!(phi.target == psi.source)) throw Error(ErrorKind::ObjectMismatch, "target of the first map is not the source of the second");
  return mf_morphism(phi.source, psi.target, psi.phi1 * phi.phi1, psi.phi0 * phi.phi0);
}

MFMorphism mf_add(const MFMorphism& a, const MFMorphism& b) {
  if (!(a.source == b.source) || !(a.target == b.target))
    throw Error(ErrorKind::ObjectMismatch, "sum of morphisms with different endpoints");
  return {a.source, a.target, a.phi1 + b.phi1, a.phi0 + b.phi0};
}

MFMorphism mf_scale(const MFMorphism& a, const Poly& c) { return {a.source, a.target, c * a.phi1, c * a.phi0}; }

MFObject mf_dsum(const MFObject& x, const MFObject& y) {
  require_compatible(x, y);
  std::optional<DegreeLabels> labels;
  if (x.labels && y.labels) {
    labels = *x.labels;
    labels->p1.insert(labels->p1.end(), y.labels->p1.begin(), y.labels->p1.end());
    labels->p0.insert(labels->p0.end(), y.labels->p0.begin(), y.labels->p0.end());
  }
  return {x.ring, x.omega, block_diag(x.rho1, y.rho1), block_diag(x.rho0, y.rho0), labels};
}

MFObject mf_dsum(const std::vector<MFObject>& xs) {
  if (xs.empty()) throw Error(ErrorKind::DimensionMismatch, "direct sum of no objects");
  MFObject out = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) out = mf_dsum(out, xs[i]);
  return out;
}

MFObject mf_shift(const MFObject& x) {
  std::optional<DegreeLabels> labels;
  if (x.labels) {
    int w = *omega_degree(x);
    labels = DegreeLabels{x.labels->p0, x.labels->p1};
    for (int& l : labels->p0) l += w;
  }
  return {x.ring, x.omega, -x.rho0, -x.rho1, labels};
}

MFMorphism mf_shift(const MFMorphism& f) { return {mf_shift(f.source), mf_shift(f.target), f.phi0, f.phi1}; }

namespace {

bool is_degree_zero(const MFMorphism& f, const DegreeLabels& lx, const DegreeLabels& ly) {
  const auto weights = f.source.ring->weights();
  auto d1 = map_degrees(f.phi1, ly.p1, lx.p1, weights);
  auto d0 = map_degrees(f.phi0, ly.p0, lx.p0, weights);
  return (d1.empty() || d1 == std::set<int>{0}) && (d0.empty() || d0 == std::set<int>{0});
}

}  // namespace

MFObject mf_cone(const MFMorphism& f) {
  const MFObject& x = f.source;
  const MFObject& y = f.target;
  const RingPtr& ring = x.ring;
  const std::size_t m = y.rank(), n = x.rank();
  PolyMatrix c1 = block2x2(y.rho1, f.phi0, PolyMatrix(ring, n, m), -x.rho0);
  PolyMatrix c0 = block2x2(y.rho0, f.phi1, PolyMatrix(ring, n, m), -x.rho1);
  std::optional<DegreeLabels> labels;
  if (x.labels && y.labels && is_degree_zero(f, *x.labels, *y.labels)) {
    MFObject sx = mf_shift(x);
    labels = DegreeLabels{y.labels->p1, y.labels->p0};
    labels->p1.insert(labels->p1.end(), sx.labels->p1.begin(), sx.labels->p1.end());
    labels->p0.insert(labels->p0.end(), sx.labels->p0.begin(), sx.labels->p0.end());
  }
  return {ring, x.omega, c1, c0, labels};
}

MFMorphism mf_cone_inclusion(const MFMorphism& f) {
  MFObject c = mf_cone(f);
  const RingPtr& ring = c.ring;
  const std::size_t m = f.target.rank(), n = f.source.rank();
  PolyMatrix inc = vstack(PolyMatrix::identity(ring, m), PolyMatrix(ring, n, m));
  return {f.target, c, inc, inc};
}

MFMorphism mf_cone_projection(const MFMorphism& f) {
  MFObject c = mf_cone(f);
  const RingPtr& ring = c.ring;
  const std::size_t m = f.target.rank(), n = f.source.rank();
  PolyMatrix proj = hstack(PolyMatrix(ring, n, m), PolyMatrix::identity(ring, n));
  return {c, mf_shift(f.source), proj, proj};
}

std::optional<DegreeLabels> mf_infer_labels(const MFObject& x) {
  auto w = omega_degree(x);
  if (!w) return std::nullopt;
  const std::size_t n = x.rank();
  LabelSolver solver(x.ring->weights());
  std::size_t p1 = solver.add_nodes(n, false);
  std::size_t p0 = solver.add_nodes(n, true);
  if (!solver.add_map(x.rho1, p0, p1, 0) || !solver.add_map(x.rho0, p1, p0, *w)) return std::nullopt;
  auto labels = solver.solve();
  if (!labels) return std::nullopt;
  DegreeLabels out;
  out.p1.assign(labels->begin(), labels->begin() + static_cast<long>(n));
  out.p0.assign(labels->begin() + static_cast<long>(n), labels->end());
  return out;
}

std::optional<DegreeLabels> mf_labels(const MFObject& x) { return x.labels ? x.labels : mf_infer_labels(x); }

namespace {

struct GradedContext {
  DegreeLabels lx, ly;
  int w = 0;
};

std::optional<GradedContext> graded_context(const MFObject& x, const MFObject& y) {
  auto lx = mf_labels(x);
  auto ly = mf_labels(y);
  auto w = omega_degree(x);
  if (!lx || !ly || !w) return std::nullopt;
  return GradedContext{*lx, *ly, *w};
}

// Homotopy equations: q1 s0 + s1 rho0 = phi0, q0 s1 + s0 rho1 = phi1.
void add_homotopy_equations(LinearSystem& sys, const MFObject& x, const MFObject& y, std::size_t s0, std::size_t s1,
                            const PolyMatrix& phi1, const PolyMatrix& phi0) {
  sys.add_equation({MatTerm{s0, y.rho1, std::nullopt}, MatTerm{s1, std::nullopt, x.rho0}}, phi0);
  sys.add_equation({MatTerm{s1, y.rho0, std::nullopt}, MatTerm{s0, std::nullopt, x.rho1}}, phi1);
}

}  // namespace

HomotopyResult mf_find_homotopy(const MFMorphism& f, const SolveOptions& opts) {
  const MFObject& x = f.source;
  const MFObject& y = f.target;
  const RingPtr& ring = x.ring;
  auto ctx = graded_context(x, y);
  HomotopyResult out;
  if (use_graded(opts, ctx.has_value())) {
    const auto weights = ring->weights();
    std::set<int> degrees = map_degrees(f.phi1, ctx->ly.p1, ctx->lx.p1, weights);
    for (int d : map_degrees(f.phi0, ctx->ly.p0, ctx->lx.p0, weights)) degrees.insert(d);
    Homotopy h{PolyMatrix(ring, y.rank(), x.rank()), PolyMatrix(ring, y.rank(), x.rank())};
    for (int d : degrees) {
      LinearSystem sys(ring);
      std::size_t s0 = sys.add_graded("s0", y.rank(), x.rank(), map_offsets(ctx->ly.p1, ctx->lx.p0, d));
      std::size_t s1 = sys.add_graded("s1", y.rank(), x.rank(), map_offsets(ctx->ly.p0, ctx->lx.p1, d - ctx->w));
      add_homotopy_equations(sys, x, y, s0, s1, map_component(f.phi1, ctx->ly.p1, ctx->lx.p1, weights, d),
                             map_component(f.phi0, ctx->ly.p0, ctx->lx.p0, weights, d));
      auto res = solve_bounded(sys, opts);
      if (!res.solution) {
        out.verdict = {false, Certainty::proven};
        return out;
      }
      h.s0 += (*res.solution)[s0];
      h.s1 += (*res.solution)[s1];
    }
    out.verdict = {true, Certainty::proven};
    out.homotopy = std::move(h);
    return out;
  }
  LinearSystem sys(ring);
  sys.degree_hint = x.omega.total_degree();
  std::size_t s0 = sys.add_bounded("s0", y.rank(), x.rank());
  std::size_t s1 = sys.add_bounded("s1", y.rank(), x.rank());
  add_homotopy_equations(sys, x, y, s0, s1, f.phi1, f.phi0);
  auto res = solve_bounded(sys, opts);
  out.degree_bound = res.degree_bound;
  if (res.solution) {
    out.verdict = {true, Certainty::proven};
    out.homotopy = Homotopy{(*res.solution)[s0], (*res.solution)[s1]};
  } else {
    out.verdict = {false, Certainty::bounded};
  }
  return out;
}

Verdict mf_null_homotopic(const MFMorphism& f, const SolveOptions& opts) { return mf_find_homotopy(f, opts).verdict; }

Verdict mf_is_contractible(const MFObject& x, const SolveOptions& opts) {
  return mf_null_homotopic(mf_identity(x), opts);
}

Reduction mf_reduce(const MFObject& x) {
  const RingPtr& ring = x.ring;
  const std::size_t n = x.rank();
  PolyMatrix a = x.rho1, b = x.rho0;
  PolyMatrix u0 = PolyMatrix::identity(ring, n), u0_inv = u0, u1 = u0, u1_inv = u0;
  std::vector<bool> done0(n, false), done1(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> unit_pairs, omega_pairs;  // (P0 index, P1 index)

  auto find_pivot = [&](const PolyMatrix& m, bool rows_p0) -> std::optional<std::pair<std::size_t, std::size_t>> {
    for (std::size_t r = 0; r < n; ++r) {
      if (rows_p0 ? done0[r] : done1[r]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (rows_p0 ? done1[c] : done0[c]) continue;
        if (m(r, c).is_unit_constant()) return std::make_pair(r, c);
      }
    }
    return std::nullopt;
  };

  while (true) {
    if (auto p = find_pivot(a, true)) {
      auto [i, j] = *p;
      const Scalar c = a(i, j).constant_coeff();
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || a(k, j).is_zero()) continue;
        Poly m = a(k, j).scaled(-1 / c);
        detail::add_row(a, k, i, m);
        detail::add_col(b, i, k, -m);
        detail::add_row(u0, k, i, m);
        detail::add_col(u0_inv, i, k, -m);
      }
      for (std::size_t l = 0; l < n; ++l) {
        if (l == j || a(i, l).is_zero()) continue;
        Poly m = a(i, l).scaled(-1 / c);
        detail::add_col(a, l, j, m);
        detail::add_row(b, j, l, -m);
        detail::add_row(u1, j, l, -m);
        detail::add_col(u1_inv, l, j, m);
      }
      Poly inv = Poly::constant(ring, 1 / c), cc = Poly::constant(ring, c);
      detail::scale_row(a, i, inv);
      detail::scale_col(b, i, cc);
      detail::scale_row(u0, i, inv);
      detail::scale_col(u0_inv, i, cc);
      done0[i] = done1[j] = true;
      unit_pairs.emplace_back(i, j);
      continue;
    }
    if (auto p = find_pivot(b, false)) {
      auto [j, i] = *p;
      const Scalar c = b(j, i).constant_coeff();
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j || b(k, i).is_zero()) continue;
        Poly m = b(k, i).scaled(-1 / c);
        detail::add_row(b, k, j, m);
        detail::add_col(a, j, k, -m);
        detail::add_row(u1, k, j, m);
        detail::add_col(u1_inv, j, k, -m);
      }
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || b(j, l).is_zero()) continue;
        Poly m = b(j, l).scaled(-1 / c);
        detail::add_col(b, l, i, m);
        detail::add_row(a, i, l, -m);
        detail::add_row(u0, i, l, -m);
        detail::add_col(u0_inv, l, i, m);
      }
      Poly inv = Poly::constant(ring, 1 / c), cc = Poly::constant(ring, c);
      detail::scale_row(b, j, inv);
      detail::scale_col(a, j, cc);
      detail::scale_row(u1, j, inv);
      detail::scale_col(u1_inv, j, cc);
      done0[i] = done1[j] = true;
      omega_pairs.emplace_back(i, j);
      continue;
    }
    break;
  }

  std::vector<std::size_t> perm0, perm1;
  for (std::size_t k = 0; k < n; ++k) {
    if (!done0[k]) perm0.push_back(k);
    if (!done1[k]) perm1.push_back(k);
  }
  const std::size_t r = perm0.size();
  for (const auto* pairs : {&unit_pairs, &omega_pairs})
    for (auto [i, j] : *pairs) {
      perm0.push_back(i);
      perm1.push_back(j);
    }

  Reduction out;
  out.unit_blocks = unit_pairs.size();
  out.omega_blocks = omega_pairs.size();
  out.u0 = u0.select_rows(perm0);
  out.u0_inv = u0_inv.select_cols(perm0);
  out.u1 = u1.select_rows(perm1);
  out.u1_inv = u1_inv.select_cols(perm1);
  PolyMatrix ta = detail::permute(a, perm0, perm1);
  PolyMatrix tb = detail::permute(b, perm1, perm0);
  std::optional<DegreeLabels> labels, tlabels;
  if (x.labels) {
    tlabels = DegreeLabels{};
    for (std::size_t k = 0; k < n; ++k) {
      tlabels->p1.push_back(x.labels->p1[perm1[k]]);
      tlabels->p0.push_back(x.labels->p0[perm0[k]]);
    }
    labels = DegreeLabels{{tlabels->p1.begin(), tlabels->p1.begin() + static_cast<long>(r)},
                          {tlabels->p0.begin(), tlabels->p0.begin() + static_cast<long>(r)}};
  }
  out.transformed = {ring, x.omega, ta, tb, tlabels};
  out.reduced = {ring, x.omega, ta.block(0, 0, r, r), tb.block(0, 0, r, r), labels};
  return out;
}

StableHomDim mf_stable_hom_dim(const MFObject& x, const MFObject& y, const SolveOptions& opts) {
  require_compatible(x, y);
  const RingPtr& ring = x.ring;
  const int bound = opts.max_degree.value_or(0);
  StableHomDim out;
  out.degree_bound = bound;
  if (x.rank() == 0 || y.rank() == 0) return out;
  const std::size_t m = y.rank(), n = x.rank();

  auto morphism_system = [&](LinearSystem& sys, std::size_t p1, std::size_t p0) {
    sys.add_equation({MatTerm{p1, y.rho1, std::nullopt}, MatTerm{p0, std::nullopt, -x.rho1}}, PolyMatrix(ring, m, n));
    sys.add_equation({MatTerm{p1, std::nullopt, x.rho0}, MatTerm{p0, -y.rho0, std::nullopt}}, PolyMatrix(ring, m, n));
  };
  auto homotopy_system = [&](LinearSystem& sys, std::size_t p1, std::size_t p0, std::size_t s0, std::size_t s1) {
    sys.add_equation({MatTerm{p0}, MatTerm{s0, -y.rho1, std::nullopt}, MatTerm{s1, std::nullopt, -x.rho0}},
                     PolyMatrix(ring, m, n));
    sys.add_equation({MatTerm{p1}, MatTerm{s1, -y.rho0, std::nullopt}, MatTerm{s0, std::nullopt, -x.rho1}},
                     PolyMatrix(ring, m, n));
  };

  auto ctx = graded_context(x, y);
  if (use_graded(opts, ctx.has_value())) {
    int d_min = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d_min = std::min({d_min, ctx->lx.p1[j] - ctx->ly.p1[i], ctx->lx.p0[j] - ctx->ly.p0[i]});
    for (int d = d_min; d <= bound; ++d) {
      auto o1 = map_offsets(ctx->ly.p1, ctx->lx.p1, d);
      auto o0 = map_offsets(ctx->ly.p0, ctx->lx.p0, d);
      LinearSystem mor(ring);
      std::size_t p1 = mor.add_graded("phi1", m, n, o1);
      std::size_t p0 = mor.add_graded("phi0", m, n, o0);
      morphism_system(mor, p1, p0);
      const std::size_t total = solution_space(mor, opts).dim;
      if (total == 0) continue;
      LinearSystem hom(ring);
      p1 = hom.add_graded("phi1", m, n, o1);
      p0 = hom.add_graded("phi0", m, n, o0);
      std::size_t s0 = hom.add_graded("s0", m, n, map_offsets(ctx->ly.p1, ctx->lx.p0, d));
      std::size_t s1 = hom.add_graded("s1", m, n, map_offsets(ctx->ly.p0, ctx->lx.p1, d - ctx->w));
      homotopy_system(hom, p1, p0, s0, s1);
      const std::size_t trivial = span_dimension(ring, solution_space(hom, opts).basis, {p1, p0});
      out.dim += total - trivial;
    }
    return out;
  }

  out.certainty = Certainty::bounded;
  SolveOptions fixed = opts;
  fixed.max_degree = bound;
  LinearSystem mor(ring);
  std::size_t p1 = mor.add_bounded("phi1", m, n, bound);
  std::size_t p0 = mor.add_bounded("phi0", m, n, bound);
  morphism_system(mor, p1, p0);
  const std::size_t total = solution_space(mor, fixed).dim;
  const int slack = std::max({x.rho1.max_total_degree(), x.rho0.max_total_degree(), y.rho1.max_total_degree(),
                              y.rho0.max_total_degree()});
  LinearSystem hom(ring);
  p1 = hom.add_bounded("phi1", m, n, bound);
  p0 = hom.add_bounded("phi0", m, n, bound);
  std::size_t s0 = hom.add_bounded("s0", m, n, bound + slack);
  std::size_t s1 = hom.add_bounded("s1", m, n, bound + slack);
  homotopy_system(hom, p1, p0, s0, s1);
  out.dim = total - span_dimension(ring, solution_space(hom, fixed).basis, {p1, p0});
  return out;
}

namespace {

std::vector<Monomial> proper_divisors(const Monomial& m) {
  std::vector<Monomial> out{Monomial(m.size(), 0)};
  for (std::size_t v = 0; v < m.size(); ++v) {
    std::vector<Monomial> next;
    for (const auto& base : out)
      for (std::uint32_t e = 0; e <= m[v]; ++e) {
        Monomial d = base;
        d[v] = e;
        next.push_back(d);
      }
    out = std::move(next);
  }
  std::vector<Monomial> proper;
  for (auto& d : out)
    if (total_degree(d) > 0 && d != m) proper.push_back(std::move(d));
  std::sort(proper.begin(), proper.end(), GrlexGreater{});
  return proper;
}

}  // namespace

MFObject mf_generate(std::uint64_t seed, const RingPtr& ring, const Poly& omega, const GenerateOptions& opts) {
  std::mt19937_64 rng(seed);
  const auto weights = ring->weights();
  std::vector<Monomial> divisors;
  if (omega.size() == 1) divisors = proper_divisors(omega.leading().mono);
  if (opts.blocks == BlockChoice::family && divisors.empty())
    throw Error(ErrorKind::UnsupportedOmega, "no factorization family for omega = " + omega.to_string());

  std::vector<MFObject> blocks;
  for (std::size_t k = 0; k < opts.size; ++k) {
    bool family = opts.blocks == BlockChoice::family ||
                  (opts.blocks == BlockChoice::random && !divisors.empty() && rng() % 2 == 0);
    if (family) {
      const Monomial& d = divisors[rng() % divisors.size()];
      Poly m = Poly::monomial(ring, d);
      Poly rest = Poly::monomial(ring, monomial_quotient(omega.leading().mono, d), omega.leading().coeff);
      std::optional<DegreeLabels> labels;
      if (auto d = m.homogeneous_degree(weights); d && omega.homogeneous_degree(weights))
        labels = DegreeLabels{{-*d}, {0}};
      blocks.push_back(mf_make(ring, omega, PolyMatrix::scalar(m, 1), PolyMatrix::scalar(rest, 1), labels));
    } else {
      blocks.push_back(mf_trivial(ring, omega, k % 2 == 0));
    }
  }
  MFObject x = blocks.empty() ? mf_zero(ring, omega) : mf_dsum(blocks);
  const std::size_t n = x.rank();
  if (n < 2) return x;

  auto labels = mf_labels(x);
  std::size_t applied = 0;
  for (std::size_t attempt = 0; applied < opts.ops && attempt < 20 * opts.ops + 20; ++attempt) {
    const bool on_p0 = rng() % 2 == 0;
    std::size_t i = rng() % n, k = rng() % (n - 1);
    if (k >= i) ++k;
    int degree;
    if (labels) {
      const auto& l = on_p0 ? labels->p0 : labels->p1;
      degree = l[k] - l[i];
      if (degree < 0) {
        std::swap(i, k);
        degree = -degree;
      }
    } else {
      degree = static_cast<int>(rng() % 2);
    }
    auto monos = labels ? monomials_of_degree(*ring, weights, degree) : monomials_up_to(*ring, degree);
    if (monos.empty()) continue;
    Poly m = Poly::monomial(ring, monos[rng() % monos.size()], detail::random_nonzero(ring->field(), rng));
    PolyMatrix a = x.rho1, b = x.rho0;
    if (on_p0) {  // E = I + m e_k e_i^T on P0
      detail::add_row(a, k, i, m);
      detail::add_col(b, i, k, -m);
    } else {  // on P1
      detail::add_row(b, k, i, m);
      detail::add_col(a, i, k, -m);
    }
    if (a.max_total_degree() > opts.max_entry_degree || b.max_total_degree() > opts.max_entry_degree) continue;
    x.rho1 = std::move(a);
    x.rho0 = std::move(b);
    ++applied;
  }
  x.labels = labels;
  mf_validate(x);
  return x;
}

MFMorphism mf_random_morphism(std::uint64_t seed, const MFObject& x, const MFObject& y, int degree) {
  require_compatible(x, y);
  const RingPtr& ring = x.ring;
  const std::size_t m = y.rank(), n = x.rank();
  if (m == 0 || n == 0) return mf_zero_morphism(x, y);
  LinearSystem sys(ring);
  std::size_t p1, p0;
  auto ctx = graded_context(x, y);
  if (ctx) {
    p1 = sys.add_graded("phi1", m, n, map_offsets(ctx->ly.p1, ctx->lx.p1, degree));
    p0 = sys.add_graded("phi0", m, n, map_offsets(ctx->ly.p0, ctx->lx.p0, degree));
  } else {
    p1 = sys.add_bounded("phi1", m, n, std::max(degree, 1));
    p0 = sys.add_bounded("phi0", m, n, std::max(degree, 1));
  }
  sys.add_equation({MatTerm{p1, y.rho1, std::nullopt}, MatTerm{p0, std::nullopt, -x.rho1}}, PolyMatrix(ring, m, n));
  sys.add_equation({MatTerm{p1, std::nullopt, x.rho0}, MatTerm{p0, -y.rho0, std::nullopt}}, PolyMatrix(ring, m, n));
  auto space = solution_space(sys);
  std::mt19937_64 rng(seed);
  PolyMatrix phi1(ring, m, n), phi0(ring, m, n);
  for (const auto& v : space.basis) {
    Poly c = Poly::constant(ring, detail::random_scalar(ring->field(), rng));
    phi1 += c * v[p1];
    phi0 += c * v[p0];
  }
  return mf_morphism(x, y, phi1, phi0);
}

}  // namespace mfcat
