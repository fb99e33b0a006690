#include "mfcat/gorenstein.hpp"

#include <algorithm>
#include <limits>

#include "mfcat/gcd.hpp"

namespace mfcat {

namespace {

std::optional<DegreeLabels> module_labels(const GPModule& g) { return mf_labels(g.presentation); }

void require_same_base(const GPModule& a, const GPModule& b) {
  if (!same_ring(a.ambient, b.ambient)) throw Error(ErrorKind::RingMismatch, "modules over different rings");
  if (a.f != b.f) throw Error(ErrorKind::ObjectMismatch, "modules over different hypersurfaces");
}

struct Factor {
  std::optional<PolyMatrix> x;
  Certainty certainty = Certainty::proven;
};

// X with a * X = target, where a: a_labels.p1 -> a_labels.p0 has degree 0 and
// target starts at generators labelled t_src.
Factor left_factor(const PolyMatrix& a, const std::optional<DegreeLabels>& al, const PolyMatrix& target,
                   const std::optional<std::vector<int>>& t_src, const SolveOptions& opts) {
  const RingPtr& ring = target.ring();
  Factor out;
  if (target.rows() == 0 || target.cols() == 0 || a.cols() == 0) {
    if (target.is_zero()) out.x = PolyMatrix(ring, a.cols(), target.cols());
    return out;
  }
  if (use_graded(opts, al.has_value() && t_src.has_value())) {
    const auto weights = ring->weights();
    PolyMatrix x(ring, a.cols(), target.cols());
    for (int d : map_degrees(target, al->p0, *t_src, weights)) {
      LinearSystem sys(ring);
      std::size_t k = sys.add_graded("X", a.cols(), target.cols(), map_offsets(al->p1, *t_src, d));
      sys.add_equation({MatTerm{k, a, std::nullopt}}, map_component(target, al->p0, *t_src, weights, d));
      auto res = solve_bounded(sys, opts);
      if (!res.solution) return out;
      x += res.solution->front();
    }
    out.x = std::move(x);
    return out;
  }
  LinearSystem sys(ring);
  std::size_t k = sys.add_bounded("X", a.cols(), target.cols());
  sys.add_equation({MatTerm{k, a, std::nullopt}}, target);
  auto res = solve_bounded(sys, opts);
  out.x = res.solution ? std::optional<PolyMatrix>(res.solution->front()) : std::nullopt;
  out.certainty = res.solution ? Certainty::proven : Certainty::bounded;
  return out;
}

bool is_trivial_presentation(const GPModule& g) {
  return g.presentation.rho1 == PolyMatrix::scalar(g.f, g.rank()) &&
         g.presentation.rho0 == PolyMatrix::identity(g.ambient, g.rank());
}

void require_omega_regular(const RingPtr& ambient, const Poly& f, const Poly& omega) {
  RingPtr s = make_quotient(ambient, f);
  Poly w = omega.in_ring(s);
  if (w.is_zero() || !is_nonzerodivisor(w))
    throw Error(ErrorKind::OmegaZeroDivisor, "omega = " + omega.to_string() + " is a zero divisor modulo f");
}

// Generator labels for G1 and G0 making g1 of degree 0 and g0 (if given) of degree w.
std::optional<MFGLabels> joint_labels(const GPMorphism& g1, const GPMorphism* g0, const Poly& omega) {
  const GPModule& a = g1.source;
  const GPModule& b = g1.target;
  const RingPtr& ring = a.ambient;
  auto w = omega.homogeneous_degree(ring->weights());
  auto wf = a.f.homogeneous_degree(ring->weights());
  if (!w || !wf) return std::nullopt;
  LabelSolver solver(ring->weights());
  const std::size_t a1 = solver.add_nodes(a.rank(), false), a0 = solver.add_nodes(a.rank(), false);
  const std::size_t b1 = solver.add_nodes(b.rank(), false), b0 = solver.add_nodes(b.rank(), true);
  bool ok = solver.add_map(a.presentation.rho1, a0, a1, 0) && solver.add_map(a.presentation.rho0, a1, a0, *wf) &&
            solver.add_map(b.presentation.rho1, b0, b1, 0) && solver.add_map(b.presentation.rho0, b1, b0, *wf) &&
            solver.add_map(g1.v, b0, a0, 0) && solver.add_map(g1.u, b1, a1, 0);
  if (ok && g0) ok = solver.add_map(g0->v, a0, b0, *w) && solver.add_map(g0->u, a1, b1, *w);
  if (!ok) return std::nullopt;
  auto l = solver.solve();
  if (!l) return std::nullopt;
  auto slice = [&](std::size_t first, std::size_t n) {
    return std::vector<int>(l->begin() + static_cast<long>(first), l->begin() + static_cast<long>(first + n));
  };
  return MFGLabels{{slice(a1, a.rank()), slice(a0, a.rank())}, {slice(b1, b.rank()), slice(b0, b.rank())}};
}

int max_degree_of(std::initializer_list<const PolyMatrix*> ms) {
  int d = 0;
  for (const PolyMatrix* m : ms) d = std::max(d, m->max_total_degree());
  return d;
}

}  // namespace

void gp_validate(const GPModule& g) {
  if (!g.ambient) throw Error(ErrorKind::InvalidRing, "module without a ring");
  if (g.ambient->has_modulus()) throw Error(ErrorKind::ModulusPresent, "presentations live over a free ring");
  if (!same_ring(g.presentation.ring, g.ambient) || !same_ring(g.f.ring(), g.ambient))
    throw Error(ErrorKind::RingMismatch, "presentation over a different ring");
  if (g.f.is_zero() || g.f.is_constant()) throw Error(ErrorKind::NotAFactorization, "f must be a nonzero non-unit");
  if (g.presentation.omega != g.f)
    throw Error(ErrorKind::NotAFactorization, "presentation factors " + g.presentation.omega.to_string() +
                                                  " instead of f = " + g.f.to_string());
  mf_validate(g.presentation);
}

GPModule gp_make(const MFObject& presentation) {
  GPModule g{presentation.ring, presentation.omega, presentation};
  gp_validate(g);
  return g;
}

GPModule gp_free(const RingPtr& ambient, const Poly& f, std::size_t n) {
  std::optional<DegreeLabels> labels;
  if (auto d = f.homogeneous_degree(ambient->weights())) labels = DegreeLabels{std::vector<int>(n, -*d), std::vector<int>(n, 0)};
  return gp_make(mf_make(ambient, f, PolyMatrix::scalar(f, n), PolyMatrix::identity(ambient, n), labels));
}

void gpmor_validate(const GPMorphism& a) {
  require_same_base(a.source, a.target);
  const std::size_t m = a.target.rank(), n = a.source.rank();
  if (a.v.rows() != m || a.v.cols() != n || a.u.rows() != m || a.u.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "morphism matrices must be " + std::to_string(m) + "x" + std::to_string(n));
  if (a.v * a.source.rho1() != a.target.rho1() * a.u) throw Error(ErrorKind::SquareFails, "v*rho1 != sigma1*u");
}

GPMorphism gp_morphism(const GPModule& source, const GPModule& target, PolyMatrix v, std::optional<PolyMatrix> u,
                       const SolveOptions& opts) {
  require_same_base(source, target);
  if (!u) {
    if (v.rows() != target.rank() || v.cols() != source.rank())
      throw Error(ErrorKind::DimensionMismatch, "v has the wrong shape");
    Factor w = left_factor(target.rho1(), module_labels(target), v * source.rho1(),
                           module_labels(source) ? std::optional(module_labels(source)->p1) : std::nullopt, opts);
    if (!w.x) throw Error(ErrorKind::SquareFails, "v does not induce a map of cokernels", w.certainty);
    u = std::move(w.x);
  }
  GPMorphism out{source, target, std::move(v), std::move(*u)};
  gpmor_validate(out);
  return out;
}

GPMorphism gp_identity(const GPModule& g) {
  PolyMatrix id = PolyMatrix::identity(g.ambient, g.rank());
  return {g, g, id, id};
}

GPMorphism gp_zero(const GPModule& g, const GPModule& h) {
  require_same_base(g, h);
  PolyMatrix z(g.ambient, h.rank(), g.rank());
  return {g, h, z, z};
}

GPMorphism gp_scale(const GPMorphism& a, const Poly& c) { return {a.source, a.target, c * a.v, c * a.u}; }

GPMorphism gp_add(const GPMorphism& a, const GPMorphism& b) {
  if (!(a.source == b.source) || !(a.target == b.target))
    throw Error(ErrorKind::ObjectMismatch, "sum of morphisms with different endpoints");
  return {a.source, a.target, a.v + b.v, a.u + b.u};
}

GPMorphism gp_normalize(const GPMorphism& a) {
  const RingPtr& ring = a.source.ambient;
  PolyMatrix q(ring, a.v.rows(), a.v.cols()), r(ring, a.v.rows(), a.v.cols());
  for (std::size_t i = 0; i < a.v.rows(); ++i)
    for (std::size_t j = 0; j < a.v.cols(); ++j) {
      auto [qq, rr] = divide(a.v(i, j), a.source.f);
      q(i, j) = qq;
      r(i, j) = rr;
    }
  // f q rho1 = sigma1 sigma0 q rho1
  return {a.source, a.target, r, a.u - a.target.presentation.rho0 * q * a.source.rho1()};
}

GPMorphism gp_compose(const GPMorphism& psi, const GPMorphism& phi) {
  if (!(phi.target == psi.source))
    throw Error(ErrorKind::ObjectMismatch, "target of the first map is not the source of the second");
  return gp_normalize({phi.source, psi.target, psi.v * phi.v, psi.u * phi.u});
}

Verdict gp_equal(const GPMorphism& a, const GPMorphism& b, const SolveOptions& opts) {
  if (!(a.source == b.source) || !(a.target == b.target))
    throw Error(ErrorKind::ObjectMismatch, "comparison of morphisms with different endpoints");
  auto ls = module_labels(a.source);
  Factor w = left_factor(a.target.rho1(), module_labels(a.target), a.v - b.v,
                         ls ? std::optional(ls->p0) : std::nullopt, opts);
  return {w.x.has_value(), w.x ? Certainty::proven : w.certainty};
}

GPHomBasis gp_hom_basis(const GPModule& g, const GPModule& h, const SolveOptions& opts) {
  require_same_base(g, h);
  GPHomBasis out;
  const std::size_t m = h.rank(), n = g.rank();
  if (m == 0 || n == 0) return out;
  const RingPtr& ring = g.ambient;
  const int bound = opts.max_degree.value_or(0);
  auto lg = module_labels(g);
  auto lh = module_labels(h);

  // Keeps solutions of `mor` whose v-part is independent modulo the v-parts of `deg`.
  auto collect = [&](const LinearSystem& mor, std::size_t v, std::size_t u, const LinearSystem& deg, std::size_t dv,
                     const SolveOptions& o) {
    std::vector<Assignment> span;
    for (const auto& s : solution_space(deg, o).basis) span.push_back({s[dv]});
    std::size_t rank = span_dimension(ring, span, {0});
    for (const auto& s : solution_space(mor, o).basis) {
      span.push_back({s[v]});
      std::size_t next = span_dimension(ring, span, {0});
      if (next > rank) {
        rank = next;
        out.basis.push_back({g, h, s[v], s[u]});
      } else {
        span.pop_back();
      }
    }
  };

  if (use_graded(opts, lg && lh)) {
    int d_min = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) d_min = std::min(d_min, lg->p0[j] - lh->p0[i]);
    for (int d = d_min; d <= bound; ++d) {
      LinearSystem mor(ring);
      std::size_t v = mor.add_graded("v", m, n, map_offsets(lh->p0, lg->p0, d));
      std::size_t u = mor.add_graded("u", m, n, map_offsets(lh->p1, lg->p1, d));
      mor.add_equation({MatTerm{v, std::nullopt, g.rho1()}, MatTerm{u, -h.rho1(), std::nullopt}}, PolyMatrix(ring, m, n));
      LinearSystem deg(ring);
      std::size_t dv = deg.add_graded("v", m, n, map_offsets(lh->p0, lg->p0, d));
      std::size_t dw = deg.add_graded("w", m, n, map_offsets(lh->p1, lg->p0, d));
      deg.add_equation({MatTerm{dv}, MatTerm{dw, -h.rho1(), std::nullopt}}, PolyMatrix(ring, m, n));
      collect(mor, v, u, deg, dv, opts);
    }
    return out;
  }
  out.certainty = Certainty::bounded;
  SolveOptions fixed = opts;
  fixed.max_degree = bound;
  const int slack = max_degree_of({&g.presentation.rho1, &g.presentation.rho0, &h.presentation.rho1, &h.presentation.rho0});
  LinearSystem mor(ring);
  std::size_t v = mor.add_bounded("v", m, n, bound);
  std::size_t u = mor.add_bounded("u", m, n, bound + slack);
  mor.add_equation({MatTerm{v, std::nullopt, g.rho1()}, MatTerm{u, -h.rho1(), std::nullopt}}, PolyMatrix(ring, m, n));
  LinearSystem deg(ring);
  std::size_t dv = deg.add_bounded("v", m, n, bound);
  std::size_t dw = deg.add_bounded("w", m, n, bound + slack);
  deg.add_equation({MatTerm{dv}, MatTerm{dw, -h.rho1(), std::nullopt}}, PolyMatrix(ring, m, n));
  collect(mor, v, u, deg, dv, fixed);
  return out;
}

void mfg_validate(const MFGObject& x, const SolveOptions& opts) {
  if (!(x.g1.source == x.g0.target) || !(x.g1.target == x.g0.source))
    throw Error(ErrorKind::ObjectMismatch, "g1 and g0 do not run between the same two modules");
  gp_validate(x.first());
  gp_validate(x.second());
  if (!same_ring(x.ambient, x.first().ambient) || x.f != x.first().f)
    throw Error(ErrorKind::RingMismatch, "object data over different rings");
  gpmor_validate(x.g1);
  gpmor_validate(x.g0);
  require_omega_regular(x.ambient, x.f, x.omega);
  auto check = [&](const GPMorphism& composite, const GPModule& at, const char* what) {
    Verdict v = gp_equal(composite, gp_scale(gp_identity(at), x.omega), opts);
    if (!v.value) throw Error(ErrorKind::NotAFactorization, std::string(what) + " differs from omega*id", v.certainty);
  };
  check(gp_compose(x.g1, x.g0), x.second(), "g1*g0");
  check(gp_compose(x.g0, x.g1), x.first(), "g0*g1");
}

MFGObject mfg_make(const Poly& omega, const GPMorphism& g1, const GPMorphism& g0, const SolveOptions& opts) {
  MFGObject x{g1.source.ambient, g1.source.f, omega, g1, g0};
  mfg_validate(x, opts);
  return x;
}

MFGObject mfg_from_mf(const MFObject& x) {
  if (!x.ring->has_modulus()) throw Error(ErrorKind::InvalidRing, "lifting needs a quotient ring S0/(f)");
  RingPtr base = x.ring->base();
  Poly f = modulus_of(x.ring);
  GPModule g = gp_free(base, f, x.rank());
  PolyMatrix r1 = x.rho1.in_ring(base), r0 = x.rho0.in_ring(base);
  return {base, f, x.omega.in_ring(base), GPMorphism{g, g, r1, r1}, GPMorphism{g, g, r0, r0}};
}

MonGObject mong_validate(const RingPtr& ambient, const Poly& f, const Poly& omega, const GPMorphism& g1,
                         const SolveOptions& opts) {
  const GPModule& a = g1.source;
  const GPModule& b = g1.target;
  gp_validate(a);
  gp_validate(b);
  if (!same_ring(ambient, a.ambient) || f != a.f) throw Error(ErrorKind::RingMismatch, "g1 over a different ring");
  gpmor_validate(g1);
  require_omega_regular(ambient, f, omega);
  auto finish = [&](GPMorphism x) {
    x = gp_normalize(x);
    return MonGObject{ambient, f, omega, g1, std::move(x)};
  };

  if (is_trivial_presentation(a) && is_trivial_presentation(b) && a.rank() == b.rank()) {
    try {
      MonObject m = mon_validate(ambient, omega, g1.v, opts);
      return MonGObject{ambient, f, omega, g1, GPMorphism{b, a, m.g0, m.g0}};
    } catch (const Error&) {
    }
  }

  const std::size_t n1 = a.rank(), n0 = b.rank();
  const RingPtr& ring = ambient;
  auto labels = joint_labels(g1, nullptr, omega);
  const bool graded = use_graded(opts, labels.has_value());
  const int w = graded ? *omega.homogeneous_degree(ring->weights()) : 0;
  const int slack = max_degree_of({&a.presentation.rho1, &a.presentation.rho0, &b.presentation.rho1,
                                   &b.presentation.rho0, &g1.v, &g1.u}) +
                    omega.total_degree();

  auto build = [&](bool both) {
    LinearSystem sys(ring);
    sys.degree_hint = omega.total_degree();
    std::size_t vx, ux, w1, w2 = 0;
    if (graded) {
      const MFGLabels& l = *labels;
      vx = sys.add_graded("v", n1, n0, map_offsets(l.first.p0, l.second.p0, w));
      ux = sys.add_graded("u", n1, n0, map_offsets(l.first.p1, l.second.p1, w));
      w1 = sys.add_graded("w1", n0, n0, map_offsets(l.second.p1, l.second.p0, w));
      if (both) w2 = sys.add_graded("w2", n1, n1, map_offsets(l.first.p1, l.first.p0, w));
    } else {
      vx = sys.add_bounded("v", n1, n0);
      ux = sys.add_bounded("u", n1, n0);
      w1 = sys.add_bounded("w1", n0, n0);
      if (both) w2 = sys.add_bounded("w2", n1, n1);
      sys.degree_hint = slack;
    }
    sys.add_equation({MatTerm{vx, std::nullopt, b.rho1()}, MatTerm{ux, -a.rho1(), std::nullopt}}, PolyMatrix(ring, n1, n0));
    sys.add_equation({MatTerm{vx, g1.v, std::nullopt}, MatTerm{w1, -b.rho1(), std::nullopt}}, PolyMatrix::scalar(omega, n0));
    if (both)
      sys.add_equation({MatTerm{vx, std::nullopt, g1.v}, MatTerm{w2, -a.rho1(), std::nullopt}},
                       PolyMatrix::scalar(omega, n1));
    auto res = solve_bounded(sys, opts);
    return std::pair{res, std::pair{vx, ux}};
  };

  auto first = build(false).first;
  if (!first.solution)
    throw Error(ErrorKind::CokernelNotAnnihilated, "no X with g1*X = omega*id modulo the presentation", first.certainty);
  auto [full, idx2] = build(true);
  if (!full.solution)
    throw Error(ErrorKind::NotMono, "no companion X also satisfies X*g1 = omega*id", full.certainty);
  return finish(GPMorphism{b, a, (*full.solution)[idx2.first], (*full.solution)[idx2.second]});
}

MonGObject mong_from_mon(const MonObject& m, const Poly& f) {
  GPModule g = gp_free(m.ring, f, m.rank());
  return {m.ring, f, m.omega, GPMorphism{g, g, m.g1, m.g1}, GPMorphism{g, g, m.g0, m.g0}};
}

namespace {

void check_square(const GPMorphism& lhs, const GPMorphism& rhs, const char* what, const SolveOptions& opts) {
  Verdict v = gp_equal(lhs, rhs, opts);
  if (!v.value) throw Error(ErrorKind::SquareFails, what, v.certainty);
}

}  // namespace

MFGMorphism mfg_morphism(const MFGObject& source, const MFGObject& target, const GPMorphism& phi1,
                         const GPMorphism& phi0, const SolveOptions& opts) {
  if (!(phi1.source == source.first()) || !(phi1.target == target.first()) || !(phi0.source == source.second()) ||
      !(phi0.target == target.second()))
    throw Error(ErrorKind::ObjectMismatch, "morphism components between the wrong modules");
  gpmor_validate(phi1);
  gpmor_validate(phi0);
  check_square(gp_compose(target.g1, phi1), gp_compose(phi0, source.g1), "h1*phi1 != phi0*g1", opts);
  check_square(gp_compose(phi1, source.g0), gp_compose(target.g0, phi0), "phi1*g0 != h0*phi0", opts);
  return {source, target, phi1, phi0};
}

MonGMorphism mong_morphism(const MonGObject& source, const MonGObject& target, const GPMorphism& phi1,
                           const GPMorphism& phi0, const SolveOptions& opts) {
  if (!(phi1.source == source.first()) || !(phi1.target == target.first()) || !(phi0.source == source.second()) ||
      !(phi0.target == target.second()))
    throw Error(ErrorKind::ObjectMismatch, "morphism components between the wrong modules");
  gpmor_validate(phi1);
  gpmor_validate(phi0);
  check_square(gp_compose(target.g1, phi1), gp_compose(phi0, source.g1), "h1*phi1 != phi0*g1", opts);
  return {source, target, phi1, phi0};
}

MFGObject functor_F_g(const MonGObject& m) { return {m.ambient, m.f, m.omega, m.g1, m.g0}; }

MonGObject functor_U_g(const MFGObject& x) { return {x.ambient, x.f, x.omega, x.g1, x.g0}; }

MFGMorphism functor_F_g(const MonGMorphism& f, const SolveOptions& opts) {
  return mfg_morphism(functor_F_g(f.source), functor_F_g(f.target), f.phi1, f.phi0, opts);
}

MonGMorphism functor_U_g(const MFGMorphism& f) {
  return {functor_U_g(f.source), functor_U_g(f.target), f.phi1, f.phi0};
}

std::optional<MFGLabels> mfg_labels(const MFGObject& x) { return joint_labels(x.g1, &x.g0, x.omega); }

StableHomDim mfg_stable_hom_dim(const MFGObject& x, const MFGObject& y, const SolveOptions& opts) {
  if (!same_ring(x.ambient, y.ambient) || x.f != y.f || x.omega != y.omega)
    throw Error(ErrorKind::ObjectMismatch, "objects over different data");
  const RingPtr& ring = x.ambient;
  const int bound = opts.max_degree.value_or(0);
  StableHomDim out;
  out.degree_bound = bound;
  const GPModule &g1m = x.first(), &g0m = x.second(), &h1m = y.first(), &h0m = y.second();
  const std::size_t a1 = g1m.rank(), a0 = g0m.rank(), b1 = h1m.rank(), b0 = h0m.rank();
  if ((a1 == 0 && a0 == 0) || (b1 == 0 && b0 == 0)) return out;
  const PolyMatrix &rg1 = g1m.rho1(), &rg0 = g0m.rho1(), &rh1 = h1m.rho1(), &rh0 = h0m.rho1();

  // Offsets per unknown; nullopt entries mean bounded with the given bound.
  struct Spec {
    std::vector<int> offsets;
    int bound = 0;
  };
  auto add = [&](LinearSystem& sys, const char* name, std::size_t r, std::size_t c, const std::optional<Spec>& graded,
                 int b) {
    return graded ? sys.add_graded(name, r, c, graded->offsets) : sys.add_bounded(name, r, c, b);
  };

  auto lx = mfg_labels(x);
  auto ly = mfg_labels(y);
  auto wdeg = x.omega.homogeneous_degree(ring->weights());
  const bool graded = use_graded(opts, lx && ly && wdeg);
  const int slack = max_degree_of({&rg1, &rg0, &rh1, &rh0, &x.g1.v, &x.g0.v, &y.g1.v, &y.g0.v, &x.g1.u, &x.g0.u,
                                   &y.g1.u, &y.g0.u, &g1m.presentation.rho0, &g0m.presentation.rho0,
                                   &h1m.presentation.rho0, &h0m.presentation.rho0});

  auto count = [&](int d, const SolveOptions& o) -> std::size_t {
    auto off = [&](const std::vector<int>& tgt, const std::vector<int>& src, int shift) -> std::optional<Spec> {
      if (!graded) return std::nullopt;
      return Spec{map_offsets(tgt, src, shift), 0};
    };
    const int w = graded ? *wdeg : 0;
    const MFGLabels* X = graded ? &*lx : nullptr;
    const MFGLabels* Y = graded ? &*ly : nullptr;
    auto O = [&](bool y_first, bool y_p1, bool x_first, bool x_p1, int shift) -> std::optional<Spec> {
      if (!graded) return std::nullopt;
      const DegreeLabels& ly_ = y_first ? Y->first : Y->second;
      const DegreeLabels& lx_ = x_first ? X->first : X->second;
      return off(y_p1 ? ly_.p1 : ly_.p0, x_p1 ? lx_.p1 : lx_.p0, shift);
    };
    const int vb = d, ob = d + slack;

    LinearSystem mor(ring);
    std::size_t v1 = add(mor, "v1", b1, a1, O(true, false, true, false, d), vb);
    std::size_t u1 = add(mor, "u1", b1, a1, O(true, true, true, true, d), ob);
    std::size_t v0 = add(mor, "v0", b0, a0, O(false, false, false, false, d), vb);
    std::size_t u0 = add(mor, "u0", b0, a0, O(false, true, false, true, d), ob);
    std::size_t wa = add(mor, "wa", b0, a1, O(false, true, true, false, d), ob);
    std::size_t wb = add(mor, "wb", b1, a0, O(true, true, false, false, d + w), ob);
    mor.add_equation({MatTerm{v1, std::nullopt, rg1}, MatTerm{u1, -rh1, std::nullopt}}, PolyMatrix(ring, b1, a1));
    mor.add_equation({MatTerm{v0, std::nullopt, rg0}, MatTerm{u0, -rh0, std::nullopt}}, PolyMatrix(ring, b0, a0));
    mor.add_equation({MatTerm{v1, y.g1.v, std::nullopt}, MatTerm{v0, std::nullopt, -x.g1.v}, MatTerm{wa, -rh0, std::nullopt}},
                     PolyMatrix(ring, b0, a1));
    mor.add_equation({MatTerm{v1, std::nullopt, x.g0.v}, MatTerm{v0, -y.g0.v, std::nullopt}, MatTerm{wb, -rh1, std::nullopt}},
                     PolyMatrix(ring, b1, a0));
    const std::size_t total = span_dimension(ring, solution_space(mor, o).basis, {v1, v0});
    if (total == 0) return 0;

    LinearSystem hom(ring);
    v1 = add(hom, "v1", b1, a1, O(true, false, true, false, d), vb);
    v0 = add(hom, "v0", b0, a0, O(false, false, false, false, d), vb);
    std::size_t sv0 = add(hom, "sv0", b1, a0, O(true, false, false, false, d), ob);
    std::size_t su0 = add(hom, "su0", b1, a0, O(true, true, false, true, d), ob);
    std::size_t sv1 = add(hom, "sv1", b0, a1, O(false, false, true, false, d - w), ob);
    std::size_t su1 = add(hom, "su1", b0, a1, O(false, true, true, true, d - w), ob);
    std::size_t wc = add(hom, "wc", b0, a0, O(false, true, false, false, d), ob);
    std::size_t wd = add(hom, "wd", b1, a1, O(true, true, true, false, d), ob);
    hom.add_equation({MatTerm{sv0, std::nullopt, rg0}, MatTerm{su0, -rh1, std::nullopt}}, PolyMatrix(ring, b1, a0));
    hom.add_equation({MatTerm{sv1, std::nullopt, rg1}, MatTerm{su1, -rh0, std::nullopt}}, PolyMatrix(ring, b0, a1));
    hom.add_equation({MatTerm{v0}, MatTerm{sv0, -y.g1.v, std::nullopt}, MatTerm{sv1, std::nullopt, -x.g0.v},
                      MatTerm{wc, -rh0, std::nullopt}},
                     PolyMatrix(ring, b0, a0));
    hom.add_equation({MatTerm{v1}, MatTerm{sv1, -y.g0.v, std::nullopt}, MatTerm{sv0, std::nullopt, -x.g1.v},
                      MatTerm{wd, -rh1, std::nullopt}},
                     PolyMatrix(ring, b1, a1));
    return total - span_dimension(ring, solution_space(hom, o).basis, {v1, v0});
  };

  if (graded) {
    int d_min = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < b1; ++i)
      for (std::size_t j = 0; j < a1; ++j) d_min = std::min(d_min, lx->first.p0[j] - ly->first.p0[i]);
    for (std::size_t i = 0; i < b0; ++i)
      for (std::size_t j = 0; j < a0; ++j) d_min = std::min(d_min, lx->second.p0[j] - ly->second.p0[i]);
    for (int d = d_min; d <= bound; ++d) out.dim += count(d, opts);
    return out;
  }
  out.certainty = Certainty::bounded;
  SolveOptions fixed = opts;
  fixed.max_degree = bound;
  out.dim = count(bound, fixed);
  return out;
}

}  // namespace mfcat
