#include "mfcat/mon.hpp"

#include <random>

#include "internal.hpp"
#include "mfcat/gcd.hpp"

namespace mfcat {

namespace {

void require_compatible(const MonObject& x, const MonObject& y) {
  if (!same_ring(x.ring, y.ring)) throw Error(ErrorKind::RingMismatch, "objects over different rings");
  if (x.omega != y.omega) throw Error(ErrorKind::OmegaMismatch, "objects for different omega");
}

bool is_identity(const PolyMatrix& m) { return m == PolyMatrix::identity(m.ring(), m.rows()); }

PolyMatrix omega_identity(const MonObject& m, std::size_t n) { return PolyMatrix::scalar(m.omega, n); }

// [I; 0] and [0, I] style blocks.
PolyMatrix top_inclusion(const RingPtr& r, std::size_t n, std::size_t extra) {
  return vstack(PolyMatrix::identity(r, n), PolyMatrix(r, extra, n));
}
PolyMatrix bottom_inclusion(const RingPtr& r, std::size_t extra, std::size_t n) {
  return vstack(PolyMatrix(r, extra, n), PolyMatrix::identity(r, n));
}
PolyMatrix top_projection(const RingPtr& r, std::size_t n, std::size_t extra) {
  return hstack(PolyMatrix::identity(r, n), PolyMatrix(r, n, extra));
}
PolyMatrix bottom_projection(const RingPtr& r, std::size_t extra, std::size_t n) {
  return hstack(PolyMatrix(r, n, extra), PolyMatrix::identity(r, n));
}

std::optional<DegreeLabels> mon_labels(const MonObject& m) {
  if (m.labels) return m.labels;
  if (!m.omega.homogeneous_degree(m.ring->weights())) return std::nullopt;
  return infer_map_labels(m.g1);
}

// Companion of [[h, m], [0, z]] from the companions of h and z.
PolyMatrix triangular_companion(const MonObject& top, const MonObject& bottom, const PolyMatrix& m) {
  PolyMatrix num = top.g0 * m * bottom.g0;
  PolyMatrix n(num.ring(), num.rows(), num.cols());
  for (std::size_t i = 0; i < num.rows(); ++i)
    for (std::size_t j = 0; j < num.cols(); ++j) {
      if (num(i, j).is_zero()) continue;
      auto [q, r] = divide(num(i, j), top.omega);
      if (!r.is_zero()) throw Error(ErrorKind::CompanionAssertFailed, "triangular extension has no companion");
      n(i, j) = -q;
    }
  return block2x2(top.g0, n, PolyMatrix(m.ring(), bottom.rank(), top.rank()), bottom.g0);
}

MonObject triangular_object(const MonObject& top, const MonObject& bottom, const PolyMatrix& m) {
  MonObject out{top.ring, top.omega,
                block2x2(top.g1, m, PolyMatrix(m.ring(), bottom.rank(), top.rank()), bottom.g1),
                triangular_companion(top, bottom, m), std::nullopt};
  auto lt = mon_labels(top);
  auto lb = mon_labels(bottom);
  if (lt && lb) {
    DegreeLabels l{lt->p1, lt->p0};
    l.p1.insert(l.p1.end(), lb->p1.begin(), lb->p1.end());
    l.p0.insert(l.p0.end(), lb->p0.begin(), lb->p0.end());
    MFObject probe{out.ring, out.omega, out.g1, out.g0, l};
    try {
      mf_validate(probe);
      out.labels = l;
    } catch (const Error&) {
    }
  }
  return out;
}

// Builds a conflation from level maps and certificates, normalizing the
// sections so that r s = 0, then checks every identity exactly.
Conflation certify(MonMorphism inflation, MonMorphism deflation, PolyMatrix r1, PolyMatrix r0, PolyMatrix s1,
                   PolyMatrix s0) {
  s1 = s1 - inflation.phi1 * (r1 * s1);
  s0 = s0 - inflation.phi0 * (r0 * s0);
  auto level = [](const PolyMatrix& i, const PolyMatrix& p, const PolyMatrix& r, const PolyMatrix& s, int k) {
    const std::string at = "level " + std::to_string(k) + ": ";
    if (!(p * i).is_zero()) throw Error(ErrorKind::NotExact, at + "deflation after inflation is nonzero");
    if (!is_identity(r * i)) throw Error(ErrorKind::NotAnInflation, at + "retraction certificate fails");
    if (!is_identity(p * s)) throw Error(ErrorKind::NotADeflation, at + "section certificate fails");
    if (!is_identity(i * r + s * p)) throw Error(ErrorKind::NotExact, at + "kernel differs from image");
  };
  level(inflation.phi1, deflation.phi1, r1, s1, 1);
  level(inflation.phi0, deflation.phi0, r0, s0, 0);
  return {std::move(inflation), std::move(deflation), std::move(r1), std::move(r0), std::move(s1), std::move(s0)};
}

Certainty certainty_for(const PolyMatrix& a, const SolveOptions& opts) {
  return use_graded(opts, infer_map_labels(a).has_value()) ? Certainty::proven : Certainty::bounded;
}

std::optional<PolyMatrix> retraction_of(const PolyMatrix& a, const SolveOptions& opts) {
  if (a.cols() == 0) return PolyMatrix(a.ring(), 0, a.rows());
  return find_retraction(a, opts);
}

std::optional<PolyMatrix> section_of(const PolyMatrix& a, const SolveOptions& opts) {
  if (a.rows() == 0) return PolyMatrix(a.ring(), a.cols(), 0);
  return find_section(a, opts);
}

// X with X * a = target in bounded mode.
PolyMatrix solve_right_factor(const PolyMatrix& a, const PolyMatrix& target, const char* name,
                              const SolveOptions& opts) {
  const RingPtr& ring = target.ring();
  if (target.rows() == 0 || a.rows() == 0) {
    if (!target.is_zero())
      throw Error(ErrorKind::NoSolutionUpToDegree, std::string("no ") + name + " exists", Certainty::proven);
    return PolyMatrix(ring, target.rows(), a.rows());
  }
  SolveOptions bounded = opts;
  bounded.mode = Mode::bounded;
  LinearSystem sys(ring);
  std::size_t x = sys.add_bounded(name, target.rows(), a.rows());
  sys.add_equation({MatTerm{x, std::nullopt, a}}, target);
  auto res = solve_bounded(sys, bounded);
  if (!res.solution)
    throw Error(ErrorKind::NoSolutionUpToDegree,
                std::string("no ") + name + " up to degree " + std::to_string(res.degree_bound), Certainty::bounded);
  return res.solution->front();
}

MonMorphism checked(const MonObject& s, const MonObject& t, PolyMatrix phi1, PolyMatrix phi0) {
  return mon_morphism(s, t, std::move(phi1), std::move(phi0));
}

}  // namespace

MonObject mon_validate(const RingPtr& ring, const Poly& omega, const PolyMatrix& g1, const SolveOptions& opts) {
  if (!ring) throw Error(ErrorKind::InvalidRing, "object without a ring");
  if (ring->has_modulus()) throw Error(ErrorKind::ModulusPresent, "monomorphism objects need a free ring");
  if (!same_ring(g1.ring(), ring) || !same_ring(omega.ring(), ring))
    throw Error(ErrorKind::RingMismatch, "object data over different rings");
  if (!g1.is_square()) throw Error(ErrorKind::DimensionMismatch, "g1 must be square");
  if (!is_nonzerodivisor(omega)) throw Error(ErrorKind::OmegaZeroDivisor, "omega is a zero divisor");
  const std::size_t n = g1.rows();
  MonObject out{ring, omega, g1, PolyMatrix(ring, n, n), std::nullopt};
  if (n == 0) {
    out.labels = DegreeLabels{};
    return out;
  }
  if (!injectivity_test(g1)) throw Error(ErrorKind::NotInjective, "g1 is not injective");

  auto w = omega.homogeneous_degree(ring->weights());
  std::optional<DegreeLabels> labels = w ? infer_map_labels(g1) : std::nullopt;
  LinearSystem sys(ring);
  std::size_t x;
  const bool graded = use_graded(opts, labels.has_value());
  if (graded)
    x = sys.add_graded("g0", n, n, map_offsets(labels->p1, labels->p0, *w));
  else {
    sys.degree_hint = omega.total_degree();
    x = sys.add_bounded("g0", n, n);
  }
  sys.add_equation({MatTerm{x, g1, std::nullopt}}, PolyMatrix::scalar(omega, n));
  auto res = solve_bounded(sys, opts);
  if (!res.solution) {
    std::string detail = "no X with g1*X = omega*I";
    if (!graded) detail += " up to degree " + std::to_string(res.degree_bound);
    throw Error(ErrorKind::CokernelNotAnnihilated, detail, res.certainty);
  }
  out.g0 = res.solution->front();
  if (out.g0 * g1 != PolyMatrix::scalar(omega, n))
    throw Error(ErrorKind::CompanionAssertFailed, "X*g1 != omega*I for the solution of g1*X = omega*I");
  if (graded) out.labels = labels;
  return out;
}

MonObject mon_unchecked(const RingPtr& ring, const Poly& omega, const PolyMatrix& g1) {
  return {ring, omega, g1, PolyMatrix(ring, 0, 0), std::nullopt};
}

void monmor_validate(const MonMorphism& f) {
  const MonObject& x = f.source;
  const MonObject& y = f.target;
  require_compatible(x, y);
  if (!same_ring(f.phi1.ring(), x.ring) || !same_ring(f.phi0.ring(), x.ring))
    throw Error(ErrorKind::RingMismatch, "morphism matrices over a different ring");
  if (f.phi1.rows() != y.rank() || f.phi1.cols() != x.rank() || f.phi0.rows() != y.rank() ||
      f.phi0.cols() != x.rank())
    throw Error(ErrorKind::DimensionMismatch, "morphism matrices must be " + std::to_string(y.rank()) + "x" +
                                                  std::to_string(x.rank()));
  if (y.g1 * f.phi1 != f.phi0 * x.g1) throw Error(ErrorKind::SquareFails, "g1'*phi1 != phi0*g1");
  if (f.phi1 * x.g0 != y.g0 * f.phi0) throw Error(ErrorKind::SquareFails, "phi1*g0 != g0'*phi0");
}

MonMorphism mon_morphism(const MonObject& source, const MonObject& target, PolyMatrix phi1, PolyMatrix phi0) {
  MonMorphism f{source, target, std::move(phi1), std::move(phi0)};
  monmor_validate(f);
  return f;
}

MonMorphism mon_identity(const MonObject& x) {
  PolyMatrix id = PolyMatrix::identity(x.ring, x.rank());
  return {x, x, id, id};
}

MonMorphism mon_zero_morphism(const MonObject& x, const MonObject& y) {
  require_compatible(x, y);
  PolyMatrix z(x.ring, y.rank(), x.rank());
  return {x, y, z, z};
}

MonMorphism mon_compose(const MonMorphism& psi, const MonMorphism& phi) {
  if (!(phi.target == psi.source))
    throw Error(ErrorKind::ObjectMismatch, "target of the first map is not the source of the second");
  return mon_morphism(phi.source, psi.target, psi.phi1 * phi.phi1, psi.phi0 * phi.phi0);
}

MonObject mon_dsum(const MonObject& x, const MonObject& y) {
  require_compatible(x, y);
  MonObject out{x.ring, x.omega, block_diag(x.g1, y.g1), block_diag(x.g0, y.g0), std::nullopt};
  auto lx = mon_labels(x);
  auto ly = mon_labels(y);
  if (lx && ly) {
    DegreeLabels l = *lx;
    l.p1.insert(l.p1.end(), ly->p1.begin(), ly->p1.end());
    l.p0.insert(l.p0.end(), ly->p0.begin(), ly->p0.end());
    out.labels = l;
  }
  return out;
}

MFObject functor_F(const MonObject& m) { return mf_make(m.ring, m.omega, m.g1, m.g0, m.labels); }

MFMorphism functor_F(const MonMorphism& f) {
  return mf_morphism(functor_F(f.source), functor_F(f.target), f.phi1, f.phi0);
}

MonObject functor_U(const MFObject& x) { return {x.ring, x.omega, x.rho1, x.rho0, x.labels}; }

MonMorphism functor_U(const MFMorphism& f) {
  return {functor_U(f.source), functor_U(f.target), f.phi1, f.phi0};
}

Conflation conflation_validate(const MonMorphism& inflation, const MonMorphism& deflation, const SolveOptions& opts) {
  if (inflation.target.g1 != deflation.source.g1)
    throw Error(ErrorKind::ObjectMismatch, "inflation target differs from deflation source");
  auto revalidate = [&](const MonObject& m, const char* which) {
    try {
      MonObject v = mon_validate(m.ring, m.omega, m.g1, opts);
      if (m.labels) v.labels = m.labels;
      return v;
    } catch (const Error& e) {
      throw Error(ErrorKind::TermInvalid, std::string(which) + " term: " + std::string(to_string(e.kind())) + ": " +
                                              e.detail(),
                  e.certainty());
    }
  };
  MonObject x = revalidate(inflation.source, "left");
  MonObject e = revalidate(inflation.target, "middle");
  MonObject z = revalidate(deflation.target, "right");
  MonMorphism iota = mon_morphism(x, e, inflation.phi1, inflation.phi0);
  MonMorphism pi = mon_morphism(e, z, deflation.phi1, deflation.phi0);

  auto level = [&](const PolyMatrix& i, const PolyMatrix& p, int k) {
    const std::string at = "level " + std::to_string(k) + ": ";
    if (!(p * i).is_zero()) throw Error(ErrorKind::NotExact, at + "deflation after inflation is nonzero");
    auto r = retraction_of(i, opts);
    if (!r) throw Error(ErrorKind::NotExact, at + "inflation is not a split monomorphism", certainty_for(i, opts));
    auto s = section_of(p, opts);
    if (!s) throw Error(ErrorKind::NotExact, at + "deflation is not a split epimorphism", certainty_for(p, opts));
    return std::pair{*r, *s};
  };
  auto [r1, s1] = level(iota.phi1, pi.phi1, 1);
  auto [r0, s0] = level(iota.phi0, pi.phi0, 0);
  return certify(std::move(iota), std::move(pi), std::move(r1), std::move(r0), std::move(s1), std::move(s0));
}

Pushout pushout_inflation(const Conflation& c, const MonMorphism& theta) {
  if (!(theta.source == c.left())) throw Error(ErrorKind::SourceMismatch, "theta does not start at the inflation source");
  monmor_validate(theta);
  certify(c.inflation, c.deflation, c.r1, c.r0, c.s1, c.s0);
  const MonObject& t = theta.target;
  const MonObject& z = c.right();
  const RingPtr& ring = t.ring;
  const PolyMatrix& e = c.middle().g1;
  PolyMatrix m = (theta.phi0 * c.r0 * e - t.g1 * theta.phi1 * c.r1) * c.s1;
  MonObject obj = triangular_object(t, z, m);
  const std::size_t nt = t.rank(), nz = z.rank();
  MonMorphism iota = checked(t, obj, top_inclusion(ring, nt, nz), top_inclusion(ring, nt, nz));
  MonMorphism pi = checked(obj, z, bottom_projection(ring, nt, nz), bottom_projection(ring, nt, nz));
  Conflation out = certify(iota, pi, top_projection(ring, nt, nz), top_projection(ring, nt, nz),
                           bottom_inclusion(ring, nt, nz), bottom_inclusion(ring, nt, nz));
  MonMorphism map = checked(c.middle(), obj, vstack(theta.phi1 * c.r1, c.deflation.phi1),
                            vstack(theta.phi0 * c.r0, c.deflation.phi0));
  return {std::move(obj), std::move(out), std::move(map)};
}

Pullback pullback_deflation(const Conflation& c, const MonMorphism& theta) {
  if (!(theta.target == c.right())) throw Error(ErrorKind::SourceMismatch, "theta does not end at the deflation target");
  monmor_validate(theta);
  certify(c.inflation, c.deflation, c.r1, c.r0, c.s1, c.s0);
  const MonObject& x = c.left();
  const MonObject& w = theta.source;
  const RingPtr& ring = x.ring;
  const PolyMatrix& e = c.middle().g1;
  PolyMatrix m = c.r0 * (e * c.s1 * theta.phi1 - c.s0 * theta.phi0 * w.g1);
  MonObject obj = triangular_object(x, w, m);
  const std::size_t nx = x.rank(), nw = w.rank();
  MonMorphism iota = checked(x, obj, top_inclusion(ring, nx, nw), top_inclusion(ring, nx, nw));
  MonMorphism pi = checked(obj, w, bottom_projection(ring, nx, nw), bottom_projection(ring, nx, nw));
  Conflation out = certify(iota, pi, top_projection(ring, nx, nw), top_projection(ring, nx, nw),
                           bottom_inclusion(ring, nx, nw), bottom_inclusion(ring, nx, nw));
  MonMorphism map = checked(obj, c.middle(), hstack(c.inflation.phi1, c.s1 * theta.phi1),
                            hstack(c.inflation.phi0, c.s0 * theta.phi0));
  return {std::move(obj), std::move(out), std::move(map)};
}

Conflation compose_inflations(const Conflation& first, const Conflation& second) {
  if (!(first.middle() == second.left()))
    throw Error(ErrorKind::ObjectMismatch, "first inflation does not end where the second starts");
  certify(first.inflation, first.deflation, first.r1, first.r0, first.s1, first.s0);
  certify(second.inflation, second.deflation, second.r1, second.r0, second.s1, second.s0);
  const MonObject& e = second.middle();
  const PolyMatrix k1 = second.inflation.phi1 * first.inflation.phi1;
  const PolyMatrix k0 = second.inflation.phi0 * first.inflation.phi0;
  const PolyMatrix rho1 = vstack(first.deflation.phi1 * second.r1, second.deflation.phi1);
  const PolyMatrix rho0 = vstack(first.deflation.phi0 * second.r0, second.deflation.phi0);
  const PolyMatrix sigma1 = hstack(second.inflation.phi1 * first.s1, second.s1);
  const PolyMatrix cok = rho0 * e.g1 * sigma1;
  MonObject c = mon_unchecked(e.ring, e.omega, cok);
  MonMorphism kappa{first.left(), e, k1, k0};
  MonMorphism rho{e, c, rho1, rho0};
  return conflation_validate(kappa, rho);
}

Conflation projective_envelope(const MonObject& m) {
  const RingPtr& ring = m.ring;
  const std::size_t n = m.rank();
  const PolyMatrix id = PolyMatrix::identity(ring, n);
  const PolyMatrix zero(ring, n, n);
  MonObject mid{ring, m.omega, block_diag(id, omega_identity(m, n)), block_diag(omega_identity(m, n), id),
                std::nullopt};
  if (auto l = mon_labels(m)) {
    auto w = *m.omega.homogeneous_degree(ring->weights());
    // P1 (+) P0 at level 1 maps by id and omega to P1 (+) P0 at level 0.
    DegreeLabels ml{l->p1, l->p1};
    for (int d : l->p0) ml.p1.push_back(d - w);
    ml.p0.insert(ml.p0.end(), l->p0.begin(), l->p0.end());
    mid.labels = ml;
  }
  MonObject k{ring, m.omega, m.g0, m.g1, std::nullopt};
  if (auto l = mon_labels(m)) {
    auto w = *m.omega.homogeneous_degree(ring->weights());
    DegreeLabels kl{l->p0, l->p1};
    for (int& d : kl.p1) d -= w;
    k.labels = kl;
  }
  MonMorphism kappa = checked(k, mid, vstack(m.g0, -id), vstack(id, -m.g1));
  MonMorphism phi = checked(mid, m, hstack(id, m.g0), hstack(m.g1, id));
  return certify(kappa, phi, hstack(zero, -id), hstack(id, zero), vstack(id, zero), vstack(zero, id));
}

Conflation injective_envelope(const MonObject& m, std::size_t pad, const SolveOptions& opts) {
  const RingPtr& ring = m.ring;
  const std::size_t n = m.rank(), big = n + pad;
  const PolyMatrix h = top_inclusion(ring, n, pad);   // G_i -> Q_i
  const PolyMatrix f = bottom_projection(ring, n, pad);  // Q_i -> G'_i
  const PolyMatrix ht = h.transpose(), ft = f.transpose();
  const PolyMatrix idq = PolyMatrix::identity(ring, big);
  const PolyMatrix wq = omega_identity(m, big);

  const PolyMatrix alpha = solve_right_factor(h, h * m.g1, "alpha", opts);
  const PolyMatrix beta = solve_right_factor(h, h * m.g0, "beta", opts);
  const PolyMatrix gamma = solve_right_factor(f, wq - beta * alpha, "gamma", opts);
  const PolyMatrix gamma2 = solve_right_factor(f, wq - alpha * beta, "gamma'", opts);
  const PolyMatrix eps = solve_right_factor(f, f * alpha, "epsilon", opts);
  const PolyMatrix eps2 = solve_right_factor(f, f * beta, "epsilon'", opts);

  MonObject mid{ring, m.omega, block_diag(wq, idq), block_diag(idq, wq), std::nullopt};
  const PolyMatrix l1 = block2x2(gamma, -beta, eps, f);
  const PolyMatrix l0 = block2x2(f, eps2, -alpha, gamma2);
  MonObject cok{ring, m.omega, l1, l0, std::nullopt};
  if (l1 * l0 != PolyMatrix::scalar(m.omega, l1.rows()) || l0 * l1 != PolyMatrix::scalar(m.omega, l1.rows()))
    throw Error(ErrorKind::CompanionAssertFailed, "envelope cokernel matrices do not compose to omega");

  MonMorphism phi = checked(m, mid, vstack(h, h * m.g1), vstack(h * m.g0, h));
  const PolyMatrix zc(ring, pad, big);
  MonMorphism psi = checked(mid, cok, block2x2(f, zc, -alpha, idq), block2x2(idq, -beta, zc, f));
  const PolyMatrix zn(ring, n, big);
  return certify(phi, psi, hstack(ht, zn), hstack(zn, ht), block2x2(ft, PolyMatrix(ring, big, big), alpha * ft, idq),
                 block2x2(idq, beta * ft, PolyMatrix(ring, big, big), ft));
}

bool is_proj_inj(const MonObject& m) { return mf_reduce(functor_F(m)).reduced.rank() == 0; }

Verdict stable_zero(const MonMorphism& f, const SolveOptions& opts) { return mf_null_homotopic(functor_F(f), opts); }

std::optional<MonMorphism> mon_lift(const MonMorphism& deflation, const MonMorphism& f, const SolveOptions& opts) {
  if (!(f.target == deflation.target)) throw Error(ErrorKind::ObjectMismatch, "map does not end at the deflation target");
  const MonObject& t = f.source;
  const MonObject& e = deflation.source;
  const RingPtr& ring = t.ring;
  SolveOptions bounded = opts;
  bounded.mode = Mode::bounded;
  LinearSystem sys(ring);
  std::size_t p1 = sys.add_bounded("psi1", e.rank(), t.rank());
  std::size_t p0 = sys.add_bounded("psi0", e.rank(), t.rank());
  sys.add_equation({MatTerm{p1, deflation.phi1, std::nullopt}}, f.phi1);
  sys.add_equation({MatTerm{p0, deflation.phi0, std::nullopt}}, f.phi0);
  sys.add_equation({MatTerm{p1, e.g1, std::nullopt}, MatTerm{p0, std::nullopt, -t.g1}}, PolyMatrix(ring, e.rank(), t.rank()));
  auto res = solve_bounded(sys, bounded);
  if (!res.solution) return std::nullopt;
  return mon_morphism(t, e, (*res.solution)[p1], (*res.solution)[p0]);
}

std::optional<MonMorphism> mon_extend(const MonMorphism& inflation, const MonMorphism& f, const SolveOptions& opts) {
  if (!(f.source == inflation.source))
    throw Error(ErrorKind::ObjectMismatch, "map does not start at the inflation source");
  const MonObject& e = inflation.target;
  const MonObject& t = f.target;
  const RingPtr& ring = t.ring;
  SolveOptions bounded = opts;
  bounded.mode = Mode::bounded;
  LinearSystem sys(ring);
  std::size_t p1 = sys.add_bounded("psi1", t.rank(), e.rank());
  std::size_t p0 = sys.add_bounded("psi0", t.rank(), e.rank());
  sys.add_equation({MatTerm{p1, std::nullopt, inflation.phi1}}, f.phi1);
  sys.add_equation({MatTerm{p0, std::nullopt, inflation.phi0}}, f.phi0);
  sys.add_equation({MatTerm{p1, t.g1, std::nullopt}, MatTerm{p0, std::nullopt, -e.g1}}, PolyMatrix(ring, t.rank(), e.rank()));
  auto res = solve_bounded(sys, bounded);
  if (!res.solution) return std::nullopt;
  return mon_morphism(e, t, (*res.solution)[p1], (*res.solution)[p0]);
}

MonObject mon_generate(std::uint64_t seed, const RingPtr& ring, const Poly& omega, const GenerateOptions& opts) {
  MonObject m = functor_U(mf_generate(seed, ring, omega, opts));
  MonObject v = mon_validate(ring, omega, m.g1);
  if (v.g0 != m.g0) throw Error(ErrorKind::CompanionAssertFailed, "solved companion differs from the factorization");
  return m;
}

namespace {

// Random matrix src -> tgt; homogeneous of degree `shift` when labels are given.
PolyMatrix random_block(const RingPtr& ring, std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                        const std::vector<int>* tgt, const std::vector<int>* src, int shift) {
  PolyMatrix out(ring, rows, cols);
  const auto weights = ring->weights();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Monomial> monos;
      if (tgt) {
        int d = (*tgt)[i] - (*src)[j] + shift;
        if (d < 0 || d > 3) continue;
        monos = monomials_of_degree(*ring, weights, d);
      } else {
        monos = monomials_up_to(*ring, 1);
      }
      std::vector<Term> terms;
      for (const auto& mono : monos) {
        Scalar c = detail::random_scalar(ring->field(), rng);
        if (c != 0) terms.push_back({mono, c});
      }
      out(i, j) = Poly::from_terms(ring, terms);
    }
  return out;
}

// Invertible matrix built from scalar elementary operations that preserve `labels`.
std::pair<PolyMatrix, PolyMatrix> random_unimodular(const RingPtr& ring, std::mt19937_64& rng, std::size_t n,
                                                    const std::vector<int>* labels) {
  PolyMatrix u = PolyMatrix::identity(ring, n), v = PolyMatrix::identity(ring, n);
  if (n < 2) return {u, v};
  for (std::size_t step = 0; step < 2 * n; ++step) {
    std::size_t i = rng() % n, k = rng() % n;
    if (i == k || (labels && (*labels)[i] != (*labels)[k])) continue;
    Poly c = Poly::constant(ring, detail::random_nonzero(ring->field(), rng));
    detail::add_row(u, k, i, c);    // u <- E u
    detail::add_col(v, i, k, -c);   // v <- v E^-1
  }
  return {u, v};
}

}  // namespace

Conflation mon_random_extension(std::uint64_t seed, const MonObject& x, const MonObject& z) {
  require_compatible(x, z);
  const RingPtr& ring = x.ring;
  std::mt19937_64 rng(seed);
  auto lx = mon_labels(x);
  auto lz = mon_labels(z);
  const bool graded = lx && lz;
  PolyMatrix a = random_block(ring, rng, x.rank(), z.rank(), graded ? &lx->p1 : nullptr, graded ? &lz->p1 : nullptr, 0);
  PolyMatrix b = random_block(ring, rng, x.rank(), z.rank(), graded ? &lx->p0 : nullptr, graded ? &lz->p0 : nullptr, 0);
  MonObject e = triangular_object(x, z, x.g1 * a + b * z.g1);
  if (graded && !e.labels) {
    DegreeLabels l = *lx;
    l.p1.insert(l.p1.end(), lz->p1.begin(), lz->p1.end());
    l.p0.insert(l.p0.end(), lz->p0.begin(), lz->p0.end());
    e.labels = l;
  }
  const std::size_t n = e.rank(), nx = x.rank(), nz = z.rank();
  auto [u1, u1i] = random_unimodular(ring, rng, n, e.labels ? &e.labels->p1 : nullptr);
  auto [u0, u0i] = random_unimodular(ring, rng, n, e.labels ? &e.labels->p0 : nullptr);
  MonObject d{ring, x.omega, u0 * e.g1 * u1i, u1 * e.g0 * u0i, e.labels};
  MonMorphism iota = checked(x, d, u1 * top_inclusion(ring, nx, nz), u0 * top_inclusion(ring, nx, nz));
  MonMorphism pi = checked(d, z, bottom_projection(ring, nx, nz) * u1i, bottom_projection(ring, nx, nz) * u0i);
  return certify(iota, pi, top_projection(ring, nx, nz) * u1i, top_projection(ring, nx, nz) * u0i,
                 u1 * bottom_inclusion(ring, nx, nz), u0 * bottom_inclusion(ring, nx, nz));
}

MonMorphism mon_random_morphism(std::uint64_t seed, const MonObject& x, const MonObject& y, int degree) {
  return functor_U(mf_random_morphism(seed, functor_F(x), functor_F(y), degree));
}

}  // namespace mfcat
