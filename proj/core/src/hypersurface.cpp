#include "mfcat/hypersurface.hpp"

#include <algorithm>
#include <limits>

#include "mfcat/gcd.hpp"

namespace mfcat {

namespace {

bool labels_fit(const PolyMatrix& a, const DegreeLabels& l) {
  if (l.p0.size() != a.rows() || l.p1.size() != a.cols()) return false;
  auto degrees = map_degrees(a, l.p0, l.p1, a.ring()->weights());
  return degrees.empty() || (degrees.size() == 1 && *degrees.begin() == 0);
}

// The degree bound of a hom computation does not limit the companion search.
SolveOptions companion_options(SolveOptions opts) {
  opts.max_degree.reset();
  return opts;
}

}  // namespace

void rmod_validate(const RModulePresentation& p) {
  if (!p.ring) throw Error(ErrorKind::InvalidRing, "presentation without a ring");
  if (p.ring->has_modulus()) throw Error(ErrorKind::ModulusPresent, "presentations are stored over the free ring");
  if (!same_ring(p.omega.ring(), p.ring) || !same_ring(p.A.ring(), p.ring))
    throw Error(ErrorKind::RingMismatch, "presentation data over different rings");
  if (!is_nonzerodivisor(p.omega)) throw Error(ErrorKind::OmegaZeroDivisor, "omega is a zero divisor");
  if (p.labels) {
    if (p.labels->p0.size() != p.A.rows() || p.labels->p1.size() != p.A.cols())
      throw Error(ErrorKind::DimensionMismatch, "labels do not match the shape of A");
    if (!labels_fit(p.A, *p.labels)) throw Error(ErrorKind::NotHomogeneous, "A is not of degree 0 for the labels");
  }
}

RModulePresentation rmod_make(const Poly& omega, PolyMatrix A, std::optional<DegreeLabels> labels) {
  RModulePresentation p{omega.ring(), omega, std::move(A), std::move(labels)};
  rmod_validate(p);
  return p;
}

RModulePresentation rmod_pad(const RModulePresentation& p) {
  rmod_validate(p);
  const std::size_t n = p.A.rows();
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < p.A.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i) zero = p.A(i, j).is_zero();
    if (!zero) keep.push_back(j);
  }
  RModulePresentation out = p;
  out.A = p.A.select_cols(keep);
  if (out.labels) {
    std::vector<int> p1;
    for (std::size_t j : keep) p1.push_back(p.labels->p1[j]);
    out.labels->p1 = std::move(p1);
  }
  if (out.A.cols() > n)
    throw Error(ErrorKind::NotMCM, "more independent relations than generators; no square companion exists");

  const auto w = p.omega.homogeneous_degree(p.ring->weights());
  if (out.labels && !w) out.labels.reset();
  for (std::size_t i = 0; i < n && out.A.cols() < n; ++i) {
    bool zero_row = true;
    for (std::size_t j = 0; j < out.A.cols() && zero_row; ++j) zero_row = out.A(i, j).is_zero();
    if (!zero_row) continue;
    PolyMatrix col(p.ring, n, 1);
    col(i, 0) = p.omega;
    out.A = hstack(out.A, col);
    if (out.labels) out.labels->p1.push_back(out.labels->p0[i] - *w);
  }
  if (out.A.cols() != n)
    throw Error(ErrorKind::NonSquare, std::to_string(n) + " generators but only " + std::to_string(out.A.cols()) +
                                          " relations after padding free summands");
  return out;
}

MonObject functor_T(const RModulePresentation& p, const SolveOptions& opts) {
  RModulePresentation padded = rmod_pad(p);
  const std::size_t n = padded.A.rows();
  SolveOptions o = opts;
  // A companion is omega * A^{-1}; its entries have degree at most this bound.
  const int complete = p.omega.total_degree() + static_cast<int>(n > 0 ? n - 1 : 0) * std::max(0, padded.A.max_total_degree());
  if (!o.max_degree) o.max_degree = complete;
  o.degree_cap = std::max(o.degree_cap, *o.max_degree);
  try {
    MonObject m = mon_validate(p.ring, p.omega, padded.A, o);
    if (padded.labels) m.labels = padded.labels;
    return m;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CokernelNotAnnihilated && e.kind() != ErrorKind::NotInjective) throw;
    Certainty c = e.certainty();
    if (e.kind() == ErrorKind::NotInjective || *o.max_degree >= complete) c = Certainty::proven;
    throw Error(ErrorKind::NotMCM, std::string(to_string(e.kind())) + ": " + e.detail(), c);
  }
}

MFObject eisenbud_mf(const RModulePresentation& p, const SolveOptions& opts) { return functor_F(functor_T(p, opts)); }

Verdict presentation_equivalent(const RModulePresentation& p, const RModulePresentation& q, const SolveOptions& opts) {
  rmod_validate(p);
  rmod_validate(q);
  if (!same_ring(p.ring, q.ring)) throw Error(ErrorKind::RingMismatch, "presentations over different rings");
  if (p.omega != q.omega) throw Error(ErrorKind::OmegaMismatch, "presentations over different quotients");
  if (p.A.rows() != q.A.rows()) return {false, Certainty::proven};
  const RingPtr& ring = p.ring;
  const std::size_t n = p.A.rows();
  auto w = p.omega.homogeneous_degree(ring->weights());

  std::optional<DegreeLabels> la, lb;
  if (w) {
    LabelSolver solver(ring->weights());
    std::size_t p0 = solver.add_nodes(n, true);
    std::size_t pa = solver.add_nodes(p.A.cols(), false);
    std::size_t pb = solver.add_nodes(q.A.cols(), false);
    bool ok = solver.add_map(p.A, p0, pa, 0) && solver.add_map(q.A, p0, pb, 0);
    if (p.labels)
      for (std::size_t i = 0; i < n && ok; ++i) solver.add_difference(p0 + i, p0, p.labels->p0[i] - p.labels->p0[0]);
    auto labels = ok ? solver.solve() : std::nullopt;
    if (labels) {
      auto at = [&](std::size_t first, std::size_t count) {
        return std::vector<int>(labels->begin() + static_cast<long>(first),
                                labels->begin() + static_cast<long>(first + count));
      };
      la = DegreeLabels{at(pa, p.A.cols()), at(p0, n)};
      lb = DegreeLabels{at(pb, q.A.cols()), at(p0, n)};
    }
  }
  const bool graded = use_graded(opts, la.has_value());

  // target = a * X + omega * Z
  auto factors = [&](const PolyMatrix& a, const PolyMatrix& target, const DegreeLabels* al,
                     const DegreeLabels* tl) -> Verdict {
    if (target.cols() == 0) return {true, Certainty::proven};
    LinearSystem sys(ring);
    std::size_t x, z;
    if (graded) {
      x = sys.add_graded("X", a.cols(), target.cols(), map_offsets(al->p1, tl->p1, 0));
      z = sys.add_graded("Z", n, target.cols(), map_offsets(al->p0, tl->p1, -*w));
    } else {
      x = sys.add_bounded("X", a.cols(), target.cols());
      z = sys.add_bounded("Z", n, target.cols());
    }
    sys.add_equation({MatTerm{x, a, std::nullopt}, MatTerm{z, PolyMatrix::scalar(p.omega, n), std::nullopt}}, target);
    auto res = solve_bounded(sys, opts);
    return {res.solution.has_value(), res.solution ? Certainty::proven : res.certainty};
  };
  Verdict ab = factors(p.A, q.A, la ? &*la : nullptr, lb ? &*lb : nullptr);
  if (!ab.value) return ab;
  return factors(q.A, p.A, lb ? &*lb : nullptr, la ? &*la : nullptr);
}

StableHomDim r_stable_hom_dim(const RModulePresentation& p, const RModulePresentation& q, const SolveOptions& opts) {
  if (!same_ring(p.ring, q.ring)) throw Error(ErrorKind::RingMismatch, "presentations over different rings");
  if (p.omega != q.omega) throw Error(ErrorKind::OmegaMismatch, "presentations over different quotients");
  const MonObject tx = functor_T(p, companion_options(opts));
  const MonObject ty = functor_T(q, companion_options(opts));
  const RingPtr& ring = p.ring;
  const PolyMatrix &a = tx.g1, &b = tx.g0, &a2 = ty.g1, &b2 = ty.g0;
  const std::size_t n = a.rows(), m = a2.rows();
  const int bound = opts.max_degree.value_or(0);
  StableHomDim out;
  out.degree_bound = bound;
  if (n == 0 || m == 0) return out;

  auto wdeg = p.omega.homogeneous_degree(ring->weights());
  const bool graded = use_graded(opts, tx.labels && ty.labels && wdeg);
  const int slack = std::max({0, a.max_total_degree(), b.max_total_degree(), a2.max_total_degree(),
                              b2.max_total_degree()});

  // Maps on generators v with v*A = A'*u, modulo v = A'*w + y*B.
  auto count = [&](int d, const SolveOptions& o) -> std::size_t {
    const DegreeLabels* X = graded ? &*tx.labels : nullptr;
    const DegreeLabels* Y = graded ? &*ty.labels : nullptr;
    const int w = graded ? *wdeg : 0;
    auto add = [&](LinearSystem& sys, const char* name, const std::vector<int>* tgt, const std::vector<int>* src,
                   int shift, int b) {
      return graded ? sys.add_graded(name, tgt->size(), src->size(), map_offsets(*tgt, *src, shift))
                    : sys.add_bounded(name, m, n, b);
    };
    LinearSystem mor(ring);
    std::size_t v = add(mor, "v", Y ? &Y->p0 : nullptr, X ? &X->p0 : nullptr, d, d);
    std::size_t u = add(mor, "u", Y ? &Y->p1 : nullptr, X ? &X->p1 : nullptr, d, d + slack);
    mor.add_equation({MatTerm{v, std::nullopt, a}, MatTerm{u, -a2, std::nullopt}}, PolyMatrix(ring, m, n));
    const std::size_t total = span_dimension(ring, solution_space(mor, o).basis, {v});
    if (total == 0) return 0;

    LinearSystem deg(ring);
    v = add(deg, "v", Y ? &Y->p0 : nullptr, X ? &X->p0 : nullptr, d, d);
    std::size_t wk = add(deg, "w", Y ? &Y->p1 : nullptr, X ? &X->p0 : nullptr, d, d + slack);
    std::size_t y = add(deg, "y", Y ? &Y->p0 : nullptr, X ? &X->p1 : nullptr, d - w, d + slack);
    deg.add_equation({MatTerm{v}, MatTerm{wk, -a2, std::nullopt}, MatTerm{y, std::nullopt, -b}}, PolyMatrix(ring, m, n));
    return total - span_dimension(ring, solution_space(deg, o).basis, {v});
  };

  if (graded) {
    int d_min = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) d_min = std::min(d_min, tx.labels->p0[j] - ty.labels->p0[i]);
    for (int d = d_min; d <= bound; ++d) out.dim += count(d, opts);
    return out;
  }
  out.certainty = Certainty::bounded;
  SolveOptions fixed = opts;
  fixed.max_degree = bound;
  out.dim = count(bound, fixed);
  return out;
}

TCompareReport t_compare(const RModulePresentation& p, const RModulePresentation& q, const SolveOptions& opts) {
  TCompareReport out;
  out.r = r_stable_hom_dim(p, q, opts);
  out.mon = mf_stable_hom_dim(functor_F(functor_T(p, companion_options(opts))),
                              functor_F(functor_T(q, companion_options(opts))), opts);
  out.equal = out.r.dim == out.mon.dim;
  return out;
}

}  // namespace mfcat
