#include "mfcat/solver.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "mfcat/linalg.hpp"

namespace mfcat {

std::size_t LinearSystem::add_unknown(Unknown u) {
  if (u.graded && u.offsets.size() != u.rows * u.cols)
    throw Error(ErrorKind::DimensionMismatch, "unknown '" + u.name + "': offsets do not match its shape");
  unknowns_.push_back(std::move(u));
  return unknowns_.size() - 1;
}

std::size_t LinearSystem::add_graded(std::string name, std::size_t rows, std::size_t cols, std::vector<int> offsets,
                                     std::vector<int> shifts) {
  Unknown u;
  u.name = std::move(name);
  u.rows = rows;
  u.cols = cols;
  u.graded = true;
  u.offsets = std::move(offsets);
  std::set<int> distinct(shifts.begin(), shifts.end());
  u.shifts.assign(distinct.begin(), distinct.end());
  return add_unknown(std::move(u));
}

std::size_t LinearSystem::add_bounded(std::string name, std::size_t rows, std::size_t cols, std::optional<int> bound) {
  Unknown u;
  u.name = std::move(name);
  u.rows = rows;
  u.cols = cols;
  u.bound = bound;
  return add_unknown(std::move(u));
}

void LinearSystem::add_equation(std::vector<MatTerm> terms, PolyMatrix target) {
  for (const auto& t : terms) {
    if (t.unknown >= unknowns_.size()) throw Error(ErrorKind::DimensionMismatch, "term refers to unknown index out of range");
    const Unknown& u = unknowns_[t.unknown];
    std::size_t out_rows = t.left ? t.left->rows() : u.rows;
    std::size_t out_cols = t.right ? t.right->cols() : u.cols;
    if ((t.left && t.left->cols() != u.rows) || (t.right && t.right->rows() != u.cols) ||
        out_rows != target.rows() || out_cols != target.cols())
      throw Error(ErrorKind::DimensionMismatch, "equation term with unknown '" + u.name + "' has inconsistent shape");
    if ((t.left && !same_ring(t.left->ring(), ring_)) || (t.right && !same_ring(t.right->ring(), ring_)))
      throw Error(ErrorKind::RingMismatch, "equation term over a different ring");
  }
  if (!same_ring(target.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "equation target over a different ring");
  equations_.push_back({std::move(terms), std::move(target)});
}

bool LinearSystem::fully_graded() const {
  return std::all_of(unknowns_.begin(), unknowns_.end(), [](const Unknown& u) { return u.graded; });
}

bool LinearSystem::has_unset_bounds() const {
  return std::any_of(unknowns_.begin(), unknowns_.end(), [](const Unknown& u) { return !u.graded && !u.bound; });
}

int LinearSystem::default_bound() const {
  int d = 0;
  for (const auto& eq : equations_) {
    d = std::max(d, eq.target.max_total_degree());
    for (const auto& t : eq.terms) {
      if (t.left) d = std::max(d, t.left->max_total_degree());
      if (t.right) d = std::max(d, t.right->max_total_degree());
    }
  }
  return d + degree_hint + 2;
}

bool LinearSystem::satisfied_by(const Assignment& a) const {
  if (a.size() != unknowns_.size()) return false;
  for (const auto& eq : equations_) {
    PolyMatrix sum = PolyMatrix::zero(ring_, eq.target.rows(), eq.target.cols());
    for (const auto& t : eq.terms) {
      PolyMatrix x = a[t.unknown];
      if (t.left) x = *t.left * x;
      if (t.right) x = x * *t.right;
      sum += x;
    }
    if (sum != eq.target) return false;
  }
  return true;
}

namespace {

struct Column {
  std::size_t unknown;
  std::size_t entry;
  Monomial mono;
};

using RowKey = std::tuple<std::size_t, std::size_t, std::size_t, Monomial>;

class MonomialCache {
 public:
  explicit MonomialCache(const RingSpec& ring) : ring_(ring), weights_(ring.weights()) {}

  const std::vector<Monomial>& of_degree(int d) {
    auto it = exact_.find(d);
    if (it == exact_.end()) it = exact_.emplace(d, monomials_of_degree(ring_, weights_, d)).first;
    return it->second;
  }
  const std::vector<Monomial>& up_to(int d) {
    auto it = upto_.find(d);
    if (it == upto_.end()) it = upto_.emplace(d, monomials_up_to(ring_, d)).first;
    return it->second;
  }

 private:
  const RingSpec& ring_;
  std::vector<int> weights_;
  std::map<int, std::vector<Monomial>> exact_, upto_;
};

std::vector<Column> enumerate_columns(const LinearSystem& sys, int bound) {
  MonomialCache cache(*sys.ring());
  std::vector<Column> cols;
  for (std::size_t u = 0; u < sys.unknowns().size(); ++u) {
    const Unknown& unk = sys.unknowns()[u];
    for (std::size_t k = 0; k < unk.rows * unk.cols; ++k) {
      if (unk.graded) {
        for (int s : unk.shifts)
          for (const auto& m : cache.of_degree(unk.offsets[k] + s)) cols.push_back({u, k, m});
      } else {
        for (const auto& m : cache.up_to(unk.bound.value_or(bound))) cols.push_back({u, k, m});
      }
    }
  }
  return cols;
}

// Coefficient-comparison rows of the field system; the right-hand side sits in
// column `cols.size()`.
std::vector<std::vector<std::pair<std::size_t, Scalar>>> build_rows(const LinearSystem& sys,
                                                                     const std::vector<Column>& cols) {
  std::map<RowKey, std::size_t> index;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  auto row_of = [&](std::size_t eq, std::size_t r, std::size_t c, const Monomial& m) -> auto& {
    auto [it, inserted] = index.try_emplace(RowKey{eq, r, c, m}, rows.size());
    if (inserted) rows.emplace_back();
    return rows[it->second];
  };

  const RingPtr& ring = sys.ring();
  std::size_t col = 0;
  while (col < cols.size()) {
    const std::size_t u = cols[col].unknown, k = cols[col].entry;
    std::size_t end = col;
    while (end < cols.size() && cols[end].unknown == u && cols[end].entry == k) ++end;
    const Unknown& unk = sys.unknowns()[u];
    const std::size_t i = k / unk.cols, j = k % unk.cols;
    for (std::size_t eq = 0; eq < sys.equations().size(); ++eq) {
      const Equation& e = sys.equations()[eq];
      for (const auto& t : e.terms) {
        if (t.unknown != u) continue;
        // left[:, i] * right[j, :]
        for (std::size_t r = 0; r < e.target.rows(); ++r) {
          Poly l = t.left ? (*t.left)(r, i) : (r == i ? Poly::constant(ring, 1) : Poly(ring));
          if (l.is_zero()) continue;
          for (std::size_t c = 0; c < e.target.cols(); ++c) {
            Poly rr = t.right ? (*t.right)(j, c) : (c == j ? Poly::constant(ring, 1) : Poly(ring));
            if (rr.is_zero()) continue;
            Poly p = l * rr;
            for (std::size_t cc = col; cc < end; ++cc) {
              Poly img = p.times_monomial(cols[cc].mono);
              for (const auto& term : img.terms()) row_of(eq, r, c, term.mono).emplace_back(cc, term.coeff);
            }
          }
        }
      }
    }
    col = end;
  }
  for (std::size_t eq = 0; eq < sys.equations().size(); ++eq) {
    const PolyMatrix& target = sys.equations()[eq].target;
    for (std::size_t r = 0; r < target.rows(); ++r)
      for (std::size_t c = 0; c < target.cols(); ++c)
        for (const auto& term : target(r, c).terms()) row_of(eq, r, c, term.mono).emplace_back(cols.size(), term.coeff);
  }
  return rows;
}

template <class Ops>
linalg::Echelon<Ops> eliminate(const Ops& ops, std::vector<std::vector<std::pair<std::size_t, Scalar>>>& rows) {
  linalg::Echelon<Ops> ech(ops);
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    typename linalg::Echelon<Ops>::Row merged;
    for (const auto& [c, v] : row) {
      auto value = ops.from_scalar(v);
      if (!merged.empty() && merged.back().first == c) merged.back().second = ops.add(merged.back().second, value);
      else merged.emplace_back(c, value);
    }
    ech.insert(merged);
  }
  return ech;
}

template <class Ops, class Vec>
Assignment to_assignment(const LinearSystem& sys, const std::vector<Column>& cols, const Ops& ops, const Vec& x) {
  std::vector<std::vector<std::vector<Term>>> terms(sys.unknowns().size());
  for (std::size_t u = 0; u < sys.unknowns().size(); ++u)
    terms[u].resize(sys.unknowns()[u].rows * sys.unknowns()[u].cols);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (ops.is_zero(x[c])) continue;
    terms[cols[c].unknown][cols[c].entry].push_back({cols[c].mono, ops.to_scalar(x[c])});
  }
  Assignment out;
  for (std::size_t u = 0; u < sys.unknowns().size(); ++u) {
    const Unknown& unk = sys.unknowns()[u];
    PolyMatrix m(sys.ring(), unk.rows, unk.cols);
    for (std::size_t k = 0; k < unk.rows * unk.cols; ++k)
      if (!terms[u][k].empty()) m(k / unk.cols, k % unk.cols) = Poly::from_terms(sys.ring(), std::move(terms[u][k]));
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<Assignment> solve_at(const LinearSystem& sys, int bound) {
  std::vector<Column> cols = enumerate_columns(sys, bound);
  auto rows = build_rows(sys, cols);
  return linalg::with_field_ops(sys.ring()->field(), [&](const auto& ops) -> std::optional<Assignment> {
    auto ech = eliminate(ops, rows);
    auto x = ech.particular(cols.size(), cols.size());
    if (!x) return std::nullopt;
    return to_assignment(sys, cols, ops, *x);
  });
}

std::size_t count_columns(const LinearSystem& sys, int bound) { return enumerate_columns(sys, bound).size(); }

}  // namespace

SolveResult solve_bounded(const LinearSystem& sys, const SolveOptions& opts) {
  SolveResult result;
  result.certainty = sys.fully_graded() ? Certainty::proven : Certainty::bounded;
  int bound = opts.max_degree.value_or(sys.default_bound());
  if (!sys.has_unset_bounds()) {
    result.solution = solve_at(sys, bound);
    result.degree_bound = sys.fully_graded() ? -1 : bound;
    return result;
  }
  const int cap = std::max(opts.degree_cap, bound);
  while (true) {
    result.degree_bound = bound;
    result.solution = solve_at(sys, bound);
    if (result.solution || bound >= cap) break;
    int next = std::min(cap, std::max(1, bound * 2));
    if (count_columns(sys, next) > opts.max_unknowns) break;
    bound = next;
  }
  return result;
}

SolutionSpace solution_space(const LinearSystem& sys, const SolveOptions& opts) {
  const int bound = opts.max_degree.value_or(sys.default_bound());
  std::vector<Column> cols = enumerate_columns(sys, bound);
  auto rows = build_rows(sys, cols);
  SolutionSpace space;
  space.certainty = sys.fully_graded() ? Certainty::proven : Certainty::bounded;
  space.degree_bound = sys.fully_graded() ? -1 : bound;
  linalg::with_field_ops(sys.ring()->field(), [&](const auto& ops) {
    auto ech = eliminate(ops, rows);
    if (auto x = ech.particular(cols.size(), cols.size())) space.particular = to_assignment(sys, cols, ops, *x);
    for (const auto& v : ech.nullspace(cols.size())) space.basis.push_back(to_assignment(sys, cols, ops, v));
  });
  space.dim = space.basis.size();
  return space;
}

std::size_t span_dimension(const RingPtr& ring, const std::vector<Assignment>& vectors,
                           const std::vector<std::size_t>& which) {
  std::map<std::tuple<std::size_t, std::size_t, Monomial>, std::size_t> index;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (const auto& v : vectors) {
    std::vector<std::pair<std::size_t, Scalar>> row;
    for (std::size_t w = 0; w < which.size(); ++w) {
      const PolyMatrix& m = v.at(which[w]);
      for (std::size_t k = 0; k < m.entries().size(); ++k)
        for (const auto& t : m.entries()[k].terms()) {
          auto [it, inserted] = index.try_emplace({w, k, t.mono}, index.size());
          row.emplace_back(it->second, t.coeff);
        }
    }
    rows.push_back(std::move(row));
  }
  return linalg::with_field_ops(ring->field(), [&](const auto& ops) { return eliminate(ops, rows).rank(); });
}

bool use_graded(const SolveOptions& opts, bool homogeneous) {
  switch (opts.mode) {
    case Mode::bounded: return false;
    case Mode::graded:
      if (!homogeneous) throw Error(ErrorKind::NotHomogeneous, "graded mode needs homogeneous inputs");
      return true;
    case Mode::automatic: return homogeneous;
  }
  return false;
}

std::optional<DegreeLabels> infer_map_labels(const PolyMatrix& a) {
  LabelSolver solver(a.ring()->weights());
  std::size_t tgt = solver.add_nodes(a.rows(), true);
  std::size_t src = solver.add_nodes(a.cols(), false);
  if (!solver.add_map(a, tgt, src, 0)) return std::nullopt;
  auto labels = solver.solve();
  if (!labels) return std::nullopt;
  DegreeLabels out;
  out.p0.assign(labels->begin() + static_cast<long>(tgt), labels->begin() + static_cast<long>(tgt + a.rows()));
  out.p1.assign(labels->begin() + static_cast<long>(src), labels->begin() + static_cast<long>(src + a.cols()));
  return out;
}

namespace {

// X with X*A = I (retraction) or A*X = I (section).
std::optional<PolyMatrix> one_sided_inverse(const PolyMatrix& a, bool retraction, const SolveOptions& opts) {
  const RingPtr& ring = a.ring();
  auto labels = infer_map_labels(a);
  LinearSystem sys(ring);
  std::size_t x;
  if (use_graded(opts, labels.has_value()))
    x = sys.add_graded("inverse", a.cols(), a.rows(), map_offsets(labels->p1, labels->p0, 0));
  else
    x = sys.add_bounded("inverse", a.cols(), a.rows());
  if (retraction)
    sys.add_equation({MatTerm{x, std::nullopt, a}}, PolyMatrix::identity(ring, a.cols()));
  else
    sys.add_equation({MatTerm{x, a, std::nullopt}}, PolyMatrix::identity(ring, a.rows()));
  auto res = solve_bounded(sys, opts);
  if (!res.solution) return std::nullopt;
  return res.solution->front();
}

}  // namespace

std::optional<PolyMatrix> find_retraction(const PolyMatrix& a, const SolveOptions& opts) {
  if (a.cols() > a.rows()) return std::nullopt;
  return one_sided_inverse(a, true, opts);
}

std::optional<PolyMatrix> find_section(const PolyMatrix& a, const SolveOptions& opts) {
  if (a.rows() > a.cols()) return std::nullopt;
  return one_sided_inverse(a, false, opts);
}

bool injectivity_test(const PolyMatrix& a, std::uint64_t seed) {
  const RingPtr& ring = a.ring();
  if (ring->has_modulus()) throw Error(ErrorKind::ModulusPresent, "injectivity_test needs a free polynomial ring");
  const std::size_t n = a.cols();
  if (n == 0) return true;
  if (n > a.rows()) return false;

  const FieldSpec& field = ring->field();
  std::mt19937_64 rng(seed);
  auto random_scalar = [&]() -> Scalar {
    if (field.is_prime()) return Scalar(static_cast<unsigned long>(rng() % field.characteristic()));
    return Scalar(static_cast<long>(rng() % 2001) - 1000);
  };

  auto minor_nonzero = [&](const std::vector<std::size_t>& rows) {
    return !determinant(a.select_rows(rows)).is_zero();
  };

  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Scalar> point(ring->nvars());
    for (auto& s : point) s = random_scalar();
    std::vector<std::size_t> independent = linalg::with_field_ops(field, [&](const auto& ops) {
      linalg::Echelon ech(ops);
      std::vector<std::size_t> chosen;
      for (std::size_t r = 0; r < a.rows() && chosen.size() < n; ++r) {
        typename decltype(ech)::Row row;
        for (std::size_t c = 0; c < n; ++c) {
          auto v = ops.from_scalar(a(r, c).evaluate(point));
          if (!ops.is_zero(v)) row.emplace_back(c, v);
        }
        if (ech.insert(row)) chosen.push_back(r);
      }
      return chosen;
    });
    if (independent.size() == n && minor_nonzero(independent)) return true;
  }

  // Exhaustive search over maximal minors.
  std::vector<bool> pick(a.rows(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
  do {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (pick[r]) rows.push_back(r);
    if (minor_nonzero(rows)) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

}  // namespace mfcat
