#include "mfcat/grading.hpp"

#include <limits>
#include <queue>

namespace mfcat {

std::size_t LabelSolver::add_nodes(std::size_t count, bool anchor) {
  std::size_t first = adj_.size();
  adj_.resize(first + count);
  anchor_.resize(first + count, anchor);
  return first;
}

void LabelSolver::add_difference(std::size_t a, std::size_t b, int diff) {
  adj_[b].push_back({a, diff});
  adj_[a].push_back({b, -diff});
}

bool LabelSolver::add_map(const PolyMatrix& m, std::size_t tgt_first, std::size_t src_first, int shift) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& e = m(i, j);
      if (e.is_zero()) continue;
      auto d = e.homogeneous_degree(weights_);
      if (!d) return false;
      add_difference(tgt_first + i, src_first + j, *d - shift);
    }
  return true;
}

std::optional<std::vector<int>> LabelSolver::solve() const {
  const std::size_t n = adj_.size();
  constexpr int unset = std::numeric_limits<int>::min();
  std::vector<int> label(n, unset);
  for (std::size_t start = 0; start < n; ++start) {
    if (label[start] != unset) continue;
    std::vector<std::size_t> component{start};
    label[start] = 0;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (const auto& e : adj_[u]) {
        int want = label[u] + e.diff;
        if (label[e.to] == unset) {
          label[e.to] = want;
          component.push_back(e.to);
          q.push(e.to);
        } else if (label[e.to] != want) {
          return std::nullopt;
        }
      }
    }
    int base = std::numeric_limits<int>::max();
    for (std::size_t u : component)
      if (anchor_[u]) base = std::min(base, label[u]);
    if (base == std::numeric_limits<int>::max())
      for (std::size_t u : component) base = std::min(base, label[u]);
    for (std::size_t u : component) label[u] -= base;
  }
  return label;
}

std::vector<int> map_offsets(const std::vector<int>& tgt, const std::vector<int>& src, int shift) {
  std::vector<int> out;
  out.reserve(tgt.size() * src.size());
  for (int t : tgt)
    for (int s : src) out.push_back(t - s + shift);
  return out;
}

std::set<int> map_degrees(const PolyMatrix& m, const std::vector<int>& tgt, const std::vector<int>& src,
                          const std::vector<int>& weights) {
  std::set<int> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& t : m(i, j).terms()) out.insert(weighted_degree(t.mono, weights) - (tgt[i] - src[j]));
  return out;
}

PolyMatrix map_component(const PolyMatrix& m, const std::vector<int>& tgt, const std::vector<int>& src,
                         const std::vector<int>& weights, int d) {
  PolyMatrix out(m.ring(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).homogeneous_part(weights, tgt[i] - src[j] + d);
  return out;
}

}  // namespace mfcat
