#ifndef MFCAT_LINALG_HPP
#define MFCAT_LINALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mfcat/ring.hpp"

namespace mfcat::linalg {

/// Arithmetic in Z/p with machine words (p < 2^31).
struct PrimeOps {
  using value_type = std::uint64_t;
  std::uint64_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return result;
  }
  value_type from_scalar(const Scalar& s) const { return s.get_num().get_ui() % p; }
  Scalar to_scalar(value_type a) const { return Scalar(static_cast<unsigned long>(a)); }
};

struct RationalOps {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type from_scalar(const Scalar& s) const { return s; }
  Scalar to_scalar(const value_type& a) const { return a; }
};

/// Calls fn(ops) with the machine arithmetic matching the field.
template <class Fn>
decltype(auto) with_field_ops(const FieldSpec& field, Fn&& fn) {
  if (field.is_prime()) return fn(PrimeOps{field.characteristic()});
  return fn(RationalOps{});
}

/// Incremental row-echelon form over sparse rows. Each stored row has its
/// pivot as first entry, normalized to one; entries are sorted by column.
template <class Ops>
class Echelon {
 public:
  using value_type = typename Ops::value_type;
  using Row = std::vector<std::pair<std::size_t, value_type>>;

  explicit Echelon(Ops ops) : ops_(std::move(ops)) {}

  /// Returns the pivot column of the reduced row, or nullopt if it reduced to 0.
  std::optional<std::size_t> insert(const Row& row) {
    std::map<std::size_t, value_type> work;
    for (const auto& [c, v] : row)
      if (!ops_.is_zero(v)) work[c] = v;
    for (auto it = work.begin(); it != work.end();) {
      auto piv = pivots_.find(it->first);
      if (piv == pivots_.end()) break;
      value_type factor = it->second;
      for (const auto& [c, v] : piv->second) {
        auto [slot, inserted] = work.try_emplace(c, ops_.zero());
        slot->second = ops_.sub(slot->second, ops_.mul(factor, v));
      }
      // drop zeros created at or after the pivot, then restart from the smallest column
      for (auto z = work.begin(); z != work.end();) {
        if (ops_.is_zero(z->second)) z = work.erase(z);
        else ++z;
      }
      it = work.begin();
    }
    if (work.empty()) return std::nullopt;
    std::size_t pivot = work.begin()->first;
    value_type inv = ops_.inv(work.begin()->second);
    Row normalized;
    normalized.reserve(work.size());
    for (const auto& [c, v] : work) normalized.emplace_back(c, ops_.mul(v, inv));
    pivots_.emplace(pivot, std::move(normalized));
    return pivot;
  }

  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }
  const std::map<std::size_t, Row>& pivots() const { return pivots_; }
  const Ops& ops() const { return ops_; }

  /// Solves for columns [0, ncols) given that column `rhs` (> all unknown
  /// columns) holds the right-hand side. Free variables are set to zero.
  std::optional<std::vector<value_type>> particular(std::size_t ncols, std::size_t rhs) const {
    if (pivots_.count(rhs)) return std::nullopt;
    std::vector<value_type> x(ncols, ops_.zero());
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      value_type acc = ops_.zero();
      for (const auto& [c, v] : it->second) {
        if (c == it->first) continue;
        if (c == rhs) acc = ops_.add(acc, v);
        else if (c < ncols) acc = ops_.sub(acc, ops_.mul(v, x[c]));
      }
      x[it->first] = acc;
    }
    return x;
  }

  /// Basis of {x : rows * x = 0} over columns [0, ncols).
  std::vector<std::vector<value_type>> nullspace(std::size_t ncols) const {
    std::vector<std::vector<value_type>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
      if (pivots_.count(free)) continue;
      std::vector<value_type> x(ncols, ops_.zero());
      x[free] = ops_.one();
      for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        if (it->first >= ncols) continue;
        value_type acc = ops_.zero();
        for (const auto& [c, v] : it->second) {
          if (c == it->first || c >= ncols) continue;
          acc = ops_.sub(acc, ops_.mul(v, x[c]));
        }
        x[it->first] = acc;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  Ops ops_;
  std::map<std::size_t, Row> pivots_;
};

}  // namespace mfcat::linalg

#endif  // MFCAT_LINALG_HPP
