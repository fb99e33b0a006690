#include "mfcat/poly_matrix.hpp"

#include <unordered_map>

#include "mfcat/errors.hpp"

namespace mfcat {

namespace {

void require_same_ring(const PolyMatrix& a, const PolyMatrix& b, const char* op) {
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorKind::RingMismatch, std::string(op) + ": matrices over different rings");
}

std::string dims(const PolyMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::scalar(const Poly& p, std::size_t n) {
  PolyMatrix m(p.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = p;
  return m;
}

PolyMatrix PolyMatrix::from_strings(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_poly(rows[r][c], ring);
  }
  return m;
}

PolyMatrix PolyMatrix::from_rows(const RingPtr& ring, std::size_t cols, const std::vector<std::vector<Poly>>& rows) {
  PolyMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c].in_ring(ring);
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

int PolyMatrix::max_total_degree() const {
  int d = -1;
  for (const auto& e : entries_) d = std::max(d, e.total_degree());
  return d;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  require_same_ring(*this, other, "matrix sum");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix sum " + dims(*this) + " vs " + dims(other));
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) {
  require_same_ring(*this, other, "matrix difference");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix difference " + dims(*this) + " vs " + dims(other));
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return mat_mul(a, b); }

PolyMatrix operator*(const Poly& p, const PolyMatrix& m) {
  PolyMatrix out(m);
  for (auto& e : out.entries_) e = p * e;
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_)) return false;
  return a.entries_ == b.entries_;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  PolyMatrix out(ring_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMatrix out(ring_, idx.size(), cols_);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(idx[r], c);
  return out;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  PolyMatrix out(ring_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = (*this)(r, idx[c]);
  return out;
}

PolyMatrix PolyMatrix::in_ring(const RingPtr& other) const {
  PolyMatrix out(other, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].in_ring(other);
  return out;
}

std::string PolyMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a, b, "mat_mul");
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "mat_mul " + dims(a) + " * " + dims(b));
  PolyMatrix out(a.ring() ? a.ring() : b.ring(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Poly& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const Poly& y = b(k, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  return out;
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a, b, "hstack");
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack " + dims(a) + " | " + dims(b));
  PolyMatrix out(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a, b, "vstack");
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack " + dims(a) + " / " + dims(b));
  PolyMatrix out(a.ring(), a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r) out(a.rows() + r, c) = b(r, c);
  }
  return out;
}

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a, b, "block_diag");
  PolyMatrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

Poly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(m.ring(), 1);
  if (n > 20) throw Error(ErrorKind::DimensionMismatch, "determinant: matrix too large");
  // Laplace expansion along rows, memoized over the set of used columns.
  std::unordered_map<std::uint32_t, Poly> memo;
  memo.emplace(0U, Poly::constant(m.ring(), 1));
  for (std::size_t row = 0; row < n; ++row) {
    std::unordered_map<std::uint32_t, Poly> next;
    for (const auto& [mask, value] : memo) {
      if (value.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1U << c)) continue;
        const Poly& e = m(row, c);
        if (e.is_zero()) continue;
        // sign: number of used columns greater than c
        int larger = 0;
        for (std::size_t k = c + 1; k < n; ++k)
          if (mask & (1U << k)) ++larger;
        Poly term = value * e;
        if (larger % 2) term = -term;
        auto [it, inserted] = next.try_emplace(mask | (1U << c), Poly(m.ring()));
        it->second += term;
      }
    }
    memo = std::move(next);
  }
  auto it = memo.find((1U << n) - 1U);
  return it == memo.end() ? Poly(m.ring()) : it->second;
}

}  // namespace mfcat
