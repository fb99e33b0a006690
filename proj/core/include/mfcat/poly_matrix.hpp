#ifndef MFCAT_POLY_MATRIX_HPP
#define MFCAT_POLY_MATRIX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "mfcat/poly.hpp"

namespace mfcat {

/// Dense row-major matrix of polynomials over one ring; a map between free
/// modules S^cols -> S^rows.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static PolyMatrix zero(RingPtr ring, std::size_t rows, std::size_t cols) {
    return PolyMatrix(std::move(ring), rows, cols);
  }
  static PolyMatrix identity(RingPtr ring, std::size_t n);
  static PolyMatrix scalar(const Poly& p, std::size_t n);
  /// Parses each entry with the polynomial text syntax.
  static PolyMatrix from_strings(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows);
  static PolyMatrix from_rows(const RingPtr& ring, std::size_t cols, const std::vector<std::vector<Poly>>& rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Poly>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  int max_total_degree() const;

  PolyMatrix transpose() const;
  PolyMatrix operator-() const;
  PolyMatrix& operator+=(const PolyMatrix& other);
  PolyMatrix& operator-=(const PolyMatrix& other);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& p, const PolyMatrix& m);

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;
  PolyMatrix select_cols(const std::vector<std::size_t>& idx) const;
  PolyMatrix in_ring(const RingPtr& other) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

/// Exact product; throws DimensionMismatch / RingMismatch.
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);
/// [[a, b], [c, d]]
PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d);

/// Determinant of a square matrix (division free).
Poly determinant(const PolyMatrix& m);

}  // namespace mfcat

#endif  // MFCAT_POLY_MATRIX_HPP
