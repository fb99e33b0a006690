#ifndef MFCAT_SRC_INTERNAL_HPP
#define MFCAT_SRC_INTERNAL_HPP

#include <random>
#include <vector>

#include "mfcat/poly_matrix.hpp"

namespace mfcat::detail {

// row k += m * row i
inline void add_row(PolyMatrix& a, std::size_t k, std::size_t i, const Poly& m) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!a(i, c).is_zero()) a(k, c) += m * a(i, c);
}

// col k += m * col i
inline void add_col(PolyMatrix& a, std::size_t k, std::size_t i, const Poly& m) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!a(r, i).is_zero()) a(r, k) += a(r, i) * m;
}

inline void scale_row(PolyMatrix& a, std::size_t i, const Poly& m) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = m * a(i, c);
}

inline void scale_col(PolyMatrix& a, std::size_t i, const Poly& m) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) = a(r, i) * m;
}

inline PolyMatrix permute(const PolyMatrix& a, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
  return a.select_rows(rows).select_cols(cols);
}

// Small nonzero field element.
inline Scalar random_nonzero(const FieldSpec& field, std::mt19937_64& rng) {
  if (field.is_prime()) return Scalar(static_cast<unsigned long>(1 + rng() % (field.characteristic() - 1)));
  long v = static_cast<long>(rng() % 3) + 1;
  return Scalar(rng() % 2 ? v : -v);
}

inline Scalar random_scalar(const FieldSpec& field, std::mt19937_64& rng) {
  if (rng() % 3 == 0) return Scalar(0);
  return random_nonzero(field, rng);
}

}  // namespace mfcat::detail

#endif  // MFCAT_SRC_INTERNAL_HPP
