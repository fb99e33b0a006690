#ifndef MFCAT_TESTS_SUPPORT_HPP
#define MFCAT_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "mfcat/poly_matrix.hpp"

namespace testing {

inline mfcat::RingPtr ring(const std::string& field, std::vector<std::string> vars) {
  return mfcat::RingSpec::make(mfcat::FieldSpec::parse(field), std::move(vars));
}

inline mfcat::RingPtr quotient(const std::string& field, std::vector<std::string> vars, const std::string& f) {
  auto base = ring(field, std::move(vars));
  return mfcat::make_quotient(base, mfcat::parse_poly(f, base));
}

inline mfcat::Poly P(const mfcat::RingPtr& r, const std::string& text) { return mfcat::parse_poly(text, r); }

inline mfcat::PolyMatrix M(const mfcat::RingPtr& r, const std::vector<std::vector<std::string>>& rows) {
  return mfcat::PolyMatrix::from_strings(r, rows);
}

}  // namespace testing

#endif  // MFCAT_TESTS_SUPPORT_HPP

#include <ostream>

namespace mfcat {
inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) { return os << m.to_string(); }
}  // namespace mfcat
