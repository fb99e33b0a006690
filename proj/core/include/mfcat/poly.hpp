#ifndef MFCAT_POLY_HPP
#define MFCAT_POLY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfcat/ring.hpp"

namespace mfcat {

/// Sparse polynomial in normal form: terms sorted by decreasing grlex order,
/// no zero coefficients, and (in a quotient ring) no monomial divisible by the
/// modulus' leading monomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, Monomial m, const Scalar& c = 1);
  /// Collects like terms, reduces coefficients and reduces modulo the modulus.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Nonzero constant, i.e. a unit of the graded/local ring.
  bool is_unit_constant() const { return is_constant() && !is_zero(); }
  Scalar constant_coeff() const;
  const Term& leading() const { return terms_.front(); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  int max_weighted_degree(const std::vector<int>& weights) const;
  /// Weighted degree if nonzero and homogeneous.
  std::optional<int> homogeneous_degree(const std::vector<int>& weights) const;
  Poly homogeneous_part(const std::vector<int>& weights, int degree) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& m) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Reinterprets the terms in another ring over the same variables (used to
  /// lift from S0/(f) to S0 and to reduce from S0 to S0/(f)).
  Poly in_ring(const RingPtr& other) const;

  /// Ring homomorphism to the coefficient field; the ring must be free.
  Scalar evaluate(const std::vector<Scalar>& point) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Single-divisor reduction p = q*d + r, r having no term divisible by LM(d).
/// Both polynomials must live in a ring without modulus.
std::pair<Poly, Poly> divide(const Poly& p, const Poly& d);

/// Exact division; throws if d does not divide p.
Poly exact_quotient(const Poly& p, const Poly& d);

/// The quotient ring base/(modulus). The modulus must be a non-constant
/// polynomial of the free ring, homogeneous when the ring is graded.
RingPtr make_quotient(const RingPtr& base, const Poly& modulus);

/// The ring's modulus as a polynomial of its base ring (zero if none).
Poly modulus_of(const RingPtr& ring);

/// Parses `3*x1^2*x3 - 1/2`-style text. Errors: Syntax (with column),
/// UnknownVariable.
Poly parse_poly(std::string_view text, const RingPtr& ring);

/// All monomials of exact weighted degree d; in a quotient ring only those in
/// normal form.
std::vector<Monomial> monomials_of_degree(const RingSpec& ring, const std::vector<int>& weights, int d);
/// All normal-form monomials of total degree <= bound.
std::vector<Monomial> monomials_up_to(const RingSpec& ring, int bound);

}  // namespace mfcat

#endif  // MFCAT_POLY_HPP
