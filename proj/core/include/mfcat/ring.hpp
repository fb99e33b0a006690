#ifndef MFCAT_RING_HPP
#define MFCAT_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mfcat {

/// Coefficients are exact rationals. Over a prime field the stored value is
/// always the canonical integer representative in [0, p).
using Scalar = mpq_class;

class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q", "QQ" or "F<p>" / "GF<p>".
  static FieldSpec parse(std::string_view text);

  bool is_prime() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  Scalar reduce(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.p_ != b.p_; }

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Exponent vector, one entry per ring variable.
using Monomial = std::vector<std::uint32_t>;

int total_degree(const Monomial& m);
int weighted_degree(const Monomial& m, const std::vector<int>& weights);
bool divides(const Monomial& d, const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
Monomial monomial_quotient(const Monomial& m, const Monomial& d);

/// Graded lexicographic order with x1 > x2 > ... ; true when a > b.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

/// A polynomial ring k[x1..xn], optionally divided by a single polynomial
/// whose leading term (grlex) drives normal-form reduction.
class RingSpec : public std::enable_shared_from_this<RingSpec> {
 public:
  static RingPtr make(FieldSpec field, std::vector<std::string> vars,
                      std::optional<std::vector<int>> grading = std::nullopt);

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::optional<std::size_t> var_index(std::string_view name) const;

  const std::optional<std::vector<int>>& grading() const { return grading_; }
  /// Declared grading, or the standard grading when none was declared.
  std::vector<int> weights() const;

  bool has_modulus() const { return !modulus_.empty(); }
  /// Modulus terms (over the base ring), sorted descending; empty if none.
  const std::vector<Term>& modulus_terms() const { return modulus_; }
  const Monomial& modulus_lead() const { return modulus_.front().mono; }

  /// The free polynomial ring underneath (this ring itself when no modulus).
  RingPtr base() const;
  /// Same ring data with a modulus attached; terms must be sorted descending.
  RingPtr with_modulus(std::vector<Term> modulus) const;
  RingPtr with_grading(std::optional<std::vector<int>> grading) const;

  bool same_as(const RingSpec& other) const;

  struct Key {};  // restricts construction to the factory functions
  RingSpec(Key, FieldSpec field, std::vector<std::string> vars,
           std::optional<std::vector<int>> grading, std::vector<Term> modulus);

 private:
  FieldSpec field_;
  std::vector<std::string> vars_;
  std::optional<std::vector<int>> grading_;
  std::vector<Term> modulus_;
  RingPtr base_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace mfcat

#endif  // MFCAT_RING_HPP
