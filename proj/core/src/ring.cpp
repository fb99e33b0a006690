#include "mfcat/ring.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "mfcat/errors.hpp"

namespace mfcat {

namespace {

bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime_number(p)) throw Error(ErrorKind::InvalidRing, "field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) throw Error(ErrorKind::InvalidRing, "prime " + std::to_string(p) + " too large (limit 2^31)");
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s(text);
  if (s == "Q" || s == "QQ") return rationals();
  static const std::regex re("(?:F|GF|F_)([0-9]+)");
  std::smatch m;
  if (std::regex_match(s, m, re)) return prime(std::stoull(m[1].str()));
  throw Error(ErrorKind::InvalidRing, "unknown field '" + s + "' (expected Q or F<p>)");
}

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar FieldSpec::reduce(const Scalar& a) const {
  if (p_ == 0) {
    Scalar r = a;
    r.canonicalize();
    return r;
  }
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = a.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = a.get_den() % p;
  if (den == 0) throw Error(ErrorKind::ZeroInput, "denominator divisible by characteristic " + std::to_string(p_));
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  return Scalar(num);
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (a == 0) throw Error(ErrorKind::ZeroInput, "inverse of zero");
  if (p_ == 0) return Scalar(1) / a;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class r = reduce(a).get_num();
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return Scalar(inv);
}

int total_degree(const Monomial& m) {
  return static_cast<int>(std::accumulate(m.begin(), m.end(), std::uint64_t{0}));
}

int weighted_degree(const Monomial& m, const std::vector<int>& weights) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * weights[i];
  return d;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
  Monomial r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - d[i];
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

RingSpec::RingSpec(Key, FieldSpec field, std::vector<std::string> vars,
                   std::optional<std::vector<int>> grading, std::vector<Term> modulus)
    : field_(field), vars_(std::move(vars)), grading_(std::move(grading)), modulus_(std::move(modulus)) {}

RingPtr RingSpec::make(FieldSpec field, std::vector<std::string> vars,
                       std::optional<std::vector<int>> grading) {
  static const std::regex name_re("[A-Za-z][A-Za-z0-9]*");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!std::regex_match(vars[i], name_re))
      throw Error(ErrorKind::InvalidRing, "bad variable name '" + vars[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[i] == vars[j]) throw Error(ErrorKind::InvalidRing, "duplicate variable '" + vars[i] + "'");
  }
  if (grading) {
    if (grading->size() != vars.size())
      throw Error(ErrorKind::InvalidRing, "grading has " + std::to_string(grading->size()) + " weights for " +
                                              std::to_string(vars.size()) + " variables");
    for (int w : *grading)
      if (w < 1) throw Error(ErrorKind::InvalidRing, "grading weights must be >= 1");
  }
  return std::make_shared<const RingSpec>(Key{}, field, std::move(vars), std::move(grading), std::vector<Term>{});
}

std::optional<std::size_t> RingSpec::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::vector<int> RingSpec::weights() const {
  return grading_ ? *grading_ : std::vector<int>(vars_.size(), 1);
}

RingPtr RingSpec::base() const {
  if (!has_modulus()) return shared_from_this();
  return std::make_shared<const RingSpec>(Key{}, field_, vars_, grading_, std::vector<Term>{});
}

RingPtr RingSpec::with_modulus(std::vector<Term> modulus) const {
  return std::make_shared<const RingSpec>(Key{}, field_, vars_, grading_, std::move(modulus));
}

RingPtr RingSpec::with_grading(std::optional<std::vector<int>> grading) const {
  return std::make_shared<const RingSpec>(Key{}, field_, vars_, std::move(grading), modulus_);
}

bool RingSpec::same_as(const RingSpec& other) const {
  if (this == &other) return true;
  if (field_ != other.field_ || vars_ != other.vars_ || grading_ != other.grading_) return false;
  if (modulus_.size() != other.modulus_.size()) return false;
  for (std::size_t i = 0; i < modulus_.size(); ++i)
    if (modulus_[i].mono != other.modulus_[i].mono || modulus_[i].coeff != other.modulus_[i].coeff) return false;
  return true;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

}  // namespace mfcat
