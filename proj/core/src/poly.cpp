#include "mfcat/poly.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "mfcat/errors.hpp"

namespace mfcat {

namespace {

using TermMap = std::map<Monomial, Scalar, GrlexGreater>;

void accumulate(TermMap& acc, const FieldSpec& field, const Monomial& m, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(m, 0);
  it->second = field.add(it->second, c);
  if (it->second == 0) acc.erase(it);
}

// Reduces in place modulo the ring's modulus. Every rewrite replaces a term by
// strictly smaller ones, so a single descending sweep reaches normal form.
void reduce_modulus(TermMap& acc, const RingSpec& ring) {
  if (!ring.has_modulus()) return;
  const auto& mod = ring.modulus_terms();
  const FieldSpec& field = ring.field();
  Scalar lead_inv = field.inv(mod.front().coeff);
  for (auto it = acc.begin(); it != acc.end();) {
    if (!divides(mod.front().mono, it->first)) {
      ++it;
      continue;
    }
    Monomial q = monomial_quotient(it->first, mod.front().mono);
    Scalar c = field.mul(it->second, lead_inv);
    for (std::size_t k = 1; k < mod.size(); ++k)
      accumulate(acc, field, monomial_product(q, mod[k].mono), field.neg(field.mul(c, mod[k].coeff)));
    it = acc.erase(it);
  }
}

std::vector<Term> to_terms(TermMap&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back({m, c});
  return out;
}

const RingPtr& common_ring(const Poly& a, const Poly& b) {
  if (!a.ring()) return b.ring();
  if (!b.ring()) return a.ring();
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorKind::RingMismatch, "polynomials over different rings");
  return a.ring();
}

std::string monomial_string(const RingSpec& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.vars()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

void enumerate_weighted(const std::vector<int>& w, std::size_t var, int remaining, Monomial& cur,
                        std::vector<Monomial>& out) {
  if (var == w.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * w[var] <= remaining; ++e) {
    cur[var] = static_cast<std::uint32_t>(e);
    enumerate_weighted(w, var + 1, remaining - e * w[var], cur, out);
  }
  cur[var] = 0;
}

}  // namespace

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  Monomial one(ring->nvars(), 0);
  return from_terms(std::move(ring), {{std::move(one), c}});
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars(), 0);
  m.at(index) = 1;
  return from_terms(std::move(ring), {{std::move(m), 1}});
}

Poly Poly::monomial(RingPtr ring, Monomial m, const Scalar& c) {
  return from_terms(std::move(ring), {{std::move(m), c}});
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  TermMap acc;
  const FieldSpec& field = ring->field();
  for (auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw Error(ErrorKind::ArityMismatch, "monomial arity does not match ring");
    accumulate(acc, field, t.mono, field.reduce(t.coeff));
  }
  reduce_modulus(acc, *ring);
  Poly p(std::move(ring));
  p.terms_ = to_terms(std::move(acc));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Scalar Poly::constant_coeff() const {
  if (terms_.empty()) return 0;
  const Term& last = terms_.back();
  return mfcat::total_degree(last.mono) == 0 ? last.coeff : Scalar(0);
}

int Poly::total_degree() const { return terms_.empty() ? -1 : mfcat::total_degree(terms_.front().mono); }

int Poly::max_weighted_degree(const std::vector<int>& weights) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, weighted_degree(t.mono, weights));
  return d;
}

std::optional<int> Poly::homogeneous_degree(const std::vector<int>& weights) const {
  if (terms_.empty()) return std::nullopt;
  int d = weighted_degree(terms_.front().mono, weights);
  for (const auto& t : terms_)
    if (weighted_degree(t.mono, weights) != d) return std::nullopt;
  return d;
}

Poly Poly::homogeneous_part(const std::vector<int>& weights, int degree) const {
  Poly out(ring_);
  for (const auto& t : terms_)
    if (weighted_degree(t.mono, weights) == degree) out.terms_.push_back(t);
  return out;
}

Poly Poly::operator-() const {
  Poly out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, ring_->field().neg(t.coeff)});
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.is_zero()) return *this;
  RingPtr ring = common_ring(*this, other);
  TermMap acc;
  for (auto& t : terms_) acc.emplace(std::move(t.mono), std::move(t.coeff));
  for (const auto& t : other.terms_) accumulate(acc, ring->field(), t.mono, t.coeff);
  ring_ = std::move(ring);
  terms_ = to_terms(std::move(acc));
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  RingPtr ring = common_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(ring);
  TermMap acc;
  const FieldSpec& field = ring->field();
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) accumulate(acc, field, monomial_product(s.mono, t.mono), field.mul(s.coeff, t.coeff));
  reduce_modulus(acc, *ring);
  Poly out(ring);
  out.terms_ = to_terms(std::move(acc));
  return out;
}

Poly Poly::scaled(const Scalar& c) const {
  if (!ring_) return *this;
  Scalar r = ring_->field().reduce(c);
  if (r == 0) return Poly(ring_);
  Poly out(ring_);
  for (const auto& t : terms_) out.terms_.push_back({t.mono, ring_->field().mul(t.coeff, r)});
  return out;
}

Poly Poly::times_monomial(const Monomial& m) const {
  if (terms_.empty()) return *this;
  if (!ring_->has_modulus()) {
    Poly out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({monomial_product(t.mono, m), t.coeff});
    return out;
  }
  TermMap acc;
  for (const auto& t : terms_) accumulate(acc, ring_->field(), monomial_product(t.mono, m), t.coeff);
  reduce_modulus(acc, *ring_);
  Poly out(ring_);
  out.terms_ = to_terms(std::move(acc));
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(ring_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Poly Poly::in_ring(const RingPtr& other) const {
  if (ring_ && (ring_->vars() != other->vars() || ring_->field() != other->field()))
    throw Error(ErrorKind::RingMismatch, "cannot move polynomial between rings with different variables or fields");
  return from_terms(other, terms_);
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  if (!ring_) return 0;
  if (ring_->has_modulus()) throw Error(ErrorKind::ModulusPresent, "evaluation needs a free polynomial ring");
  if (point.size() != ring_->nvars())
    throw Error(ErrorKind::ArityMismatch, "point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                              std::to_string(ring_->nvars()) + " variables");
  const FieldSpec& field = ring_->field();
  Scalar sum = 0;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) v = field.mul(v, point[i]);
    sum = field.add(sum, v);
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(*ring_, t.mono);
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

std::pair<Poly, Poly> divide(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero polynomial");
  const RingPtr& ring = d.ring();
  if (ring->has_modulus() || (p.ring() && p.ring()->has_modulus()))
    throw Error(ErrorKind::ModulusPresent, "divide() works in free polynomial rings");
  if (p.ring() && !same_ring(p.ring(), ring)) throw Error(ErrorKind::RingMismatch, "divide(): ring mismatch");
  const FieldSpec& field = ring->field();
  const auto& dt = d.terms();
  Scalar lead_inv = field.inv(dt.front().coeff);
  TermMap acc;
  for (const auto& t : p.terms()) acc.emplace(t.mono, t.coeff);
  TermMap quot;
  for (auto it = acc.begin(); it != acc.end();) {
    if (!divides(dt.front().mono, it->first)) {
      ++it;
      continue;
    }
    Monomial q = monomial_quotient(it->first, dt.front().mono);
    Scalar c = field.mul(it->second, lead_inv);
    accumulate(quot, field, q, c);
    for (std::size_t k = 1; k < dt.size(); ++k)
      accumulate(acc, field, monomial_product(q, dt[k].mono), field.neg(field.mul(c, dt[k].coeff)));
    it = acc.erase(it);
  }
  Poly qp(ring), rp(ring);
  qp = Poly::from_terms(ring, to_terms(std::move(quot)));
  rp = Poly::from_terms(ring, to_terms(std::move(acc)));
  return {qp, rp};
}

Poly exact_quotient(const Poly& p, const Poly& d) {
  auto [q, r] = divide(p, d);
  if (!r.is_zero()) throw Error(ErrorKind::Validation, "exact division failed: " + d.to_string() + " does not divide " + p.to_string());
  return q;
}

RingPtr make_quotient(const RingPtr& base, const Poly& modulus) {
  if (base->has_modulus()) throw Error(ErrorKind::InvalidRing, "only one modulus is supported");
  if (!same_ring(modulus.ring(), base)) throw Error(ErrorKind::RingMismatch, "modulus is not over the base ring");
  if (modulus.is_zero()) throw Error(ErrorKind::InvalidRing, "modulus must be nonzero");
  if (modulus.is_constant()) throw Error(ErrorKind::InvalidRing, "modulus must not be a unit");
  if (modulus.leading().coeff == 0) throw Error(ErrorKind::NonInvertibleLeadCoeff, "modulus leading coefficient");
  if (base->grading() && !modulus.homogeneous_degree(base->weights()))
    throw Error(ErrorKind::InvalidRing, "graded ring requires a homogeneous modulus");
  return base->with_modulus(modulus.terms());
}

Poly modulus_of(const RingPtr& ring) {
  RingPtr base = ring->base();
  if (!ring->has_modulus()) return Poly(base);
  return Poly::from_terms(base, ring->modulus_terms());
}

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, const std::vector<int>& weights, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(ring.nvars(), 0);
  enumerate_weighted(weights, 0, d, cur, out);
  if (ring.has_modulus()) {
    std::erase_if(out, [&](const Monomial& m) { return divides(ring.modulus_lead(), m); });
  }
  return out;
}

std::vector<Monomial> monomials_up_to(const RingSpec& ring, int bound) {
  std::vector<Monomial> out;
  std::vector<int> ones(ring.nvars(), 1);
  for (int d = 0; d <= bound; ++d) {
    auto part = monomials_of_degree(ring, ones, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Syntax, "col " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Poly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (accept('^')) {
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(read_digits());
      Scalar value(num);
      if (accept('/')) {
        skip_ws();
        std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        mpz_class d(den);
        if (d == 0) fail("zero denominator");
        value = Scalar(num, d);
        value.canonicalize();
      }
      return Poly::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->var_index(name);
      if (!idx) throw Error(ErrorKind::UnknownVariable, "'" + name + "' is not a ring variable");
      return Poly::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

}  // namespace mfcat
