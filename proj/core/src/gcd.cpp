#include "mfcat/gcd.hpp"

#include <map>

#include "mfcat/errors.hpp"

namespace mfcat {

namespace {

int main_variable(const Poly& p) {
  int v = -1;
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] > 0) v = std::max(v, static_cast<int>(i));
  return v;
}

int degree_in(const Poly& p, int v) {
  int d = -1;
  for (const auto& t : p.terms()) d = std::max(d, static_cast<int>(t.mono[v]));
  return d;
}

// Coefficients of p viewed as a polynomial in variable v.
std::map<int, Poly> coefficients_in(const Poly& p, int v) {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    Term stripped = t;
    stripped.mono[v] = 0;
    buckets[static_cast<int>(t.mono[v])].push_back(std::move(stripped));
  }
  std::map<int, Poly> out;
  for (auto& [e, terms] : buckets) out.emplace(e, Poly::from_terms(p.ring(), std::move(terms)));
  return out;
}

Poly power_of(const RingPtr& ring, int v, int e) {
  Monomial m(ring->nvars(), 0);
  m[v] = static_cast<std::uint32_t>(e);
  return Poly::monomial(ring, m);
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.ring()->field().inv(p.leading().coeff));
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, int v) {
  Poly g(p.ring());
  for (const auto& [e, c] : coefficients_in(p, v)) {
    g = g.is_zero() ? make_monic(c) : gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly primitive_part(const Poly& p, int v) {
  if (p.is_zero()) return p;
  return exact_quotient(p, content_in(p, v));
}

Poly pseudo_remainder(Poly a, const Poly& b, int v) {
  const int db = degree_in(b, v);
  const Poly lb = coefficients_in(b, v).at(db);
  while (!a.is_zero()) {
    int da = degree_in(a, v);
    if (da < db) break;
    Poly la = coefficients_in(a, v).at(da);
    a = lb * a - la * power_of(a.ring(), v, da - db) * b;
  }
  return a;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.ring(), 1);
  int v = std::max(main_variable(a), main_variable(b));
  if (degree_in(a, v) <= 0) return gcd_impl(a, content_in(b, v));
  if (degree_in(b, v) <= 0) return gcd_impl(content_in(a, v), b);

  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly c = gcd_impl(ca, cb);
  Poly p = exact_quotient(a, ca), q = exact_quotient(b, cb);
  if (degree_in(p, v) < degree_in(q, v)) std::swap(p, q);
  while (!q.is_zero() && degree_in(q, v) > 0) {
    Poly r = pseudo_remainder(p, q, v);
    p = q;
    q = r.is_zero() ? r : primitive_part(r, v);
  }
  // q nonzero of v-degree 0 after taking primitive parts means the gcd in v is 1.
  Poly g = q.is_zero() ? primitive_part(p, v) : Poly::constant(a.ring(), 1);
  return make_monic(c * g);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  const RingPtr& ring = a.ring() ? a.ring() : b.ring();
  if (ring->has_modulus()) throw Error(ErrorKind::ModulusPresent, "gcd works in free polynomial rings");
  if (a.ring() && b.ring() && !same_ring(a.ring(), b.ring())) throw Error(ErrorKind::RingMismatch, "gcd: ring mismatch");
  return gcd_impl(a, b);
}

bool is_nonzerodivisor(const Poly& omega) {
  if (omega.is_zero()) throw Error(ErrorKind::ZeroInput, "omega must be nonzero");
  const RingPtr& ring = omega.ring();
  if (!ring->has_modulus()) return true;
  RingPtr base = ring->base();
  Poly g = gcd(omega.in_ring(base), modulus_of(ring));
  return g.is_constant();
}

}  // namespace mfcat
