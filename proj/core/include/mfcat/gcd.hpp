#ifndef MFCAT_GCD_HPP
#define MFCAT_GCD_HPP

#include "mfcat/poly.hpp"

namespace mfcat {

/// Monic greatest common divisor in a free polynomial ring, by recursive
/// content / primitive-part pseudo-remainder sequences.
Poly gcd(const Poly& a, const Poly& b);

/// True iff omega is a non-zerodivisor of its ring. Free rings are domains;
/// in k[x]/(f) this holds iff gcd(lift(omega), f) is a unit. Throws ZeroInput
/// for omega = 0.
bool is_nonzerodivisor(const Poly& omega);

}  // namespace mfcat

#endif  // MFCAT_GCD_HPP
