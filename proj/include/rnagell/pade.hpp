#pragma once

#include <gmpxx.h>

#include <array>
#include <utility>
#include <vector>

namespace rnagell {

/// Exact rational approximants to sqrt(1-z):
///   G(z) = F(-1/2 - n2, -n1, -n, z)   (degree n1)
///   H(z) = F( 1/2 - n1, -n2, -n, z)   (degree n2)
/// for n = n1 + n2, together with the scaled integer forms
/// binom(n, n1) * G(4z) and binom(n, n1) * H(4z).
struct PadeApproximant {
  unsigned n1 = 0;
  unsigned n2 = 0;
  unsigned n = 0;
  std::vector<mpq_class> g_coeffs;       // degree n1, exact
  std::vector<mpq_class> h_coeffs;       // degree n2, exact
  std::vector<mpz_class> g_scaled_int;   // binom(n, n1) * G(4z)
  std::vector<mpz_class> h_scaled_int;   // binom(n, n1) * H(4z)
};

/// Terminating hypergeometric series, evaluated term by term in exact
/// rationals. Throws std::logic_error if a scaled coefficient fails to be
/// integral (which would contradict the integrality property).
PadeApproximant build(unsigned n1, unsigned n2);

/// G(1) = binom(n, n1)^(-1) * prod_{m=1..n1} (1 - 1/(2m)), exact.
mpq_class g_at_1(unsigned n1, unsigned n2);

struct InequalityResult {
  bool satisfied = false;
  double residual = 0.0;  // rhs - |lhs| upper bound, at the final precision
};

/// |G(z) - sqrt(1-z) H(z)| < z^(n+1) G(1) for rational z in (0, 1),
/// decided with outward-rounded interval evaluation at >= `digits` digits.
InequalityResult verify_inequality_a(const PadeApproximant& pa, const mpq_class& z,
                                     int digits = 50);

/// G(1) < G(z) < 1 at every sample in (0, 1), exact rational comparisons.
/// Samples at 0 or 1 are accepted and checked against the boundary values.
bool verify_monotonic_c(const PadeApproximant& pa, const std::vector<mpq_class>& zs);

struct WronskianResult {
  mpq_class c;
  bool ok = false;  // difference polynomial is exactly c * z^(n+1), c != 0
};

/// G_{n1+1,n2+1} H_{n1,n2} - G_{n1,n2} H_{n1+1,n2+1}, expanded exactly.
WronskianResult wronskian_e(unsigned n1, unsigned n2);

/// lambda with (4w)^(lambda-1) < (q/w)^(1/2) <= (4w)^lambda, plus two
/// adjacent degree candidates (n1, n2 = n1 + lambda) starting at
/// n1 = max(1, ceil((2 lambda - 2)/3)). For lambda >= 2 both candidates lie
/// in [2 lambda/3 - 2/3, 2 lambda/3 + 1]; for lambda = 1 the second sits just
/// above it, kept so the caller always has an adjacent pair to test against
/// its nonvanishing requirement.
struct ApproximantChoice {
  unsigned long lambda = 0;
  std::array<std::pair<unsigned long, unsigned long>, 2> candidates{};
};

/// Requires q > w >= 2.
ApproximantChoice choose_approximant(const mpz_class& w, const mpz_class& q, const mpz_class& D);

}  // namespace rnagell
