#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace rnagell {

/// An odd prime power p^e used as a congruence modulus.
struct Modulus {
  mpz_class p;
  unsigned e;

  /// Throws std::invalid_argument unless p is an odd prime >= 3 and e >= 1.
  Modulus(mpz_class prime, unsigned exponent);

  mpz_class value() const;  // p^e
};

/// D = b^2 * d with d squarefree.
struct SquarefreeDecomposition {
  mpz_class d;
  mpz_class b;
};

/// Floor of the square root of n (n >= 0).
mpz_class isqrt(const mpz_class& n);

/// The x with x^2 == n, when n is a perfect square.
std::optional<mpz_class> as_square(const mpz_class& n);

/// All residues X in [0, p^e) with X^2 ≡ a (mod p^e), sorted ascending.
/// Tonelli–Shanks at e = 1, Hensel lifting above; when p | a the p-adic
/// valuation of a is split off analytically instead of scanning residues.
std::vector<mpz_class> sqrt_mod_prime_power(const mpz_class& a, const Modulus& m);

/// Sorted residues X mod (m1.value() * m2.value()) with X^2 + D ≡ 0.
/// Requires m1.p != m2.p and neither prime dividing D; the result has
/// 0 or 4 elements and is closed under X -> M - X.
std::vector<mpz_class> roots_of_x2_plus_D(const mpz_class& D, const Modulus& m1, const Modulus& m2);

/// Squarefree decomposition by trial division; intended for desk-scale D.
SquarefreeDecomposition squarefree_part(const mpz_class& D);

bool is_odd_prime(const mpz_class& p);

mpz_class pow_ui(const mpz_class& base, unsigned long e);

/// Trial-division factorization, ascending (prime, exponent) pairs.
std::vector<std::pair<mpz_class, unsigned>> trial_factor(const mpz_class& n);

}  // namespace rnagell
