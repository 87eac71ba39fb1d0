#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace rnagell {

/// One equation family x^2 + D = 2^s * p1^k * p2^l.
struct Instance {
  mpz_class D;
  mpz_class p1;
  mpz_class p2;

  /// Throws std::invalid_argument unless D >= 1, p1 < p2 are odd primes
  /// and neither divides D.
  Instance(mpz_class D_, mpz_class p1_, mpz_class p2_);
};

/// A solution tuple; y = x^2 + D = 2^s * p1^k * p2^l with s in {0, 2}.
struct Solution {
  mpz_class x;
  int s = 0;
  unsigned long k = 0;
  unsigned long l = 0;
  mpz_class y;

  bool verify(const Instance& inst) const;
};

struct SmoothValue {
  mpz_class y;
  int s = 0;
  unsigned long k = 0;
  unsigned long l = 0;
};

/// All y = 2^s * p1^k * p2^l <= bound with s in {0, 2}, ascending in y.
/// Each exponent triple appears once; ties cannot occur.
std::vector<SmoothValue> enumerate_smooth(const Instance& inst, const mpz_class& bound);

/// All solutions with y <= bound, ascending in y. Candidates come from
/// enumerate_smooth and are kept when y - D is a perfect square; x = 0 is
/// admitted. Empty when bound < D.
std::vector<Solution> solve(const Instance& inst, const mpz_class& bound);

std::optional<Solution> smallest_solution(const Instance& inst, const mpz_class& bound);

}  // namespace rnagell
