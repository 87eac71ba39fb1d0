#pragma once

// Brute-force reference implementations the library is tested against.
// These deliberately take the slow, direct route and never share code with
// the implementations they check.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "rnagell/solver.hpp"

namespace oracle {

struct Tuple {
  mpz_class x;
  int s;
  unsigned long k, l;
  mpz_class y;
};

// Loop x = 0.. and factor x^2 + D by repeated division.
inline std::vector<Tuple> brute_solve(const mpz_class& D, const mpz_class& p1,
                                      const mpz_class& p2, const mpz_class& bound) {
  std::vector<Tuple> out;
  for (mpz_class x = 0; x * x + D <= bound; ++x) {
    mpz_class y = x * x + D;
    mpz_class rest = y;
    int s = 0;
    unsigned long k = 0, l = 0;
    while (mpz_even_p(rest.get_mpz_t())) {
      rest >>= 1;
      ++s;
    }
    while (mpz_divisible_p(rest.get_mpz_t(), p1.get_mpz_t())) {
      rest /= p1;
      ++k;
    }
    while (mpz_divisible_p(rest.get_mpz_t(), p2.get_mpz_t())) {
      rest /= p2;
      ++l;
    }
    if (rest == 1 && (s == 0 || s == 2)) out.push_back({x, s, k, l, y});
  }
  return out;
}

// All X in [0, m) with X^2 ≡ a (mod m), by scanning.
inline std::vector<mpz_class> brute_sqrt_mod(const mpz_class& a, const mpz_class& m) {
  std::vector<mpz_class> out;
  mpz_class target = a % m;
  if (target < 0) target += m;
  for (mpz_class x = 0; x < m; ++x)
    if (x * x % m == target) out.push_back(x);
  return out;
}

inline bool equal_solutions(const std::vector<rnagell::Solution>& got,
                            const std::vector<Tuple>& want) {
  if (got.size() != want.size()) return false;
  for (size_t i = 0; i < got.size(); ++i) {
    if (got[i].x != want[i].x || got[i].s != want[i].s || got[i].k != want[i].k ||
        got[i].l != want[i].l || got[i].y != want[i].y)
      return false;
  }
  return true;
}

}  // namespace oracle
