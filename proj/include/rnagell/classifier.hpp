#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "rnagell/solver.hpp"

namespace rnagell {

/// Membership window: alpha <= t <= alpha + delta on the exponent fraction
/// (both ends closed) and low_y <= y < high_y on the value, high_y absent
/// meaning unbounded. Endpoints are exact rationals so boundary comparisons
/// can escalate to integer power comparisons.
struct Window {
  mpq_class alpha;
  mpq_class delta;
  mpz_class low_y;
  std::optional<mpz_class> high_y;

  Window(mpq_class alpha_, mpq_class delta_, mpz_class low_y_,
         std::optional<mpz_class> high_y_ = std::nullopt);
};

/// Quarter class j in 0..3 plus exponent parities (u, v) = (k, l) mod 2.
struct ClassKey {
  int j = 0;
  int u = 0;
  int v = 0;

  auto operator<=>(const ClassKey&) const = default;
};

/// t = k*log(p1) / (k*log(p1) + l*log(p2)); t = 0 when k = l = 0.
double fraction(const Solution& sol, const Instance& inst);

/// Sign of t - alpha, decided exactly. Double arithmetic first; comparisons
/// within 1e-9 of the boundary fall back to comparing p1^((b-a)k) against
/// p2^(a*l) for alpha = a/b.
int compare_fraction(const Solution& sol, const Instance& inst, const mpq_class& alpha);

bool membership(const Solution& sol, const Instance& inst, const Window& w);

ClassKey quarter_class(const Solution& sol, const Instance& inst);

/// Disjoint partition of the window's solutions by quarter class.
/// `solutions` must be sorted ascending in y.
std::map<ClassKey, std::vector<Solution>> partition(const std::vector<Solution>& solutions,
                                                    const Instance& inst, const mpz_class& low_y,
                                                    const std::optional<mpz_class>& high_y);

}  // namespace rnagell
