#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <vector>

#include "rnagell/classifier.hpp"
#include "rnagell/solver.hpp"

namespace rnagell {

/// One gap-principle check over a quarter-class solution list.
/// satisfied() is always recomputed from the stored sides, never cached.
/// The log10 fields carry the comparison when the linear doubles overflow
/// (strong-gap right sides grow past double range long before the math
/// stops being meaningful).
struct GapReport {
  enum class Kind { WeakPair, WeakTriple, Strong };

  Kind kind = Kind::WeakPair;
  int j = 0;
  std::vector<Solution> witnesses;
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_log10 = 0.0;
  double rhs_log10 = 0.0;
  double rhs_chained = 0.0;  // WeakTriple only: x1^(3/2) / 2^(5/2)

  bool satisfied() const;
};

/// Two solutions in an edge quarter class (j = 0 or 3) force
/// x2 > (1/2) ((x1^2+D)/4)^(3/4). Not applicable (nullopt) for j in {1, 2}
/// or when the class has fewer than two members.
std::optional<GapReport> weak_gap_pair(const std::vector<Solution>& cls, const Instance& inst,
                                       int j);

/// Three solutions in any quarter class force x3 > (1/2) ((x1^2+D)/4)^(3/4);
/// the chained form x1^(3/2)/2^(5/2) is reported alongside.
std::optional<GapReport> weak_gap_triple(const std::vector<Solution>& cls, const Instance& inst,
                                         int j);

/// With 3 members (j = 0, 3) or 4 members (j = 1, 2), all with x > 10^6 D,
/// the last one satisfies y > exp(c y1^(1/8)). Not applicable when the
/// hypothesis fails.
std::optional<GapReport> strong_gap(const std::vector<Solution>& cls, const Instance& inst, int j,
                                    int digits = 50);

/// Groups the window's solutions by quarter class and runs every applicable
/// gap check. `solutions` must be sorted ascending in y.
std::vector<GapReport> check_all_gaps(const std::vector<Solution>& solutions, const Instance& inst,
                                      const mpz_class& low_y = 0,
                                      const std::optional<mpz_class>& high_y = std::nullopt,
                                      int digits = 50);

/// One evaluated sign configuration of the linear form in arguments.
struct LambdaChoice {
  std::array<long, 3> e{};       // e1 = ±k2 l3 ± k3 l2, and cyclically
  std::array<int, 3> branch{};   // per-solution argument branch (+1 or -1)
  double lambda = 0.0;
  double distance = 0.0;         // |lambda mod 2*pi/f|, outward-rounded
};

/// Check that e1 arg(x1 ± sqrt(-D)) + e2 arg(x2 ± sqrt(-D)) + e3 arg(x3 ± sqrt(-D))
/// lands on a multiple of 2*pi/f for some sign configuration, where f counts
/// the roots of unity of Q(sqrt(-d)) for the squarefree part d of D.
struct LambdaDiagnostic {
  mpz_class d;
  int f = 2;  // 6 if d = 3, 4 if d = 1, 2 otherwise
  bool degenerate = false;
  std::vector<LambdaChoice> choices;
  std::array<long, 3> best_e{};
  double min_distance = 0.0;        // min over choices, outward-rounded up
  double min_distance_lower = 0.0;  // same minimum, rounded down
  double tolerance = 1e-30;

  bool within_tolerance() const { return !degenerate && min_distance < tolerance; }
};

/// Arguments are evaluated as intervals at `digits` working digits; all
/// 2^3 relative (k, ±l) sign choices and 2^3 per-solution argument branches
/// are enumerated (modulo a global sign, 32 configurations).
LambdaDiagnostic lambda_diagnostic(const std::array<Solution, 3>& sols, const Instance& inst,
                                   int digits = 50, double tolerance = 1e-30);

}  // namespace rnagell
