#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rnagell/classifier.hpp"
#include "rnagell/hp.hpp"

namespace rnagell {

/// Which value of the small/middle split threshold W3 downstream code uses.
enum class W3Variant { paper, computed };

/// Derived threshold constants for one D, evaluated at `digits` significant
/// decimal digits (>= 30).
///
/// w1 = (2^(772+210*delta) * D^241)^(1/(35(2-3*delta)-(3*delta+1)/2))
/// w2 = (2^(22/9+2*delta/3) * 3^(7/3))^(1/delta1)
/// w  = max(w1, w2)
/// c  = sqrt(log(2) log(3) / 2^(7/2))
/// w3_computed = f(f(Y)) for f(y) = y^(3/2) / 2^(5/2)
///
/// w3_paper is the printed constant 3545401233665.83. It disagrees with
/// f(f(Y)) by a factor of about 4.15; both are carried and callers pick a
/// W3Variant (paper is the default everywhere downstream).
struct BoundSet {
  mpz_class D;
  mpq_class delta{1, 4};
  mpq_class delta1{4377667, 100000000};
  mpz_class Y{4883601};
  mpq_class w3_paper{mpz_class("354540123366583"), 100};
  int digits = 50;

  hp::Real w1, w2, w, c, w3_computed, w3_paper_real;

  explicit BoundSet(int digits_);

  const hp::Real& w3(W3Variant v) const {
    return v == W3Variant::paper ? w3_paper_real : w3_computed;
  }
};

BoundSet constants(const mpz_class& D, int digits = 50);

/// f(y) = y^(3/2) / 2^(5/2)
hp::Real weak_gap_map(const hp::Real& y);
hp::Real weak_gap_map(const mpz_class& y, int digits = 50);

/// g(y) = exp(c * y^(1/8))
hp::Real strong_gap_map(const hp::Real& y);
hp::Real strong_gap_map(const mpz_class& y, int digits = 50);

/// Upper bound on the next same-class solution value q relative to w:
/// max(4^70 * w^71, q*) with q* solving
///   q^(1-(1/2)(5/3+delta+delta1))
///     = 2^(31/9+s1+2*delta/3) * 3^(16/3) * D * w^(19/6+(3/2)delta-(1/2)(5/3+delta+delta1)).
/// Requires w >= constants(D).w and s1 in {0, 2}.
hp::Real beukers_next_bound(const hp::Real& w, int s1, const mpz_class& D, int digits = 50);

/// exp(c * y1^(1/8)) > beukers_next_bound(y1, 2, D), decided with directed
/// rounding; precision escalates until the comparison is certain.
bool incompatibility_check(const mpz_class& D, const hp::Real& y1, int digits = 50);
std::vector<bool> incompatibility_check(const mpz_class& D, const std::vector<hp::Real>& y1s,
                                        int digits = 50);

/// Per-class solution caps for one case of the counting argument.
struct Budget {
  std::string tag;                    // "i", "ii", "iii" or "iv"
  std::map<ClassKey, int> per_class;  // case i only: caps per (j, u, v)
  std::array<int, 4> per_quarter{};   // cases ii-iv: caps per quarter class
  int small_region = 0;               // flat cap below the value split (iii, iv)
  int section_total = 0;
};

Budget budget(const std::string& case_tag);

/// 63 = budget("i") + max over budget("ii"|"iii"|"iv") section totals.
int grand_total();

}  // namespace rnagell
