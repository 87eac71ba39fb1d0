#include "rnagell/gaps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rnagell/bounds.hpp"
#include "rnagell/core_arith.hpp"
#include "rnagell/hp.hpp"

namespace rnagell {

using hp::Interval;
using hp::Real;

namespace {

constexpr mpfr_prec_t kGapPrec = 128;

void require_class(const std::vector<Solution>& cls, const Instance& inst, int j) {
  if (j < 0 || j > 3) throw std::invalid_argument("quarter class index must be in 0..3");
  for (size_t i = 0; i < cls.size(); ++i) {
    if (i > 0 && cls[i - 1].y > cls[i].y)
      throw std::invalid_argument("class solutions must be sorted ascending in y");
    if (quarter_class(cls[i], inst).j != j)
      throw std::invalid_argument("solution does not belong to the given quarter class");
  }
}

double log10_of(const Real& v) {
  Real t(v.precision());
  mpfr_log10(t.raw(), v.raw(), MPFR_RNDN);
  return t.to_double();
}

double log10_z(const mpz_class& v) { return log10_of(Real::from_z(v, kGapPrec)); }

// (1/2) * (y1/4)^(3/4) = (1/2) * (y1^3 / 64)^(1/4)
Real weak_rhs(const mpz_class& y1) {
  mpz_class cube = y1 * y1 * y1;
  Real t = Real::from_z(cube, kGapPrec);
  mpfr_div_ui(t.raw(), t.raw(), 64, MPFR_RNDN);
  mpfr_rootn_ui(t.raw(), t.raw(), 4, MPFR_RNDN);
  mpfr_div_ui(t.raw(), t.raw(), 2, MPFR_RNDN);
  return t;
}

// x1^(3/2) / 2^(5/2)
double chained_rhs(const mpz_class& x1) {
  mpz_class cube = x1 * x1 * x1;
  Real t = Real::from_z(cube, kGapPrec);
  mpfr_sqrt(t.raw(), t.raw(), MPFR_RNDN);
  Real d(kGapPrec);
  mpfr_sqrt_ui(d.raw(), 32, MPFR_RNDN);
  mpfr_div(t.raw(), t.raw(), d.raw(), MPFR_RNDN);
  return t.to_double();
}

}  // namespace

bool GapReport::satisfied() const {
  if (std::isfinite(lhs) && std::isfinite(rhs)) return lhs > rhs;
  return lhs_log10 > rhs_log10;
}

std::optional<GapReport> weak_gap_pair(const std::vector<Solution>& cls, const Instance& inst,
                                       int j) {
  require_class(cls, inst, j);
  if (j == 1 || j == 2) return std::nullopt;  // the pair bound needs an edge window
  if (cls.size() < 2) return std::nullopt;
  GapReport r;
  r.kind = GapReport::Kind::WeakPair;
  r.j = j;
  r.witnesses = {cls[0], cls[1]};
  Real rhs = weak_rhs(cls[0].y);
  r.lhs = cls[1].x.get_d();
  r.rhs = rhs.to_double();
  r.lhs_log10 = log10_z(cls[1].x);
  r.rhs_log10 = log10_of(rhs);
  return r;
}

std::optional<GapReport> weak_gap_triple(const std::vector<Solution>& cls, const Instance& inst,
                                         int j) {
  require_class(cls, inst, j);
  if (cls.size() < 3) return std::nullopt;
  GapReport r;
  r.kind = GapReport::Kind::WeakTriple;
  r.j = j;
  r.witnesses = {cls[0], cls[1], cls[2]};
  Real rhs = weak_rhs(cls[0].y);
  r.lhs = cls[2].x.get_d();
  r.rhs = rhs.to_double();
  r.lhs_log10 = log10_z(cls[2].x);
  r.rhs_log10 = log10_of(rhs);
  r.rhs_chained = chained_rhs(cls[0].x);
  return r;
}

std::optional<GapReport> strong_gap(const std::vector<Solution>& cls, const Instance& inst, int j,
                                    int digits) {
  require_class(cls, inst, j);
  const size_t need = (j == 0 || j == 3) ? 3 : 4;
  if (cls.size() < need) return std::nullopt;
  const mpz_class threshold = inst.D * 1000000;
  for (size_t i = 0; i < need; ++i)
    if (cls[i].x <= threshold) return std::nullopt;
  GapReport r;
  r.kind = GapReport::Kind::Strong;
  r.j = j;
  r.witnesses.assign(cls.begin(), cls.begin() + static_cast<long>(need));
  Real rhs = strong_gap_map(cls[0].y, digits);
  r.lhs = cls[need - 1].y.get_d();
  r.rhs = rhs.to_double();
  r.lhs_log10 = log10_z(cls[need - 1].y);
  r.rhs_log10 = log10_of(rhs);
  return r;
}

std::vector<GapReport> check_all_gaps(const std::vector<Solution>& solutions, const Instance& inst,
                                      const mpz_class& low_y,
                                      const std::optional<mpz_class>& high_y, int digits) {
  std::map<int, std::vector<Solution>> by_quarter;
  for (const auto& [key, sols] : partition(solutions, inst, low_y, high_y)) {
    auto& dst = by_quarter[key.j];
    dst.insert(dst.end(), sols.begin(), sols.end());
  }
  std::vector<GapReport> out;
  for (auto& [j, cls] : by_quarter) {
    std::sort(cls.begin(), cls.end(),
              [](const Solution& a, const Solution& b) { return a.y < b.y; });
    if (auto r = weak_gap_pair(cls, inst, j)) out.push_back(std::move(*r));
    if (auto r = weak_gap_triple(cls, inst, j)) out.push_back(std::move(*r));
    if (auto r = strong_gap(cls, inst, j, digits)) out.push_back(std::move(*r));
  }
  return out;
}

LambdaDiagnostic lambda_diagnostic(const std::array<Solution, 3>& sols, const Instance& inst,
                                   int digits, double tolerance) {
  // deliberately no invariant check on the tuples: perturbed exponents are a
  // legitimate input (the negative control feeds exactly those)
  if (sols[0].x == sols[1].x || sols[0].x == sols[2].x || sols[1].x == sols[2].x)
    throw std::invalid_argument("three distinct solutions required");
  for (const auto& s : sols)
    if (sgn(s.x) < 0) throw std::invalid_argument("arguments need x >= 0");

  LambdaDiagnostic diag;
  diag.tolerance = tolerance;
  diag.d = squarefree_part(inst.D).d;
  diag.f = diag.d == 3 ? 6 : (diag.d == 1 ? 4 : 2);

  const mpfr_prec_t p = hp::bits_for_digits(digits);
  Interval sqrt_d = Interval::exact_z(inst.D, p).sqrt();
  std::array<Interval, 3> theta = {Interval(p), Interval(p), Interval(p)};
  std::array<long, 3> k{}, l{};
  for (int i = 0; i < 3; ++i) {
    theta[i] = Interval::atan2(sqrt_d, sols[i].x, p);
    k[i] = static_cast<long>(sols[i].k);
    l[i] = static_cast<long>(sols[i].l);
  }

  Interval modulus = Interval::pi(p).mul_si(2).div(Interval::exact_ui(diag.f, p));

  bool any_nonzero = false;
  double best_hi = 0.0, min_lo = 0.0;
  bool have_best = false;
  for (int mask = 0; mask < 8; ++mask) {
    std::array<long, 3> eps = {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
    std::array<long, 3> e = {k[1] * eps[2] * l[2] - k[2] * eps[1] * l[1],
                             k[2] * eps[0] * l[0] - k[0] * eps[2] * l[2],
                             k[0] * eps[1] * l[1] - k[1] * eps[0] * l[0]};
    if (e[0] == 0 && e[1] == 0 && e[2] == 0) continue;
    any_nonzero = true;
    for (int bmask = 0; bmask < 4; ++bmask) {  // branch of the first argument fixed by symmetry
      std::array<int, 3> branch = {1, bmask & 1 ? -1 : 1, bmask & 2 ? -1 : 1};
      Interval lambda = theta[0].mul_si(e[0] * branch[0]);
      lambda = lambda.add(theta[1].mul_si(e[1] * branch[1]));
      lambda = lambda.add(theta[2].mul_si(e[2] * branch[2]));

      Real q(p);
      mpfr_div(q.raw(), lambda.lo.raw(), modulus.lo.raw(), MPFR_RNDN);
      mpfr_rint(q.raw(), q.raw(), MPFR_RNDN);
      mpz_class steps;
      mpfr_get_z(steps.get_mpz_t(), q.raw(), MPFR_RNDN);
      Interval residue = lambda.sub(modulus.mul_z(steps)).abs();

      LambdaChoice choice;
      choice.e = e;
      choice.branch = branch;
      choice.lambda = lambda.mid_double();
      choice.distance = residue.hi_double();
      diag.choices.push_back(choice);

      double res_lo = residue.lo_double();
      if (!have_best || choice.distance < best_hi) {
        best_hi = choice.distance;
        diag.best_e = e;
      }
      if (!have_best || res_lo < min_lo) min_lo = res_lo;
      have_best = true;
    }
  }

  diag.degenerate = !any_nonzero;
  if (have_best) {
    diag.min_distance = best_hi;
    diag.min_distance_lower = min_lo;
  }
  return diag;
}

}  // namespace rnagell
