#include "rnagell/classifier.hpp"

#include <cmath>
#include <stdexcept>

#include "rnagell/core_arith.hpp"
#include "rnagell/hp.hpp"

namespace rnagell {

namespace {

constexpr double kBoundaryTol = 1e-9;

// sign of t - a/b for k, l > 0, i.e. of (b-a)k*log(p1) - a*l*log(p2).
// Directed-rounding comparison at escalating precision; the exact integer
// power comparison p1^((b-a)k) <=> p2^(a*l) is the last resort, guarded so a
// huge-denominator alpha cannot demand astronomically large powers.
int compare_exact(const Instance& inst, unsigned long k, unsigned long l, const mpq_class& alpha) {
  mpz_class a = alpha.get_num();
  mpz_class b = alpha.get_den();
  mpz_class e1 = (b - a) * k;
  mpz_class e2 = a * l;

  for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
    hp::Interval diff = hp::Interval::log_z(inst.p1, prec).mul_z(e1).sub(
        hp::Interval::log_z(inst.p2, prec).mul_z(e2));
    if (mpfr_sgn(diff.lo.raw()) > 0) return 1;
    if (mpfr_sgn(diff.hi.raw()) < 0) return -1;
  }

  const mpz_class bit_budget = 20000000;
  if (!e1.fits_ulong_p() || !e2.fits_ulong_p() ||
      e1 * mpz_sizeinbase(inst.p1.get_mpz_t(), 2) > bit_budget ||
      e2 * mpz_sizeinbase(inst.p2.get_mpz_t(), 2) > bit_budget)
    throw std::invalid_argument("class comparison too close to decide");
  mpz_class lhs = pow_ui(inst.p1, e1.get_ui());
  mpz_class rhs = pow_ui(inst.p2, e2.get_ui());
  return cmp(lhs, rhs);
}

}  // namespace

Window::Window(mpq_class alpha_, mpq_class delta_, mpz_class low_y_,
               std::optional<mpz_class> high_y_)
    : alpha(std::move(alpha_)), delta(std::move(delta_)), low_y(std::move(low_y_)),
      high_y(std::move(high_y_)) {
  alpha.canonicalize();
  delta.canonicalize();
  if (sgn(alpha) < 0 || sgn(delta) < 0 || alpha + delta > 1)
    throw std::invalid_argument("window requires 0 <= alpha <= alpha+delta <= 1");
  if (sgn(low_y) < 0) throw std::invalid_argument("low_y must be >= 0");
  if (high_y && *high_y <= low_y) throw std::invalid_argument("low_y < high_y required");
}

namespace {

// natural log of a positive mpz without overflowing the double conversion
double log_of(const mpz_class& z) {
  long exp2 = 0;
  double mantissa = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * 0.6931471805599453;
}

}  // namespace

double fraction(const Solution& sol, const Instance& inst) {
  if (sol.k == 0 && sol.l == 0) return 0.0;
  double a = static_cast<double>(sol.k) * log_of(inst.p1);
  double b = static_cast<double>(sol.l) * log_of(inst.p2);
  return a / (a + b);
}

int compare_fraction(const Solution& sol, const Instance& inst, const mpq_class& alpha) {
  mpq_class a = alpha;
  a.canonicalize();
  if (sol.k == 0 && sol.l == 0) return sgn(a) > 0 ? -1 : 0;
  if (sol.l == 0) return a < 1 ? 1 : 0;
  if (sol.k == 0) return sgn(a) > 0 ? -1 : 0;
  double t = fraction(sol, inst);
  double diff = t - a.get_d();
  if (std::abs(diff) > kBoundaryTol) return diff > 0 ? 1 : -1;
  return compare_exact(inst, sol.k, sol.l, a);
}

bool membership(const Solution& sol, const Instance& inst, const Window& w) {
  if (sol.y < w.low_y) return false;
  if (w.high_y && sol.y >= *w.high_y) return false;
  // k = l = 0 reads 1 <= 1 <= 1 in the defining inequality: every window
  if (sol.k == 0 && sol.l == 0) return true;
  if (compare_fraction(sol, inst, w.alpha) < 0) return false;
  return compare_fraction(sol, inst, w.alpha + w.delta) <= 0;
}

ClassKey quarter_class(const Solution& sol, const Instance& inst) {
  ClassKey key{0, static_cast<int>(sol.k % 2), static_cast<int>(sol.l % 2)};
  if (sol.k == 0) return key;  // covers k = l = 0 and pure-p2 values
  if (sol.l == 0) {
    key.j = 3;  // t = 1 clamps into the top quarter
    return key;
  }
  double x4 = 4.0 * fraction(sol, inst);
  double nearest = std::round(x4);
  if (nearest >= 1.0 && nearest <= 3.0 && std::abs(x4 - nearest) <= kBoundaryTol) {
    for (int j = 3; j >= 1; --j) {
      if (compare_fraction(sol, inst, mpq_class(j, 4)) >= 0) {
        key.j = j;
        return key;
      }
    }
    return key;
  }
  key.j = std::min(static_cast<int>(x4), 3);
  return key;
}

std::map<ClassKey, std::vector<Solution>> partition(const std::vector<Solution>& solutions,
                                                    const Instance& inst, const mpz_class& low_y,
                                                    const std::optional<mpz_class>& high_y) {
  std::map<ClassKey, std::vector<Solution>> out;
  for (const auto& sol : solutions) {
    if (sol.y < low_y) continue;
    if (high_y && sol.y >= *high_y) continue;
    out[quarter_class(sol, inst)].push_back(sol);
  }
  return out;
}

}  // namespace rnagell
