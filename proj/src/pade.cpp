#include "rnagell/pade.hpp"

#include <stdexcept>

#include "rnagell/hp.hpp"

namespace rnagell {

using hp::Interval;

namespace {

// F(a, -deg, -n, z) for half-integer a = a2/2, terminating at z^deg.
std::vector<mpq_class> hypergeometric_poly(long a2, unsigned deg, unsigned n) {
  std::vector<mpq_class> coeffs;
  coeffs.reserve(deg + 1);
  mpq_class term(1);
  coeffs.push_back(term);
  for (unsigned j = 0; j < deg; ++j) {
    // multiply by (a + j)(-deg + j) / ((j + 1)(-n + j))
    term *= mpq_class(a2 + 2 * static_cast<long>(j), 2);
    term *= mpq_class(-static_cast<long>(deg) + static_cast<long>(j));
    term /= mpq_class(j + 1);
    term /= mpq_class(-static_cast<long>(n) + static_cast<long>(j));
    coeffs.push_back(term);
  }
  return coeffs;
}

mpz_class binom(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<mpz_class> scale_integral(const std::vector<mpq_class>& coeffs, const mpz_class& scale) {
  std::vector<mpz_class> out;
  out.reserve(coeffs.size());
  mpq_class pow4(1);
  for (const auto& c : coeffs) {
    mpq_class v = c * pow4 * scale;
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("scaled approximant coefficient is not integral");
    out.push_back(v.get_num());
    pow4 *= 4;
  }
  return out;
}

mpq_class poly_eval(const std::vector<mpq_class>& coeffs, const mpq_class& z) {
  mpq_class v(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
  return v;
}

std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  std::vector<mpq_class> r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

PadeApproximant build(unsigned n1, unsigned n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("n1, n2 must be >= 1");
  PadeApproximant pa;
  pa.n1 = n1;
  pa.n2 = n2;
  pa.n = n1 + n2;
  pa.g_coeffs = hypergeometric_poly(-1 - 2 * static_cast<long>(n2), n1, pa.n);
  pa.h_coeffs = hypergeometric_poly(1 - 2 * static_cast<long>(n1), n2, pa.n);
  mpz_class scale = binom(pa.n, n1);
  pa.g_scaled_int = scale_integral(pa.g_coeffs, scale);
  pa.h_scaled_int = scale_integral(pa.h_coeffs, scale);
  return pa;
}

mpq_class g_at_1(unsigned n1, unsigned n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("n1, n2 must be >= 1");
  mpq_class prod(1);
  for (unsigned m = 1; m <= n1; ++m) prod *= mpq_class(2 * m - 1, 2 * m);
  return prod / binom(n1 + n2, n1);
}

InequalityResult verify_inequality_a(const PadeApproximant& pa, const mpq_class& z, int digits) {
  if (sgn(z) <= 0 || z >= 1) throw std::invalid_argument("z must lie in (0, 1)");
  mpq_class gz = poly_eval(pa.g_coeffs, z);
  mpq_class hz = poly_eval(pa.h_coeffs, z);
  mpq_class rhs_q = g_at_1(pa.n1, pa.n2);
  mpq_class zpow(1);
  for (unsigned i = 0; i <= pa.n; ++i) zpow *= z;
  rhs_q *= zpow;

  mpfr_prec_t p = hp::bits_for_digits(digits);
  for (int attempt = 0; attempt < 3; ++attempt, p *= 2) {
    Interval sq = Interval::exact_q(1 - z, p).sqrt();
    Interval lhs = Interval::exact_q(gz, p).sub(sq.mul(Interval::exact_q(hz, p))).abs();
    Interval rhs = Interval::exact_q(rhs_q, p);
    if (lhs.certainly_less(rhs))
      return {true, rhs.lo_double() - lhs.hi_double()};
    if (lhs.certainly_greater(rhs))
      return {false, rhs.hi_double() - lhs.lo_double()};
  }
  return {false, 0.0};
}

bool verify_monotonic_c(const PadeApproximant& pa, const std::vector<mpq_class>& zs) {
  mpq_class g1 = g_at_1(pa.n1, pa.n2);
  for (const auto& z : zs) {
    if (sgn(z) < 0 || z > 1) throw std::invalid_argument("samples must lie in [0, 1]");
    mpq_class gz = poly_eval(pa.g_coeffs, z);
    if (z == 0) {
      if (gz != 1) return false;
    } else if (z == 1) {
      if (gz != g1) return false;
    } else if (!(g1 < gz && gz < 1)) {
      return false;
    }
  }
  return true;
}

WronskianResult wronskian_e(unsigned n1, unsigned n2) {
  PadeApproximant a = build(n1, n2);
  PadeApproximant b = build(n1 + 1, n2 + 1);
  std::vector<mpq_class> diff = poly_mul(b.g_coeffs, a.h_coeffs);
  std::vector<mpq_class> sub = poly_mul(a.g_coeffs, b.h_coeffs);
  if (sub.size() > diff.size()) diff.resize(sub.size(), mpq_class(0));
  for (size_t i = 0; i < sub.size(); ++i) diff[i] -= sub[i];

  const unsigned n = n1 + n2;
  WronskianResult r;
  r.ok = diff.size() > n + 1;
  for (size_t i = 0; i < diff.size() && r.ok; ++i) {
    if (i == n + 1) continue;
    if (diff[i] != 0) r.ok = false;
  }
  if (diff.size() > n + 1) r.c = diff[n + 1];
  r.ok = r.ok && r.c != 0;
  return r;
}

ApproximantChoice choose_approximant(const mpz_class& w, const mpz_class& q, const mpz_class& D) {
  if (sgn(D) <= 0) throw std::invalid_argument("D must be >= 1");
  if (w < 2) throw std::invalid_argument("w >= 2 required");
  if (q <= w) throw std::invalid_argument("q > w required");

  // smallest lambda with q <= w * (4w)^(2 lambda); then
  // w * (4w)^(2 lambda - 2) < q holds as well
  ApproximantChoice out;
  out.lambda = 1;
  mpz_class fourw = 4 * w;
  mpz_class step = fourw * fourw;
  mpz_class cap = w * step;
  while (q > cap) {
    cap *= step;
    ++out.lambda;
  }

  unsigned long n1a = out.lambda < 2 ? 1 : (2 * out.lambda - 2 + 2) / 3;  // ceil((2L-2)/3)
  if (n1a < 1) n1a = 1;
  out.candidates = {std::pair{n1a, n1a + out.lambda},
                    std::pair{n1a + 1, n1a + 1 + out.lambda}};
  return out;
}

}  // namespace rnagell
