#include "rnagell/hp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rnagell::hp {

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("digit count must be positive");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}

Real::Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_nan(v_); }

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real Real::from_z(const mpz_class& z, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Real r(bits);
  mpfr_set_z(r.v_, z.get_mpz_t(), rnd);
  return r;
}

Real Real::from_q(const mpq_class& q, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Real r(bits);
  mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
  return r;
}

Real Real::from_ui(unsigned long u, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ui(r.v_, u, MPFR_RNDN);
  return r;
}

Interval Interval::exact_z(const mpz_class& z, mpfr_prec_t bits) {
  return {Real::from_z(z, bits, MPFR_RNDD), Real::from_z(z, bits, MPFR_RNDU)};
}

Interval Interval::exact_q(const mpq_class& q, mpfr_prec_t bits) {
  return {Real::from_q(q, bits, MPFR_RNDD), Real::from_q(q, bits, MPFR_RNDU)};
}

Interval Interval::exact_ui(unsigned long u, mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_set_ui(r.lo.raw(), u, MPFR_RNDD);
  mpfr_set_ui(r.hi.raw(), u, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_const_pi(r.lo.raw(), MPFR_RNDD);
  mpfr_const_pi(r.hi.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::log_ui(unsigned long u, mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_log_ui(r.lo.raw(), u, MPFR_RNDD);
  mpfr_log_ui(r.hi.raw(), u, MPFR_RNDU);
  return r;
}

Interval Interval::log_z(const mpz_class& z, mpfr_prec_t bits) {
  if (sgn(z) <= 0) throw std::invalid_argument("log_z requires z >= 1");
  Interval v = exact_z(z, bits);
  Interval r(bits);
  mpfr_log(r.lo.raw(), v.lo.raw(), MPFR_RNDD);
  mpfr_log(r.hi.raw(), v.hi.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::atan2(const Interval& y, const mpz_class& x, mpfr_prec_t bits) {
  if (mpfr_sgn(y.lo.raw()) < 0) throw std::invalid_argument("atan2 interval requires y >= 0");
  Real xlo = Real::from_z(x, bits, MPFR_RNDD);
  Real xhi = Real::from_z(x, bits, MPFR_RNDU);
  Interval r(bits);
  // increasing in y, decreasing in x on the upper half plane
  mpfr_atan2(r.lo.raw(), y.lo.raw(), xhi.raw(), MPFR_RNDD);
  mpfr_atan2(r.hi.raw(), y.hi.raw(), xlo.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::add(const Interval& o) const {
  Interval r(std::max(precision(), o.precision()));
  mpfr_add(r.lo.raw(), lo.raw(), o.lo.raw(), MPFR_RNDD);
  mpfr_add(r.hi.raw(), hi.raw(), o.hi.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::sub(const Interval& o) const {
  Interval r(std::max(precision(), o.precision()));
  mpfr_sub(r.lo.raw(), lo.raw(), o.hi.raw(), MPFR_RNDD);
  mpfr_sub(r.hi.raw(), hi.raw(), o.lo.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::neg() const {
  Interval r(precision());
  mpfr_neg(r.lo.raw(), hi.raw(), MPFR_RNDD);
  mpfr_neg(r.hi.raw(), lo.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::mul(const Interval& o) const {
  mpfr_prec_t p = std::max(precision(), o.precision());
  Interval r(p);
  Real t(p);
  mpfr_srcptr a[2] = {lo.raw(), hi.raw()};
  mpfr_srcptr b[2] = {o.lo.raw(), o.hi.raw()};
  bool first = true;
  for (auto x : a) {
    for (auto y : b) {
      mpfr_mul(t.raw(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.raw(), r.lo.raw()) < 0) mpfr_set(r.lo.raw(), t.raw(), MPFR_RNDD);
      mpfr_mul(t.raw(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.raw(), r.hi.raw()) > 0) mpfr_set(r.hi.raw(), t.raw(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval Interval::div(const Interval& o) const {
  if (mpfr_sgn(o.lo.raw()) <= 0) throw std::invalid_argument("interval division needs a positive divisor");
  mpfr_prec_t p = std::max(precision(), o.precision());
  Interval r(p);
  Real t(p);
  mpfr_srcptr a[2] = {lo.raw(), hi.raw()};
  mpfr_srcptr b[2] = {o.lo.raw(), o.hi.raw()};
  bool first = true;
  for (auto x : a) {
    for (auto y : b) {
      mpfr_div(t.raw(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.raw(), r.lo.raw()) < 0) mpfr_set(r.lo.raw(), t.raw(), MPFR_RNDD);
      mpfr_div(t.raw(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.raw(), r.hi.raw()) > 0) mpfr_set(r.hi.raw(), t.raw(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval Interval::mul_si(long m) const {
  Interval r(precision());
  if (m >= 0) {
    mpfr_mul_si(r.lo.raw(), lo.raw(), m, MPFR_RNDD);
    mpfr_mul_si(r.hi.raw(), hi.raw(), m, MPFR_RNDU);
  } else {
    mpfr_mul_si(r.lo.raw(), hi.raw(), m, MPFR_RNDD);
    mpfr_mul_si(r.hi.raw(), lo.raw(), m, MPFR_RNDU);
  }
  return r;
}

Interval Interval::mul_z(const mpz_class& m) const {
  Interval r(precision());
  if (sgn(m) >= 0) {
    mpfr_mul_z(r.lo.raw(), lo.raw(), m.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi.raw(), hi.raw(), m.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(r.lo.raw(), hi.raw(), m.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi.raw(), lo.raw(), m.get_mpz_t(), MPFR_RNDU);
  }
  return r;
}

Interval Interval::abs() const {
  Interval r(precision());
  if (mpfr_sgn(lo.raw()) >= 0) return *this;
  if (mpfr_sgn(hi.raw()) <= 0) return neg();
  mpfr_set_ui(r.lo.raw(), 0, MPFR_RNDD);
  Real nl(precision());
  mpfr_neg(nl.raw(), lo.raw(), MPFR_RNDU);
  if (mpfr_cmp(nl.raw(), hi.raw()) > 0)
    mpfr_set(r.hi.raw(), nl.raw(), MPFR_RNDU);
  else
    mpfr_set(r.hi.raw(), hi.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo.raw()) < 0) throw std::invalid_argument("sqrt of an interval with negative endpoint");
  Interval r(precision());
  mpfr_sqrt(r.lo.raw(), lo.raw(), MPFR_RNDD);
  mpfr_sqrt(r.hi.raw(), hi.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::rootn(unsigned long n) const {
  if (mpfr_sgn(lo.raw()) < 0) throw std::invalid_argument("rootn of an interval with negative endpoint");
  Interval r(precision());
  mpfr_rootn_ui(r.lo.raw(), lo.raw(), n, MPFR_RNDD);
  mpfr_rootn_ui(r.hi.raw(), hi.raw(), n, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(precision());
  mpfr_exp(r.lo.raw(), lo.raw(), MPFR_RNDD);
  mpfr_exp(r.hi.raw(), hi.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::pow_q(const mpq_class& e) const {
  if (mpfr_cmp_ui(lo.raw(), 1) < 0) throw std::invalid_argument("pow_q requires base >= 1");
  if (sgn(e) < 0) throw std::invalid_argument("pow_q requires exponent >= 0");
  mpfr_prec_t p = precision();
  Real elo = Real::from_q(e, p, MPFR_RNDD);
  Real ehi = Real::from_q(e, p, MPFR_RNDU);
  Interval r(p);
  mpfr_pow(r.lo.raw(), lo.raw(), elo.raw(), MPFR_RNDD);
  mpfr_pow(r.hi.raw(), hi.raw(), ehi.raw(), MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo.raw()) <= 0 && mpfr_sgn(hi.raw()) >= 0;
}

double Interval::mid_double() const {
  double a = lo.to_double(), b = hi.to_double();
  if (std::isinf(a) || std::isinf(b)) return std::isinf(b) ? b : a;
  return 0.5 * (a + b);
}

}  // namespace rnagell::hp
