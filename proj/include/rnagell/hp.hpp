#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace rnagell::hp {

// Working precision in bits for a decimal digit count, with guard bits.
mpfr_prec_t bits_for_digits(int digits);

// Value-semantic wrapper around mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits) const;

  static Real from_z(const mpz_class& z, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real from_q(const mpq_class& q, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real from_ui(unsigned long u, mpfr_prec_t bits);

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] with outward-rounded endpoints.
struct Interval {
  Real lo, hi;

  explicit Interval(mpfr_prec_t bits) : lo(bits), hi(bits) {}
  Interval(Real l, Real h) : lo(std::move(l)), hi(std::move(h)) {}

  static Interval exact_z(const mpz_class& z, mpfr_prec_t bits);
  static Interval exact_q(const mpq_class& q, mpfr_prec_t bits);
  static Interval exact_ui(unsigned long u, mpfr_prec_t bits);
  static Interval pi(mpfr_prec_t bits);
  static Interval log_ui(unsigned long u, mpfr_prec_t bits);
  static Interval log_z(const mpz_class& z, mpfr_prec_t bits);  // z >= 1
  // atan2(y, x) for y >= 0 and exact integer x.
  static Interval atan2(const Interval& y, const mpz_class& x, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return lo.precision(); }

  Interval add(const Interval& o) const;
  Interval sub(const Interval& o) const;
  Interval neg() const;
  Interval mul(const Interval& o) const;
  Interval div(const Interval& o) const;  // o must be strictly positive
  Interval mul_si(long m) const;
  Interval mul_z(const mpz_class& m) const;
  Interval abs() const;
  Interval sqrt() const;  // requires lo >= 0
  Interval rootn(unsigned long n) const;
  Interval exp() const;
  Interval pow_q(const mpq_class& e) const;  // requires lo >= 1 and e >= 0

  bool certainly_less(const Interval& o) const { return mpfr_cmp(hi.raw(), o.lo.raw()) < 0; }
  bool certainly_greater(const Interval& o) const { return mpfr_cmp(lo.raw(), o.hi.raw()) > 0; }
  bool contains_zero() const;

  double lo_double() const { return lo.to_double(); }
  double hi_double() const { return hi.to_double(); }
  double mid_double() const;
};

}  // namespace rnagell::hp
