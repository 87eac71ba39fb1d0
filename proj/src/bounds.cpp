#include "rnagell/bounds.hpp"

#include <stdexcept>

namespace rnagell {

using hp::Interval;
using hp::Real;

namespace {

// midpoint chain at working precision; verdicts go through intervals below
Real pow_q_mid(const Real& base, const mpq_class& e) {
  Real ex = Real::from_q(e, base.precision());
  Real r(base.precision());
  mpfr_pow(r.raw(), base.raw(), ex.raw(), MPFR_RNDN);
  return r;
}

Real f_map(const Real& y) {
  mpfr_prec_t p = y.precision();
  Real t(p), d(p);
  mpfr_pow_ui(t.raw(), y.raw(), 3, MPFR_RNDN);
  mpfr_sqrt(t.raw(), t.raw(), MPFR_RNDN);
  mpfr_sqrt_ui(d.raw(), 32, MPFR_RNDN);
  mpfr_div(t.raw(), t.raw(), d.raw(), MPFR_RNDN);
  return t;
}

Real c_mid(mpfr_prec_t p) {
  Real l2(p), l3(p), t(p), d(p);
  mpfr_log_ui(l2.raw(), 2, MPFR_RNDN);
  mpfr_log_ui(l3.raw(), 3, MPFR_RNDN);
  mpfr_mul(t.raw(), l2.raw(), l3.raw(), MPFR_RNDN);
  mpfr_sqrt_ui(d.raw(), 128, MPFR_RNDN);
  mpfr_div(t.raw(), t.raw(), d.raw(), MPFR_RNDN);
  mpfr_sqrt(t.raw(), t.raw(), MPFR_RNDN);
  return t;
}

Interval c_interval(mpfr_prec_t p) {
  Interval num = Interval::log_ui(2, p).mul(Interval::log_ui(3, p));
  Interval den = Interval::exact_ui(128, p).sqrt();
  return num.div(den).sqrt();
}

struct Exponents {
  mpq_class root;  // 1 - (1/2)(5/3 + delta + delta1)
  mpq_class ew;    // 19/6 + (3/2)delta - (1/2)(5/3 + delta + delta1)
  mpq_class e2;    // 31/9 + s1 + (2/3)delta
};

Exponents beukers_exponents(const mpq_class& delta, const mpq_class& delta1, int s1) {
  mpq_class half_sum = (mpq_class(5, 3) + delta + delta1) / 2;
  Exponents e;
  e.root = mpq_class(1) - half_sum;
  e.ew = mpq_class(19, 6) + mpq_class(3, 2) * delta - half_sum;
  e.e2 = mpq_class(31, 9) + s1 + mpq_class(2, 3) * delta;
  return e;
}

Interval beukers_interval(const Interval& w, int s1, const mpz_class& D, mpfr_prec_t p) {
  static const mpq_class kDelta(1, 4);
  static const mpq_class kDelta1(4377667, 100000000);
  auto e = beukers_exponents(kDelta, kDelta1, s1);
  Interval base = Interval::exact_ui(2, p).pow_q(e.e2);
  base = base.mul(Interval::exact_ui(3, p).pow_q(mpq_class(16, 3)));
  base = base.mul(Interval::exact_z(D, p));
  base = base.mul(w.pow_q(e.ew));
  Interval qstar = base.pow_q(mpq_class(1) / e.root);

  mpz_class c470;
  mpz_ui_pow_ui(c470.get_mpz_t(), 4, 70);
  Interval alt = w.pow_q(mpq_class(71)).mul(Interval::exact_z(c470, p));

  Interval out(p);
  mpfr_max(out.lo.raw(), qstar.lo.raw(), alt.lo.raw(), MPFR_RNDD);
  mpfr_max(out.hi.raw(), qstar.hi.raw(), alt.hi.raw(), MPFR_RNDU);
  return out;
}

Interval to_interval(const Real& v, mpfr_prec_t p) {
  Interval r(p);
  mpfr_set(r.lo.raw(), v.raw(), MPFR_RNDD);
  mpfr_set(r.hi.raw(), v.raw(), MPFR_RNDU);
  return r;
}

}  // namespace

BoundSet::BoundSet(int digits_)
    : digits(digits_),
      w1(hp::bits_for_digits(digits_)),
      w2(hp::bits_for_digits(digits_)),
      w(hp::bits_for_digits(digits_)),
      c(hp::bits_for_digits(digits_)),
      w3_computed(hp::bits_for_digits(digits_)),
      w3_paper_real(hp::bits_for_digits(digits_)) {
  if (digits_ < 30) throw std::invalid_argument("bound constants need >= 30 digits");
}

BoundSet constants(const mpz_class& D, int digits) {
  if (sgn(D) <= 0) throw std::invalid_argument("D must be >= 1");
  BoundSet bs(digits);
  bs.D = D;
  const mpfr_prec_t p = hp::bits_for_digits(digits);

  bs.c = c_mid(p);

  // w1 = (2^(772+210*delta) * D^241)^(1 / (35(2-3*delta) - (3*delta+1)/2))
  mpq_class e_num = 772 + 210 * bs.delta;
  mpq_class e_den = 35 * (2 - 3 * bs.delta) - (3 * bs.delta + 1) / 2;
  Real base = pow_q_mid(Real::from_ui(2, p), e_num);
  mpz_class d241;
  mpz_pow_ui(d241.get_mpz_t(), D.get_mpz_t(), 241);
  Real d241r = Real::from_z(d241, p);
  mpfr_mul(base.raw(), base.raw(), d241r.raw(), MPFR_RNDN);
  bs.w1 = pow_q_mid(base, mpq_class(1) / e_den);

  // w2 = (2^(22/9+2*delta/3) * 3^(7/3))^(1/delta1)
  Real b2 = pow_q_mid(Real::from_ui(2, p), mpq_class(22, 9) + 2 * bs.delta / 3);
  Real b3 = pow_q_mid(Real::from_ui(3, p), mpq_class(7, 3));
  mpfr_mul(b2.raw(), b2.raw(), b3.raw(), MPFR_RNDN);
  bs.w2 = pow_q_mid(b2, mpq_class(1) / bs.delta1);

  bs.w = Real(p);
  mpfr_max(bs.w.raw(), bs.w1.raw(), bs.w2.raw(), MPFR_RNDN);

  bs.w3_computed = f_map(f_map(Real::from_z(bs.Y, p)));
  bs.w3_paper_real = Real::from_q(bs.w3_paper, p);
  return bs;
}

hp::Real weak_gap_map(const Real& y) { return f_map(y); }

hp::Real weak_gap_map(const mpz_class& y, int digits) {
  if (sgn(y) <= 0) throw std::invalid_argument("y must be >= 1");
  return f_map(Real::from_z(y, hp::bits_for_digits(digits)));
}

hp::Real strong_gap_map(const Real& y) {
  mpfr_prec_t p = y.precision();
  Real c = c_mid(p);
  Real t(p);
  mpfr_rootn_ui(t.raw(), y.raw(), 8, MPFR_RNDN);
  mpfr_mul(t.raw(), t.raw(), c.raw(), MPFR_RNDN);
  mpfr_exp(t.raw(), t.raw(), MPFR_RNDN);
  return t;
}

hp::Real strong_gap_map(const mpz_class& y, int digits) {
  if (sgn(y) <= 0) throw std::invalid_argument("y must be >= 1");
  return strong_gap_map(Real::from_z(y, hp::bits_for_digits(digits)));
}

hp::Real beukers_next_bound(const Real& w, int s1, const mpz_class& D, int digits) {
  if (s1 != 0 && s1 != 2) throw std::invalid_argument("s1 must be 0 or 2");
  BoundSet bs = constants(D, digits);
  if (mpfr_cmp(w.raw(), bs.w.raw()) < 0)
    throw std::invalid_argument("hypothesis w >= W violated");
  const mpfr_prec_t p = hp::bits_for_digits(digits);
  Interval r = beukers_interval(to_interval(w, p), s1, D, p);
  Real mid(p);
  mpfr_add(mid.raw(), r.lo.raw(), r.hi.raw(), MPFR_RNDN);
  mpfr_div_ui(mid.raw(), mid.raw(), 2, MPFR_RNDN);
  return mid;
}

bool incompatibility_check(const mpz_class& D, const Real& y1, int digits) {
  BoundSet bs = constants(D, digits);
  if (mpfr_cmp(y1.raw(), bs.w.raw()) < 0)
    throw std::invalid_argument("incompatibility check needs y1 >= W");
  mpfr_prec_t p = hp::bits_for_digits(digits);
  for (int attempt = 0; attempt < 3; ++attempt, p *= 2) {
    Interval y = to_interval(y1, p);
    Interval lhs = c_interval(p).mul(y.rootn(8)).exp();
    Interval rhs = beukers_interval(y, 2, D, p);
    if (lhs.certainly_greater(rhs)) return true;
    if (lhs.certainly_less(rhs)) return false;
  }
  Interval y = to_interval(y1, p);
  return c_interval(p).mul(y.rootn(8)).exp().mid_double() > beukers_interval(y, 2, D, p).mid_double();
}

std::vector<bool> incompatibility_check(const mpz_class& D, const std::vector<Real>& y1s,
                                        int digits) {
  std::vector<bool> out;
  out.reserve(y1s.size());
  for (const auto& y1 : y1s) out.push_back(incompatibility_check(D, y1, digits));
  return out;
}

Budget budget(const std::string& case_tag) {
  Budget b;
  b.tag = case_tag;
  if (case_tag == "i") {
    for (int j = 0; j < 4; ++j) {
      for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
          int cap = (u == 0 && v == 0) ? 0 : ((j == 1 || j == 2) ? 3 : 2);
          b.per_class[{j, u, v}] = cap;
          b.section_total += cap;
        }
      }
    }
  } else if (case_tag == "ii") {
    b.per_quarter = {5, 9, 9, 5};
  } else if (case_tag == "iii") {
    b.per_quarter = {5, 3, 3, 5};
    b.small_region = 13;
  } else if (case_tag == "iv") {
    b.per_quarter = {5, 9, 9, 5};
    b.small_region = 5;
  } else {
    throw std::invalid_argument("budget case must be one of i, ii, iii, iv");
  }
  if (case_tag != "i") {
    b.section_total = b.small_region;
    for (int cap : b.per_quarter) b.section_total += cap;
  }
  return b;
}

int grand_total() {
  int middle = 0;
  for (const char* tag : {"ii", "iii", "iv"}) middle = std::max(middle, budget(tag).section_total);
  return budget("i").section_total + middle;
}

}  // namespace rnagell
