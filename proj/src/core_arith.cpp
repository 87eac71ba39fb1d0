#include "rnagell/core_arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace rnagell {

namespace {

// x^2 ≡ a (mod p) for odd prime p and a coprime to p; nullopt for non-residues.
// Deterministic: the non-residue search starts from 2 and takes the smallest.
std::optional<mpz_class> tonelli_shanks(const mpz_class& a, const mpz_class& p) {
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;

  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q >>= 1;
    ++s;
  }

  mpz_class r;
  if (s == 1) {  // p ≡ 3 (mod 4)
    mpz_class e = (p + 1) / 4;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  }

  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

  mpz_class c, t, b;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_class e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());

  unsigned long m = s;
  while (t != 1) {
    mpz_class tt = t;
    unsigned long i = 0;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

// Lift u with u^2 ≡ a (mod p^j) to p^e; a coprime to p.
mpz_class hensel_lift(mpz_class u, const mpz_class& a, const mpz_class& p, unsigned e) {
  mpz_class pj = p;
  for (unsigned j = 1; j < e; ++j) {
    mpz_class pj1 = pj * p;
    mpz_class f = (a - u * u) % pj1;
    if (f < 0) f += pj1;
    mpz_class num = f / pj;
    mpz_class inv;
    mpz_class two_u = 2 * u % p;
    if (mpz_invert(inv.get_mpz_t(), two_u.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::logic_error("hensel lift: 2u not invertible");
    mpz_class t = num * inv % p;
    u += t * pj;
    u %= pj1;
    pj = pj1;
  }
  return u;
}

unsigned long valuation(mpz_class& n, const mpz_class& p) {
  unsigned long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

Modulus::Modulus(mpz_class prime, unsigned exponent) : p(std::move(prime)), e(exponent) {
  if (e < 1) throw std::invalid_argument("modulus exponent must be >= 1");
  if (!is_odd_prime(p)) throw std::invalid_argument("modulus base must be an odd prime");
}

mpz_class Modulus::value() const { return pow_ui(p, e); }

mpz_class isqrt(const mpz_class& n) {
  if (sgn(n) < 0) throw std::invalid_argument("isqrt of a negative number");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<mpz_class> as_square(const mpz_class& n) {
  if (sgn(n) < 0) throw std::invalid_argument("as_square of a negative number");
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  return isqrt(n);
}

std::vector<mpz_class> sqrt_mod_prime_power(const mpz_class& a, const Modulus& m) {
  const mpz_class modulus = m.value();
  mpz_class a0;
  mpz_mod(a0.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());

  std::vector<mpz_class> roots;
  if (a0 == 0) {
    // X^2 ≡ 0 (mod p^e) iff p^ceil(e/2) | X
    mpz_class step = pow_ui(m.p, (m.e + 1) / 2);
    for (mpz_class x = 0; x < modulus; x += step) roots.push_back(x);
    return roots;
  }

  mpz_class ar = a0;
  unsigned long t = valuation(ar, m.p);
  if (t % 2 != 0) return {};
  unsigned er = m.e - static_cast<unsigned>(t);

  auto u0 = tonelli_shanks(ar % m.p, m.p);
  if (!u0) return {};
  mpz_class u = hensel_lift(*u0, ar, m.p, er);

  mpz_class stride = pow_ui(m.p, er);
  mpz_class scale = pow_ui(m.p, t / 2);
  mpz_class lim = pow_ui(m.p, m.e - t / 2);
  const mpz_class bases[2] = {u, mpz_class(stride - u)};
  for (const mpz_class& base : bases) {
    for (mpz_class v = base; v < lim; v += stride) roots.push_back(scale * v);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<mpz_class> roots_of_x2_plus_D(const mpz_class& D, const Modulus& m1, const Modulus& m2) {
  if (m1.p == m2.p) throw std::invalid_argument("moduli must use distinct primes");
  if (mpz_divisible_p(D.get_mpz_t(), m1.p.get_mpz_t()) ||
      mpz_divisible_p(D.get_mpz_t(), m2.p.get_mpz_t()))
    throw std::invalid_argument("prime divides D");

  const mpz_class M1 = m1.value(), M2 = m2.value();
  auto r1 = sqrt_mod_prime_power(-D, m1);
  if (r1.empty()) return {};
  auto r2 = sqrt_mod_prime_power(-D, m2);
  if (r2.empty()) return {};

  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), M1.get_mpz_t(), M2.get_mpz_t());
  std::vector<mpz_class> roots;
  roots.reserve(r1.size() * r2.size());
  for (const auto& x1 : r1) {
    for (const auto& x2 : r2) {
      mpz_class k = (x2 - x1) * inv % M2;
      if (k < 0) k += M2;
      roots.push_back(x1 + M1 * k);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

SquarefreeDecomposition squarefree_part(const mpz_class& D) {
  if (sgn(D) <= 0) throw std::invalid_argument("squarefree_part requires D >= 1");
  SquarefreeDecomposition out{1, 1};
  for (const auto& [p, e] : trial_factor(D)) {
    if (e % 2 != 0) out.d *= p;
    out.b *= pow_ui(p, e / 2);
  }
  return out;
}

bool is_odd_prime(const mpz_class& p) {
  return p >= 3 && mpz_odd_p(p.get_mpz_t()) && mpz_probab_prime_p(p.get_mpz_t(), 32) != 0;
}

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::vector<std::pair<mpz_class, unsigned>> trial_factor(const mpz_class& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("trial_factor requires n >= 1");
  std::vector<std::pair<mpz_class, unsigned>> out;
  mpz_class rest = n;
  auto strip = [&](const mpz_class& p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  for (mpz_class d = 3; d * d <= rest; d += 2) strip(d);
  if (rest > 1) out.emplace_back(rest, 1);
  return out;
}

}  // namespace rnagell
