#include "rnagell/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "rnagell/core_arith.hpp"

namespace rnagell {

Instance::Instance(mpz_class D_, mpz_class p1_, mpz_class p2_)
    : D(std::move(D_)), p1(std::move(p1_)), p2(std::move(p2_)) {
  if (sgn(D) <= 0) throw std::invalid_argument("D must be >= 1");
  if (!is_odd_prime(p1)) throw std::invalid_argument("p1 must be an odd prime");
  if (!is_odd_prime(p2)) throw std::invalid_argument("p2 must be an odd prime");
  if (p1 >= p2) throw std::invalid_argument("p1 < p2 required");
  if (mpz_divisible_p(D.get_mpz_t(), p1.get_mpz_t()) ||
      mpz_divisible_p(D.get_mpz_t(), p2.get_mpz_t()))
    throw std::invalid_argument("p1, p2 must not divide D");
}

bool Solution::verify(const Instance& inst) const {
  if (s != 0 && s != 2) return false;
  if (sgn(x) < 0) return false;
  if (y != x * x + inst.D) return false;
  mpz_class v = pow_ui(inst.p1, k) * pow_ui(inst.p2, l);
  v <<= s;
  return v == y;
}

std::vector<SmoothValue> enumerate_smooth(const Instance& inst, const mpz_class& bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  std::vector<SmoothValue> out;
  for (int s : {0, 2}) {
    mpz_class base = mpz_class(1) << s;
    mpz_class vk = base;
    for (unsigned long k = 0; vk <= bound; ++k) {
      mpz_class v = vk;
      for (unsigned long l = 0; v <= bound; ++l) {
        out.push_back({v, s, k, l});
        v *= inst.p2;
      }
      vk *= inst.p1;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SmoothValue& a, const SmoothValue& b) { return a.y < b.y; });
  return out;
}

std::vector<Solution> solve(const Instance& inst, const mpz_class& bound) {
  std::vector<Solution> out;
  if (bound < inst.D) return out;
  for (const auto& sv : enumerate_smooth(inst, bound)) {
    if (sv.y < inst.D) continue;
    if (auto x = as_square(sv.y - inst.D)) {
      Solution sol{*x, sv.s, sv.k, sv.l, sv.y};
      if (!sol.verify(inst)) throw std::logic_error("solution failed recheck");
      out.push_back(std::move(sol));
    }
  }
  return out;
}

std::optional<Solution> smallest_solution(const Instance& inst, const mpz_class& bound) {
  if (bound < inst.D) return std::nullopt;
  for (const auto& sv : enumerate_smooth(inst, bound)) {
    if (sv.y < inst.D) continue;
    if (auto x = as_square(sv.y - inst.D)) {
      Solution sol{*x, sv.s, sv.k, sv.l, sv.y};
      if (!sol.verify(inst)) throw std::logic_error("solution failed recheck");
      return sol;
    }
  }
  return std::nullopt;
}

}  // namespace rnagell
