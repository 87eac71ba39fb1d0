#include <doctest.h>

#include <chrono>
#include <random>

#include "oracles.hpp"
#include "rnagell/solver.hpp"

using namespace rnagell;

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance(0, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(Instance(1, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(Instance(1, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(Instance(1, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(Instance(1, 3, 9), std::invalid_argument);
  CHECK_THROWS_AS(Instance(6, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(Instance(10, 3, 5), std::invalid_argument);
  CHECK_NOTHROW(Instance(11, 3, 5));
}

TEST_CASE("enumerate_smooth example") {
  Instance inst(11, 3, 5);
  auto sv = enumerate_smooth(inst, 20);
  std::vector<mpz_class> ys;
  for (const auto& v : sv) ys.push_back(v.y);
  CHECK(ys == std::vector<mpz_class>{1, 3, 4, 5, 9, 12, 15, 20});
  CHECK_THROWS_AS(enumerate_smooth(inst, 0), std::invalid_argument);

  auto tiny = enumerate_smooth(inst, 1);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0].y == 1);
  CHECK(tiny[0].s == 0);
  CHECK(tiny[0].k == 0);
  CHECK(tiny[0].l == 0);
}

TEST_CASE("enumerate_smooth values are exactly the smooth numbers") {
  Instance inst(1, 3, 7);
  auto sv = enumerate_smooth(inst, 100000);
  // strictly ascending, so no duplicates
  for (size_t i = 1; i < sv.size(); ++i) CHECK(sv[i - 1].y < sv[i].y);
  for (const auto& v : sv) {
    mpz_class rest = v.y;
    int s = 0;
    while (mpz_even_p(rest.get_mpz_t())) {
      rest >>= 1;
      ++s;
    }
    CHECK(s == v.s);
    while (rest % 3 == 0) rest /= 3;
    while (rest % 7 == 0) rest /= 7;
    CHECK(rest == 1);
  }
  // every smooth value below the bound is present
  size_t count = 0;
  for (unsigned long y = 1; y <= 100000; ++y) {
    unsigned long rest = y;
    int s = 0;
    while (rest % 2 == 0) {
      rest /= 2;
      ++s;
    }
    while (rest % 3 == 0) rest /= 3;
    while (rest % 7 == 0) rest /= 7;
    if (rest == 1 && (s == 0 || s == 2)) ++count;
  }
  CHECK(count == sv.size());
}

TEST_CASE("solve matches hand-checked data") {
  Instance inst(11, 3, 5);
  auto sols = solve(inst, 1000);
  std::vector<mpz_class> xs;
  for (const auto& s : sols) xs.push_back(s.x);
  CHECK(xs == std::vector<mpz_class>{1, 2, 3, 4, 5, 7, 8, 13, 17, 23, 31});
  // 31^2 + 11 = 972 = 4 * 3^5
  CHECK(sols.back().y == 972);
  CHECK(sols.back().s == 2);
  CHECK(sols.back().k == 5);
  CHECK(sols.back().l == 0);

  auto more = solve(inst, 10000);
  CHECK(more.size() == 13);
  CHECK(more[11].x == 58);   // 3375 = 3^3 5^3
  CHECK(more[12].x == 67);   // 4500 = 4 * 3^2 5^3
}

TEST_CASE("solve with D itself smooth includes x = 0") {
  Instance inst(1, 3, 5);
  auto sols = solve(inst, 1000000);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].x == 0);
  CHECK(sols[0].y == 1);
  CHECK(sols[1].x == 2);
  CHECK(sols[1].y == 5);
}

TEST_CASE("three-solution families restricted to l = 0, s = 2") {
  Instance a(11, 3, 5);
  std::vector<mpz_class> xs;
  for (const auto& s : solve(a, 1000000))
    if (s.l == 0 && s.s == 2) xs.push_back(s.x);
  CHECK(xs == std::vector<mpz_class>{1, 5, 31});

  Instance b(19, 5, 7);
  xs.clear();
  for (const auto& s : solve(b, 400000))
    if (s.l == 0 && s.s == 2) xs.push_back(s.x);
  CHECK(xs == std::vector<mpz_class>{1, 9, 559});
  // 559^2 + 19 = 312500 = 4 * 5^7
}

TEST_CASE("smallest_solution") {
  auto s = smallest_solution(Instance(11, 3, 5), 1000000);
  REQUIRE(s.has_value());
  CHECK(s->x == 1);
  CHECK(s->s == 2);
  CHECK(s->k == 1);
  CHECK(s->l == 0);
  CHECK(s->y == 12);

  s = smallest_solution(Instance(1, 3, 5), 100);
  REQUIRE(s.has_value());
  CHECK(s->x == 0);
  CHECK(s->y == 1);

  s = smallest_solution(Instance(2, 3, 11), 100);
  REQUIRE(s.has_value());
  CHECK(s->x == 1);
  CHECK(s->y == 3);

  CHECK(!smallest_solution(Instance(7, 11, 13), 10).has_value());
}

TEST_CASE("solve equals the brute-force oracle on random small instances") {
  std::mt19937_64 rng(987654321);
  std::vector<unsigned long> primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  int done = 0;
  while (done < 60) {
    unsigned long D = 1 + rng() % 50;
    unsigned long i = rng() % primes.size();
    unsigned long j = rng() % primes.size();
    if (i == j) continue;
    unsigned long p1 = std::min(primes[i], primes[j]);
    unsigned long p2 = std::max(primes[i], primes[j]);
    if (D % p1 == 0 || D % p2 == 0) continue;
    Instance inst(D, p1, p2);
    auto got = solve(inst, 1000000);
    auto want = oracle::brute_solve(D, p1, p2, 1000000);
    CHECK(oracle::equal_solutions(got, want));
    ++done;
  }
}

TEST_CASE("returned solutions satisfy their invariant and parity-class bound") {
  for (auto [D, p1, p2] : {std::tuple{11, 3, 5}, {19, 5, 7}, {2, 3, 11}, {43, 3, 7}}) {
    Instance inst(D, p1, p2);
    for (const auto& sol : solve(inst, 200000)) {
      CHECK(sol.verify(inst));
      if (sol.s % 2 == 0 && sol.k % 2 == 0 && sol.l % 2 == 0) {
        // y a perfect square forces D = (z-x)(z+x), so y <= ((D+1)/2)^2
        mpz_class cap = (inst.D + 1) / 2;
        CHECK(sol.y <= cap * cap);
      }
    }
  }
}

TEST_CASE("candidate enumeration up to 1e13 is fast") {
  Instance inst(11, 3, 5);
  auto start = std::chrono::steady_clock::now();
  auto sv = enumerate_smooth(inst, mpz_class("10000000000000"));
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(sv.size() > 500);
  CHECK(elapsed < 1.0);
}
