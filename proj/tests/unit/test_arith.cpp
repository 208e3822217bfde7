#include "doctest.h"
#include "oracles.hpp"
#include "zfhp/arith.hpp"
#include "zfhp/errors.hpp"

using namespace zfhp;

TEST_CASE("mobius: small values") {
  const auto mu = build_mobius(30);
  const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0, -1, 0, -1, 0};
  for (int n = 1; n <= 20; ++n) CHECK(mu.at(n) == expected[n - 1]);
  CHECK(mu.at(30) == -1);
  CHECK(mu.limit() == 30);
  CHECK(mu.values()[0] == 0);
}

TEST_CASE("mobius: sieve matches trial division") {
  const auto mu = build_mobius(20000);
  for (std::uint64_t n = 1; n <= 20000; ++n) REQUIRE(mu[n] == oracle::trial_division_mobius(n));
}

TEST_CASE("mobius: bounds checks") {
  const auto mu = build_mobius(10);
  CHECK_THROWS_AS(static_cast<void>(mu.at(0)), OutOfRange);
  CHECK_THROWS_AS(static_cast<void>(mu.at(11)), OutOfRange);
  const auto one = build_mobius(1);
  CHECK(one.at(1) == 1);
}

TEST_CASE("divisor counts match the double loop") {
  const auto tau = build_divisor_counts(5000);
  const auto ref = oracle::double_loop_tau(5000);
  for (std::uint64_t n = 1; n <= 5000; ++n) REQUIRE(tau[n] == ref[n]);
  CHECK(tau.at(2520) == 48);
  CHECK_THROWS_AS(static_cast<void>(tau.at(5001)), OutOfRange);
}

TEST_CASE("mobius sums: exact small cutoffs and argument checks") {
  const auto mu = build_mobius(100);
  CHECK(mobius_sum_over_k(mu, 1) == 1.0);
  CHECK(mobius_sum_over_k(mu, 3) == doctest::Approx(1.0 - 0.5 - 1.0 / 3).epsilon(1e-15));
  CHECK(mobius_logsum_over_k(mu, 1) == 0.0);
  CHECK(mobius_logsum_over_k(mu, 2) == doctest::Approx(-std::log(2.0) / 2).epsilon(1e-15));
  CHECK_THROWS_AS(mobius_sum_over_k(mu, 0), InvalidArgument);
  CHECK_THROWS_AS(mobius_sum_over_k(mu, 101), OutOfRange);
  CHECK_THROWS_AS(mobius_logsum_over_k(mu, 0), InvalidArgument);
}

TEST_CASE("bounded divisor sum") {
  const auto mu = build_mobius(600);
  const auto tau = build_divisor_counts(600);
  CHECK(bounded_divisor_sum(1, 1, mu) == 1);
  CHECK(bounded_divisor_sum(12, 12, mu) == 0);
  CHECK(bounded_divisor_sum(12, 3, mu) == -1);
  for (std::uint64_t j = 1; j <= 600; ++j) {
    for (std::uint64_t n : {1u, 2u, 7u, 30u, 600u}) {
      std::int64_t ref = 0;
      for (std::uint64_t d = 1; d <= std::min(j, n); ++d) {
        if (j % d == 0) ref += mu[d];
      }
      const auto got = bounded_divisor_sum(j, n, mu);
      REQUIRE(got == ref);
      REQUIRE(std::abs(got) <= static_cast<std::int64_t>(tau[j]));
    }
    // full divisor sum is [j == 1]
    REQUIRE(bounded_divisor_sum(j, j, mu) == (j == 1 ? 1 : 0));
  }
}
