#include <cmath>

#include "doctest.h"
#include "zfhp/errors.hpp"
#include "zfhp/functionals.hpp"

using namespace zfhp;
using cplx = std::complex<double>;

TEST_CASE("lambda basis") {
  const FunctionalPoint s(1.5, 2.0);
  const auto basis = lambda_basis(s, 10);
  REQUIRE(basis.size() == 11);
  CHECK(basis[0] == -1.0 / s.value());
  for (std::uint64_t n = 1; n <= 10; ++n) CHECK(basis[n] == f_k(n, s));
}

TEST_CASE("lambda on monomials is exact") {
  const FunctionalPoint s(0.75, 1.0);
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto e = lambda_apply(TruncatedSeries::monomial(n), s, 0.0);
    CHECK(e.tail_bound == 0.0);
    CHECK(e.degree_used == n);
    CHECK(std::abs(e.value - (n == 0 ? -1.0 / s.value() : f_k(n, s))) < 1e-15);
  }
}

TEST_CASE("lambda tail bound") {
  const FunctionalPoint s(2.0, 0.0);
  CHECK(lambda_tail_bound(s, 100, 0.0) == 0.0);
  CHECK(lambda_tail_bound(s, 100, 1.0) == doctest::Approx(0.5 * std::pow(100.0, -2.0) / 2.0));
  CHECK(lambda_tail_bound(s, 0, 1.0) == doctest::Approx(0.5 * 1.5));
  CHECK_THROWS_AS(lambda_tail_bound(s, 10, -1.0), InvalidArgument);
  CHECK_THROWS_AS(lambda_tail_bound(FunctionalPoint(0.0), 10, 1.0), DomainError);
}

TEST_CASE("fitted coefficient bound") {
  const TruncatedSeries f({5.0, 1.0, 0.5, 1.0 / 3, 0.25});
  CHECK(fitted_coefficient_bound(f) == doctest::Approx(1.0));
}

TEST_CASE("lambda(h_k) = G_k within the tail bound") {
  const std::size_t n = 20000;
  for (const FunctionalPoint s : {FunctionalPoint(2.0), FunctionalPoint(1.5, 5.0), FunctionalPoint(0.75, 1.0)}) {
    const auto basis = lambda_basis(s, n);
    for (std::uint64_t k : {2u, 3u, 7u}) {
      const auto e = lambda_apply(hk_coeffs(k, n), s, std::span<const cplx>(basis));
      REQUIRE(std::abs(e.value - g_k(k, s)) <= e.tail_bound + 1e-8);
    }
  }
}

TEST_CASE("lambda: basis must cover the degree") {
  const auto basis = lambda_basis(FunctionalPoint(2.0), 3);
  CHECK_THROWS_AS(lambda_apply(TruncatedSeries::zeros(5), FunctionalPoint(2.0), std::span<const cplx>(basis)),
                  InvalidArgument);
}

TEST_CASE("lambda: linearity and conjugate symmetry") {
  const ComplexSeries f({cplx(1, 2), cplx(-0.5, 0), cplx(0.25, 0.3), cplx(0, 1)});
  const ComplexSeries g({cplx(0, -1), cplx(2, 2)});
  const FunctionalPoint s(0.9, 3.0);
  CHECK(lambda_linearity_check(f, g, cplx(2, -1), cplx(-0.5, 4), s) < 1e-13);
  const TruncatedSeries real({1.0, -2.0, 0.5});
  const auto a = lambda_apply(real, s, 0.0).value;
  const auto b = lambda_apply(real, s.conj(), 0.0).value;
  CHECK(std::abs(a - std::conj(b)) < 1e-15);
}

TEST_CASE("pointwise approximation of -1/s") {
  const auto mu = build_mobius(10000);
  const FunctionalPoint s(2.0);
  const double r2 = std::abs(approx_reciprocal_s(100, s, mu) + 0.5);
  const double r4 = std::abs(approx_reciprocal_s(10000, s, mu) + 0.5);
  CHECK(r4 < r2);
  // sum mu(k) G_k(s) = -(zeta(s)/s) sum_{k=2}^n mu(k)(k^-s - 1/k)
  const cplx direct = -(zeta(s).value / s.value()) * (-(0.25 - 0.5) * 1.0 - (1.0 / 9 - 1.0 / 3));
  CHECK(std::abs(approx_reciprocal_s(3, s, mu) - direct) < 1e-15);
  CHECK_THROWS_AS(approx_reciprocal_s(1, s, mu), InvalidArgument);
  CHECK_THROWS_AS(approx_reciprocal_s(10001, s, mu), OutOfRange);
  CHECK_THROWS_AS(approx_reciprocal_s(10, FunctionalPoint(1.0), mu), PoleError);
}
