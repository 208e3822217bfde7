#include <cmath>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "zfhp/errors.hpp"
#include "zfhp/experiments.hpp"
#include "zfhp/functionals.hpp"

using namespace zfhp;

namespace {

template <class Rows>
std::string csv(const Rows& rows) {
  std::ostringstream out;
  write_csv(out, std::span(rows));
  return out.str();
}

std::string header(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST_CASE("lq convergence: single-term fixture at N = 3") {
  const auto mu = build_mobius(10);
  const auto tau = build_divisor_counts(100);
  const std::uint64_t n_list[] = {2};
  const auto res = run_lq_convergence(2.0, n_list, 3, mu, tau, RunOptions{false});
  REQUIRE(res.records.size() == 1);
  // -(I-S)h_2 - (1 - z) = [log2/2 - 1, 1/2, 1/4, -1/6]
  const double c0 = std::log(2.0) / 2 - 1.0;
  const double expected = std::sqrt(c0 * c0 + 0.25 + 1.0 / 16 + 1.0 / 36);
  CHECK(res.records[0].value == doctest::Approx(expected).epsilon(1e-15));
  CHECK(res.records[0].wall_time_ms == 0);
  CHECK(res.records[0].coeff_cutoff == 3);
  CHECK(res.records[0].tail_bound.has_value());
}

TEST_CASE("lq convergence: argument checks") {
  const auto mu = build_mobius(100);
  const auto tau = build_divisor_counts(1000);
  const std::uint64_t ok[] = {10, 100};
  const std::uint64_t unsorted[] = {100, 10};
  const std::uint64_t too_small[] = {1};
  const std::uint64_t too_big[] = {101};
  CHECK_THROWS_AS(run_lq_convergence(1.0, ok, 200, mu, tau), InvalidArgument);
  CHECK_THROWS_AS(run_lq_convergence(2.0, unsorted, 200, mu, tau), InvalidArgument);
  CHECK_THROWS_AS(run_lq_convergence(2.0, too_small, 200, mu, tau), InvalidArgument);
  CHECK_THROWS_AS(run_lq_convergence(2.0, too_big, 200, mu, tau), OutOfRange);
  CHECK_THROWS_AS(run_lq_convergence(2.0, ok, 50, mu, tau), InvalidArgument);
}

TEST_CASE("lq convergence: q = 2 agrees with the direct coefficient oracle") {
  const auto mu = build_mobius(1000);
  const auto tau = build_divisor_counts(80000);
  const std::uint64_t n_list[] = {10, 100, 1000};
  const std::size_t deg = 20000;
  const auto res = run_lq_convergence(2.0, n_list, deg, mu, tau, RunOptions{false});
  for (const auto& r : res.records) {
    const double ref = oracle::direct_l2_residual(r.n, deg, mu);
    CHECK(std::abs(r.value - ref) <= 1e-10 * ref);
  }
  CHECK(check_trend(res.records, 1.0).passed);
}

TEST_CASE("divisor bound fit and lq tail bound") {
  const auto tau = build_divisor_counts(100000);
  const auto b = fit_divisor_bound(tau);
  CHECK(b.constant == doctest::Approx(60.0 / std::pow(5040.0, 0.3)).epsilon(1e-14));
  CHECK(b.table_limit == 100000);
  CHECK_THROWS_AS(fit_divisor_bound(tau, 1.0), InvalidArgument);
  // q (1 - 0.3) <= 1: the power bound is not summable
  CHECK_FALSE(lq_tail_bound(1.4, 1000, 0.0, tau, b).has_value());

  // the bound covers the actual coefficients between N and 8N
  const auto mu = build_mobius(100);
  const std::size_t deg = 2000;
  const auto big = mobius_partial_sum_ims(100, 8 * deg, mu) - TruncatedSeries({1.0, -1.0});
  double actual = 0.0;
  for (std::size_t m = deg + 1; m <= 8 * deg; ++m) actual += big[m] * big[m];
  const auto bound = lq_tail_bound(2.0, deg, mobius_sum_over_k(mu, 100), tau, b);
  REQUIRE(bound.has_value());
  CHECK(std::sqrt(actual) <= *bound);
}

TEST_CASE("hp convergence: direct evaluation fixture at N = 8, 64 nodes") {
  const auto mu = build_mobius(10);
  const std::uint64_t n_list[] = {2};
  const auto rows = run_hp_convergence(0.5, n_list, 8, 64, mu, RunOptions{false});
  REQUIRE(rows.size() == 1);
  auto h = hk_coeffs(2, 8);
  std::vector<double> residual(h.coeffs().begin(), h.coeffs().end());
  for (auto& c : residual) c = -c;
  residual[0] -= 1.0;
  CHECK(rows[0].coarse.value == doctest::Approx(oracle::direct_hp(residual, 0.5, 64)).epsilon(1e-13));
  CHECK(rows[0].fine.value == doctest::Approx(oracle::direct_hp(residual, 0.5, 128)).epsilon(1e-13));
  CHECK_FALSE(rows[0].underresolved);
  CHECK(rows[0].coarse.norm_kind.param() == "p=0.5;nodes=64");
  CHECK(rows[0].fine.norm_kind.param() == "p=0.5;nodes=128");
  CHECK(flatten(rows).size() == 2);
  CHECK_THROWS_AS(run_hp_convergence(1.0, n_list, 8, 64, mu), InvalidArgument);
}

TEST_CASE("hp convergence: p nesting at fixed n") {
  const auto mu = build_mobius(100);
  const std::uint64_t n_list[] = {100};
  const auto a = run_hp_convergence(0.5, n_list, 4000, 1024, mu, RunOptions{false});
  const auto b = run_hp_convergence(0.9, n_list, 4000, 1024, mu, RunOptions{false});
  CHECK(b[0].coarse.value >= a[0].coarse.value - 1e-9);
}

TEST_CASE("lambda sweep") {
  const std::uint64_t k[] = {2, 5};
  const FunctionalPoint grid[] = {FunctionalPoint(2.0), FunctionalPoint(0.75, 1.0)};
  const auto rows = run_lambda_sweep(k, grid, 100000);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].k == 2);
  CHECK(rows[0].s == FunctionalPoint(2.0));
  CHECK(rows[0].residual < 1e-6);
  for (const auto& r : rows) CHECK(r.pass);
  CHECK(check_lambda(rows).passed);

  const FunctionalPoint pole[] = {FunctionalPoint(2.0), FunctionalPoint(1.0)};
  const FunctionalPoint half[] = {FunctionalPoint(0.5, 3.0)};
  const std::uint64_t one[] = {1};
  CHECK_THROWS_AS(run_lambda_sweep(k, pole, 100), PoleError);
  CHECK_THROWS_AS(run_lambda_sweep(k, half, 100), DomainError);
  CHECK_THROWS_AS(run_lambda_sweep(one, grid, 100), InvalidArgument);
}

TEST_CASE("pointwise approximation report") {
  const auto mu = build_mobius(10000);
  const FunctionalPoint grid[] = {FunctionalPoint(2.0), FunctionalPoint(1.5), FunctionalPoint(0.75)};
  const std::uint64_t n_list[] = {100, 1000, 10000};
  const auto rows = run_pointwise_approx(grid, n_list, mu);
  REQUIRE(rows.size() == 9);
  CHECK(rows[2].residual < rows[0].residual);
  CHECK(check_approx(rows).passed);
  for (const auto& r : rows) CHECK(std::isfinite(r.residual));
  const FunctionalPoint bad[] = {FunctionalPoint(0.4)};
  CHECK_THROWS_AS(run_pointwise_approx(bad, n_list, mu), DomainError);
}

TEST_CASE("Mellin rows") {
  const std::uint64_t k[] = {1, 2, 3};
  const FunctionalPoint s[] = {FunctionalPoint(2.0, 1.0)};
  const auto rows = run_mellin_verify(k, s, 1e-8);
  CHECK(check_mellin(rows).passed);
  const double alphas[] = {0.25, 0.75};
  const auto rho = run_mellin_rho(alphas, s, 1e-6);
  CHECK(check_mellin_rho(rho).passed);
}

TEST_CASE("inequality battery is reproducible") {
  const auto a = run_inequality_battery(42, 10, 32);
  const auto b = run_inequality_battery(42, 10, 32);
  CHECK(csv(a) == csv(b));
  CHECK(check_inequalities(a).passed);
  CHECK(a.size() == 10 * 7);
  const auto polys = random_polynomials(42, 5, 8);
  for (const auto& p : polys) CHECK((p.degree() >= 1 && p.degree() <= 8));
  CHECK(csv(run_inequality_battery(43, 10, 32)) != csv(a));
}

TEST_CASE("CSV column contracts") {
  const auto mu = build_mobius(10);
  const auto tau = build_divisor_counts(40);
  const std::uint64_t n_list[] = {2};
  const auto lq = run_lq_convergence(2.0, n_list, 3, mu, tau, RunOptions{false});
  CHECK(header(csv(lq.records)) == "n,norm_kind,param,coeff_cutoff,value,tail_bound,wall_time_ms");
  std::vector<LambdaSweepRow> lambda{{2, FunctionalPoint(2.0), 0.0, 0.0, true}};
  CHECK(csv(lambda) == "k,s_re,s_im,residual,tail_bound,pass\n2,2,0,0,0,true\n");
  std::vector<ClassificationResult> weights{classify(WeightFamily::power(0.25))};
  CHECK(csv(weights) == "family,params,c4_r,rm_bounded,strip\npower,alpha=0.25,0.75,false,Right\n");
  std::vector<ClassificationResult> none{classify(WeightFamily::geometric(0.5))};
  CHECK(csv(none) == "family,params,c4_r,rm_bounded,strip\ngeometric,epsilon=0.5,,true,Left\n");
}

TEST_CASE("checks") {
  const NormSpec spec = NormSpec::lq(2.0);
  std::vector<ConvergenceRecord> down{{10, spec, 100, 1.0, {}, 0}, {100, spec, 100, 0.4, {}, 0}};
  std::vector<ConvergenceRecord> up{{10, spec, 100, 1.0, {}, 0}, {100, spec, 100, 1.0, {}, 0}};
  CHECK(check_trend(down, 1.0).passed);
  CHECK_FALSE(check_trend(down, 0.3).passed);
  CHECK_FALSE(check_trend(up, 1.0).passed);
  std::vector<ClassificationResult> wrong{classify(WeightFamily::identity())};
  wrong[0].strip = Strip::Left;
  CHECK_FALSE(check_table1(wrong).passed);
}

TEST_CASE("manifests: parsing") {
  const auto one = parse_manifests(R"({"id": "a", "kind": "mellin_verify", "params": {"k": [1, 2, 3]},
                                       "s_grid": ["2+1i", "3"], "seed": 7, "thresholds": {"mellin_tol": 1e-9}})");
  REQUIRE(one.size() == 1);
  CHECK(one[0].params.at("k") == "1,2,3");
  CHECK(one[0].s_grid == "2+1i,3");
  CHECK(one[0].seed == 7);
  CHECK(one[0].thresholds.mellin_tol == 1e-9);
  CHECK_FALSE(one[0].timing);
  const auto many = parse_manifests(R"({"experiments": [{"id": "t", "kind": "weights_table1"},
                                       {"id": "c", "kind": "weights_classify", "params": {"family": ["powerlog:1,2", "identity"]}}]})");
  REQUIRE(many.size() == 2);
  CHECK(many[1].params.at("family") == "powerlog:1,2;identity");
  for (const char* bad : {"{", "[]", R"({"kind": "weights_table1"})", R"({"id": "x", "kind": "nope"})",
                          R"({"id": "x", "kind": "weights_table1", "extra": 1})",
                          R"({"id": "x", "kind": "lq_convergence", "params": {"q": 2}})",
                          R"({"id": "x", "kind": "lambda_sweep", "params": {"k": "2"}})",
                          R"({"id": "x", "kind": "weights_table1", "thresholds": {"speed": 1}})",
                          R"({"id": "../x", "kind": "weights_table1"})",
                          R"({"experiments": [{"id": "x", "kind": "weights_table1"}, {"id": "x", "kind": "weights_table1"}]})"}) {
    CHECK_THROWS_AS(parse_manifests(bad), InvalidArgument);
  }
}

TEST_CASE("manifests: runs are deterministic") {
  const auto manifests = parse_manifests(R"({"experiments": [
      {"id": "lq", "kind": "lq_convergence", "params": {"q": 1.5, "n": "10,100", "coeff_cutoff": 5000}},
      {"id": "hp", "kind": "hp_convergence", "params": {"p": 0.5, "n": "10,100", "coeff_cutoff": 2000, "nodes": 512}},
      {"id": "ineq", "kind": "inequalities", "seed": 3, "params": {"count": 5, "max_degree": 16}},
      {"id": "table", "kind": "weights_table1"}]})");
  for (const auto& m : manifests) {
    const auto first = run_experiment(m);
    const auto second = run_experiment(m);
    CHECK(first.csv == second.csv);
    CHECK(manifest_to_json(m, first.notes) == manifest_to_json(m, second.notes));
    CHECK_FALSE(first.checks.empty());
  }
  const auto lq = run_experiment(manifests[0]);
  CHECK(lq.csv.find(",0\n") != std::string::npos);  // wall_time_ms written as 0
  CHECK(lq.notes.size() == 1);
  CHECK(manifest_to_json(manifests[0]).find("\"code_version\": \"" + code_version() + "\"") != std::string::npos);
}
