// Acceptance suite: one PASS/FAIL line per criterion. With an argument N
// only criterion N runs. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zfhp/arith.hpp"
#include "zfhp/experiments.hpp"
#include "zfhp/functionals.hpp"
#include "zfhp/norms.hpp"
#include "zfhp/special.hpp"
#include "zfhp/weights.hpp"

namespace {

using namespace zfhp;
using cplx = std::complex<double>;

// tolerances and limits
constexpr std::uint64_t kSieveMobiusLimit = 100000;
constexpr std::uint64_t kSieveTauLimit = 10000;
constexpr double kSieveSeconds = 5.0;
constexpr double kTrendSeconds = 10.0;
constexpr std::size_t kDegree = 100000;
constexpr double kLambdaSlack = 1e-8;
constexpr double kZeta2Over8 = 0.2056167584;
constexpr double kZeta2Over8Digits = 1e-10;
constexpr double kLambdaSeconds = 60.0;
constexpr double kMellinTol = 1e-8;
constexpr double kRhoTol = 1e-6;
constexpr double kMellinSeconds = 30.0;
constexpr std::uint64_t kFkMax = 10000;
constexpr double kFkSeconds = 10.0;
constexpr double kL2OracleRel = 1e-10;
constexpr double kLqSeconds = 120.0;
constexpr std::size_t kHpNodes = 8192;
constexpr double kHpRefinementRel = 1e-4;
constexpr double kHpSeconds = 300.0;
constexpr double kTableSeconds = 30.0;
constexpr double kGeometricTol = 1e-10;
constexpr std::uint64_t kRmMax = 1000;
constexpr double kPowerRmFloor = 100.0;
constexpr double kRmSeconds = 10.0;
constexpr std::uint64_t kInequalitySeed = 20240601;
constexpr std::size_t kInequalityCount = 100;
constexpr std::size_t kInequalityDegree = 64;
constexpr double kInequalityRel = 1e-9;
constexpr double kQuotientRefinementRel = 1e-4;
constexpr double kInequalitySeconds = 60.0;
constexpr double kProbeFlatTol = 1e-12;
constexpr std::uint64_t kProbeCount = 100000;
constexpr double kProbeSeconds = 5.0;

const std::vector<FunctionalPoint>& s_grid() {
  static const std::vector<FunctionalPoint> grid = [] {
    std::vector<FunctionalPoint> g;
    for (const double re : {0.6, 0.75, 1.5, 2.0}) {
      for (const double im : {0.0, 1.0, 5.0}) g.emplace_back(re, im);
    }
    return g;
  }();
  return grid;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail_if(bool bad, const std::string& why) {
    if (bad) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + why;
    }
  }
  void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome sieve_exactness() {
  Outcome o;
  const auto mu = build_mobius(kSieveMobiusLimit);
  std::uint64_t bad_mu = 0;
  for (std::uint64_t n = 1; n <= kSieveMobiusLimit; ++n) bad_mu += mu[n] != oracle::trial_division_mobius(n);
  const auto tau = build_divisor_counts(kSieveTauLimit);
  const auto ref = oracle::double_loop_tau(kSieveTauLimit);
  std::uint64_t bad_tau = 0;
  for (std::uint64_t n = 1; n <= kSieveTauLimit; ++n) bad_tau += tau[n] != ref[n];
  o.fail_if(bad_mu != 0, std::to_string(bad_mu) + " mu mismatches");
  o.fail_if(bad_tau != 0, std::to_string(bad_tau) + " tau mismatches");
  o.note("mu to 1e5, tau to 1e4");
  return o;
}

Outcome mobius_trends() {
  Outcome o;
  const auto mu = build_mobius(1000000);
  const double s4 = std::abs(mobius_sum_over_k(mu, 10000));
  const double s6 = std::abs(mobius_sum_over_k(mu, 1000000));
  const double l4 = std::abs(mobius_logsum_over_k(mu, 10000) + 1.0);
  const double l6 = std::abs(mobius_logsum_over_k(mu, 1000000) + 1.0);
  o.fail_if(!(s6 < s4), "|sum mu/k| did not shrink");
  o.fail_if(!(l6 < l4), "|sum mu log k/k + 1| did not shrink");
  o.note("|sum mu/k|: " + fmt(s4) + " -> " + fmt(s6) + ", |log sum + 1|: " + fmt(l4) + " -> " + fmt(l6));
  return o;
}

Outcome lambda_identity() {
  Outcome o;
  std::vector<std::uint64_t> k;
  for (std::uint64_t i = 2; i <= 10; ++i) k.push_back(i);
  const auto rows = run_lambda_sweep(k, s_grid(), kDegree, kLambdaSlack);
  const auto check = check_lambda(rows);
  o.fail_if(!check.passed, check.detail);
  // (k=2, s=2) against the Euler-Maclaurin zeta
  const cplx ref = oracle::zeta_euler_maclaurin(cplx(2.0, 0.0)) / 8.0;
  o.fail_if(std::abs(ref.real() - kZeta2Over8) > kZeta2Over8Digits, "reference zeta(2)/8 off");
  const FunctionalPoint two(2.0);
  const auto e = lambda_apply(hk_coeffs(2, kDegree), two);
  const double res = std::abs(e.value - ref);
  o.fail_if(res > e.tail_bound + kLambdaSlack, "(k=2, s=2) residual " + fmt(res));
  o.note(check.detail + "; (2,2) residual " + fmt(res));
  return o;
}

Outcome mellin() {
  Outcome o;
  std::vector<std::uint64_t> k;
  for (std::uint64_t i = 1; i <= 10; ++i) k.push_back(i);
  std::vector<FunctionalPoint> grid = s_grid();
  grid.emplace_back(2.0, 1.0);
  const auto rows = run_mellin_verify(k, grid, kMellinTol);
  const auto c1 = check_mellin(rows);
  o.fail_if(!c1.passed, c1.detail);
  const std::vector<double> alphas{0.25, 0.5, 0.75};
  const std::vector<FunctionalPoint> rho_grid{FunctionalPoint(2.0), FunctionalPoint(3.0), FunctionalPoint(2.0, 1.0)};
  const auto rho = run_mellin_rho(alphas, rho_grid, kRhoTol);
  const auto c2 = check_mellin_rho(rho);
  o.fail_if(!c2.passed, c2.detail);
  o.note("p_k: " + c1.detail + "; rho: " + c2.detail);
  return o;
}

Outcome fk_asymptotics() {
  Outcome o;
  double lo = INFINITY;
  double hi = 0.0;
  for (const auto s : s_grid()) {
    const auto b = fk_growth_bracket(s, kFkMax);
    o.fail_if(!(b.c1 > 0.0), "c1 = 0 at s = " + to_string(s));
    o.fail_if(b.bound_violations != 0, std::to_string(b.bound_violations) + " bound violations at s = " + to_string(s));
    lo = std::min(lo, b.c1);
    hi = std::max(hi, b.c2);
  }
  o.note("c1 >= " + fmt(lo) + ", c2 <= " + fmt(hi));
  return o;
}

Outcome lq_convergence() {
  Outcome o;
  const std::vector<std::uint64_t> n_list{10, 100, 1000};
  const auto mu = build_mobius(1000);
  const auto tau = build_divisor_counts(4 * kDegree);
  for (const double q : {1.5, 2.0}) {
    const auto res = run_lq_convergence(q, n_list, kDegree, mu, tau, RunOptions{false});
    const auto trend = check_trend(res.records, 1.0);
    o.fail_if(!trend.passed, "q=" + fmt(q) + " not decreasing");
    std::string values;
    for (const auto& r : res.records) values += (values.empty() ? "" : ",") + fmt(r.value);
    o.note("q=" + fmt(q) + ": " + values);
    if (q == 2.0) {
      double worst = 0.0;
      for (const auto& r : res.records) {
        const double ref = oracle::direct_l2_residual(r.n, kDegree, mu);
        worst = std::max(worst, std::abs(r.value - ref) / ref);
      }
      o.fail_if(worst > kL2OracleRel, "l2 oracle disagreement " + fmt(worst));
      o.note("l2 oracle rel " + fmt(worst));
    }
  }
  return o;
}

Outcome hp_convergence() {
  Outcome o;
  const std::vector<std::uint64_t> n_list{10, 100, 1000};
  const auto mu = build_mobius(1000);
  const auto rows = run_hp_convergence(0.5, n_list, kDegree, kHpNodes, mu, RunOptions{false});
  std::vector<ConvergenceRecord> coarse;
  for (const auto& r : rows) coarse.push_back(r.coarse);
  const auto trend = check_trend(coarse, 1.0);
  const auto refine = check_refinement(rows, kHpRefinementRel);
  o.fail_if(!trend.passed, "not decreasing");
  o.fail_if(!refine.passed, "refinement above " + fmt(kHpRefinementRel) + ": " + refine.detail);
  std::string values;
  for (const auto& r : coarse) values += (values.empty() ? "" : ",") + fmt(r.value);
  o.note("values " + values);
  if (refine.passed) o.note(refine.detail);
  return o;
}

Outcome table1() {
  Outcome o;
  const Strip expected[] = {Strip::Right, Strip::Right, Strip::Right, Strip::None,
                            Strip::None,  Strip::Left,  Strip::Left};
  const auto rows = table1_families();
  o.fail_if(rows.size() != 7, "expected seven representative rows");
  for (std::size_t i = 0; i < rows.size() && i < 7; ++i) {
    const auto c = classify(rows[i]);
    o.fail_if(c.strip != expected[i], rows[i].spec() + " -> " + to_string(c.strip));
  }
  // the sample grid; exp(n^a) only admits a < 1 or a > 1 in its row
  std::vector<WeightFamily> samples{WeightFamily::identity()};
  for (const double a : {0.25, 1.0, 2.0}) {
    samples.push_back(WeightFamily::power(a));
    for (const double b : {1.0, 2.0}) samples.push_back(WeightFamily::power_log(a, b));
    samples.push_back(WeightFamily::quasi_exp(a));
    if (a < 1.0) samples.push_back(WeightFamily::stretched_exp(a));
    if (a > 1.0) samples.push_back(WeightFamily::super_exp(a));
  }
  for (const double eps : {0.25, 0.5, 0.9}) samples.push_back(WeightFamily::geometric(eps));
  std::vector<ClassificationResult> classified;
  for (const auto& f : samples) classified.push_back(classify(f));
  const auto check = check_table1(classified);
  o.fail_if(!check.passed, check.detail);
  // numeric falsification: r_m growth has to agree with the analytic verdict
  std::size_t disagreements = 0;
  for (const auto& c : classified) {
    const auto r = rm_sequence(c.family, kRmMax, default_tail_cutoff(c.family));
    const bool grows = r.divergent() || r.values[kRmMax] > 2.0 * r.values[kRmMax / 10];
    disagreements += grows == c.easy_c3_bounded_rm;
  }
  o.fail_if(disagreements != 0, std::to_string(disagreements) + " r_m trends contradict the classification");
  o.note(std::to_string(classified.size()) + " samples, " + check.detail);
  return o;
}

Outcome rm_diagnostics() {
  Outcome o;
  double worst = 0.0;
  for (const double eps : {0.25, 0.5, 0.9}) {
    const auto family = WeightFamily::geometric(eps);
    const auto r = rm_sequence(family, kRmMax, default_tail_cutoff(family));
    for (const double v : r.values) worst = std::max(worst, std::abs(v - 1.0 / (1.0 - eps * eps)));
  }
  o.fail_if(worst > kGeometricTol, "geometric r_m off by " + fmt(worst));
  const auto power = WeightFamily::power(2.0);
  const auto r = rm_sequence(power, kRmMax, default_tail_cutoff(power));
  bool increasing = true;
  // w_0 = w_1 = 1 makes r_0 = 1 + r_1, so growth is measured from m = 1
  for (std::uint64_t m = 2; m <= kRmMax; ++m) increasing = increasing && r.values[m] > r.values[m - 1];
  o.fail_if(!increasing, "power(2) r_m not increasing");
  o.fail_if(!(r.values[kRmMax] > kPowerRmFloor), "power(2) r_1000 = " + fmt(r.values[kRmMax]));
  o.note("geometric max error " + fmt(worst) + ", power(2) r_1000 = " + fmt(r.values[kRmMax]));
  return o;
}

Outcome inequalities() {
  Outcome o;
  const auto rows = run_inequality_battery(kInequalitySeed, kInequalityCount, kInequalityDegree, kInequalityRel);
  const auto check = check_inequalities(rows);
  o.fail_if(!check.passed, check.detail);
  // the singular quotient quadrature must settle under node doubling
  double worst = 0.0;
  std::size_t most_nodes = 0;
  for (const auto& f : random_polynomials(kInequalitySeed, kInequalityCount, kInequalityDegree)) {
    for (const double q : {0.4, 0.5}) {
      const auto r = refined_quotient_quasinorm(f, q, 16 * default_nodes(f.degree()), kQuotientRefinementRel);
      worst = std::max(worst, r.refinement_rel);
      most_nodes = std::max(most_nodes, r.nodes);
    }
  }
  o.fail_if(worst > kQuotientRefinementRel, "quotient refinement " + fmt(worst));
  o.note(check.detail + ", quotient refinement " + fmt(worst) + " by " + std::to_string(most_nodes) + " nodes");
  return o;
}

Outcome extremal_probe_check() {
  Outcome o;
  const auto all = subsequence_indices("all", kProbeCount);
  for (const double alpha : {0.1, 0.25, 0.4}) {
    const auto p = extremal_probe(WeightFamily::power(alpha), 0.5 + alpha, all);
    o.fail_if(std::abs(p.running_min - 1.0) > kProbeFlatTol || std::abs(p.running_max - 1.0) > kProbeFlatTol,
              "power(" + fmt(alpha) + ") ratio not identically 1");
  }
  const auto first = subsequence_indices("all", 10000);
  const auto id = extremal_probe(WeightFamily::identity(), 0.75, first);
  // n^{-1/4} reaches 0.1 exactly at n = 10^4 and drops below right after
  o.fail_if(id.running_min > 0.1 * (1.0 + 1e-12), "identity running_min " + fmt(id.running_min));
  o.fail_if(id.running_max != 1.0, "identity running_max " + fmt(id.running_max));
  const auto next = subsequence_indices("all", 10001);
  o.fail_if(!(extremal_probe(WeightFamily::identity(), 0.75, next).running_min < 0.1), "not below 0.1 after 10^4");
  o.note("identity running_min " + fmt(id.running_min) + " at n = 10^4");
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto manifests = parse_manifests(R"({"experiments": [
    {"id": "lq", "kind": "lq_convergence", "params": {"q": 1.5, "n": "10,100,1000", "coeff_cutoff": 20000}},
    {"id": "hp", "kind": "hp_convergence", "params": {"p": 0.5, "n": "10,100", "coeff_cutoff": 20000, "nodes": 2048}},
    {"id": "lambda", "kind": "lambda_sweep", "params": {"k": "2..4", "coeff_cutoff": 20000}, "s_grid": "0.75,2 x 0,1"},
    {"id": "approx", "kind": "pointwise_approx", "params": {"n": "100,1000"}, "s_grid": "2,1.5"},
    {"id": "mellin", "kind": "mellin_verify", "params": {"k": "1..5"}, "s_grid": "2+1i"},
    {"id": "rho", "kind": "mellin_rho", "params": {"alpha": "0.25,0.5"}, "s_grid": "2,2+1i"},
    {"id": "table1", "kind": "weights_table1"},
    {"id": "ineq", "kind": "inequalities", "seed": 11, "params": {"count": 20, "max_degree": 32}}]})");
  for (const auto& m : manifests) {
    const auto a = run_experiment(m);
    const auto b = run_experiment(m);
    o.fail_if(a.csv != b.csv, m.id + " CSV differs between runs");
    o.fail_if(manifest_to_json(m, a.notes) != manifest_to_json(m, b.notes), m.id + " sidecar differs");
  }
  o.note(std::to_string(manifests.size()) + " experiments rerun byte-identically");
  return o;
}

struct Criterion {
  const char* name;
  double seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"Möbius sieve exactness", kSieveSeconds, sieve_exactness},
      {"Möbius limit trends", kTrendSeconds, mobius_trends},
      {"Lambda-G identity", kLambdaSeconds, lambda_identity},
      {"Mellin verification", kMellinSeconds, mellin},
      {"f_k asymptotics", kFkSeconds, fk_asymptotics},
      {"lq convergence", kLqSeconds, lq_convergence},
      {"Hp convergence", kHpSeconds, hp_convergence},
      {"weight table reproduction", kTableSeconds, table1},
      {"r_m diagnostics", kRmSeconds, rm_diagnostics},
      {"inequality battery", kInequalitySeconds, inequalities},
      {"extremal probe", kProbeSeconds, extremal_probe_check},
      {"determinism", 600.0, determinism},
  };
  std::size_t only = 0;
  if (argc > 1) {
    only = std::strtoul(argv[1], nullptr, 10);
    if (only < 1 || only > criteria.size()) {
      std::fprintf(stderr, "usage: %s [1..%zu]\n", argv[0], criteria.size());
      return 2;
    }
  }
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && i + 1 != only) continue;
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail_if(true, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.fail_if(secs > c.seconds, "took " + fmt(secs) + " s, limit " + fmt(c.seconds) + " s");
    all_pass = all_pass && o.pass;
    std::printf("[%s] %2zu %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
