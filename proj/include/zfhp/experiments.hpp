#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "zfhp/arith.hpp"
#include "zfhp/norms.hpp"
#include "zfhp/series.hpp"
#include "zfhp/special.hpp"
#include "zfhp/weights.hpp"

namespace zfhp {

struct ConvergenceRecord {
  std::uint64_t n = 0;              // Möbius sum runs over k = 2..n
  NormSpec norm_kind;
  std::size_t coeff_cutoff = 0;     // series degree N
  double value = 0.0;
  std::optional<double> tail_bound;  // coefficients past N; absent if not available
  std::int64_t wall_time_ms = 0;
};

struct RunOptions {
  // Off gives wall_time_ms = 0 so reruns are byte-identical.
  bool timing = true;
};

/// tau(j) <= constant * j^exponent, with the constant fitted as the max of
/// tau(j)/j^exponent over the table. For exponent 0.3 the supremum sits at
/// j = 5040, so any table reaching that far gives the true constant.
struct DivisorBound {
  double constant = 0.0;
  double exponent = 0.3;
  std::uint64_t table_limit = 0;
};
DivisorBound fit_divisor_bound(const DivisorCountTable& tau, double exponent = 0.3);

/// Bound on (sum_{j>N} |c_j|^q)^{1/q} for the coefficients c_j of
/// sum_{k<=n} mu(k)(I-S)h_k - (1-z), from |c_j| <= (|sum_{k<=n} mu(k)/k| + tau(j))/j:
/// tau explicit up to the table limit, the fitted power bound past it.
/// Absent when q(1 - exponent) <= 1, where the power bound is not summable.
std::optional<double> lq_tail_bound(double q, std::size_t degree, double mobius_sum, const DivisorCountTable& tau,
                                    const DivisorBound& bound);

struct LqConvergence {
  std::vector<ConvergenceRecord> records;
  DivisorBound divisor_bound;
};

/// ||sum_{k=2}^{n} mu(k)(I-S)h_k - (1-z)||_q over coefficients 0..N for each
/// n in the strictly increasing n_list, advancing one partial sum in place.
LqConvergence run_lq_convergence(double q, std::span<const std::uint64_t> n_list, std::size_t degree,
                                 const MobiusTable& table, const DivisorCountTable& tau, RunOptions options = {});

struct HpConvergenceRow {
  ConvergenceRecord coarse;  // `nodes`
  ConvergenceRecord fine;    // 2 * nodes
  double refinement_rel = 0.0;
  bool underresolved = false;  // nodes <= 2N: the rule is not exact at this degree
};

/// H^p quasi-norm of sum_{k=2}^{n} mu(k) h_k - 1, 0 < p < 1, at both
/// `nodes` and 2 * nodes.
std::vector<HpConvergenceRow> run_hp_convergence(double p, std::span<const std::uint64_t> n_list, std::size_t degree,
                                                 std::size_t nodes, const MobiusTable& table,
                                                 RunOptions options = {});

std::vector<ConvergenceRecord> flatten(std::span<const HpConvergenceRow> rows);

struct LambdaSweepRow {
  std::uint64_t k = 0;
  FunctionalPoint s{0.0};
  double residual = 0.0;
  double tail_bound = 0.0;
  bool pass = false;
};

/// |Lambda^{(s)}(h_k) - G_k(s)| at degree N for every (k, s). Every s is
/// checked before any work: Re(s) <= 1/2 raises DomainError, s = 1 PoleError.
std::vector<LambdaSweepRow> run_lambda_sweep(std::span<const std::uint64_t> k_list,
                                             std::span<const FunctionalPoint> s_grid, std::size_t degree,
                                             double abs_slack = 1e-8);

struct ApproxRow {
  FunctionalPoint s{0.0};
  std::uint64_t n = 0;
  std::complex<double> value;
  double residual = 0.0;  // |value + 1/s|
};

std::vector<ApproxRow> run_pointwise_approx(std::span<const FunctionalPoint> s_grid,
                                            std::span<const std::uint64_t> n_list, const MobiusTable& table);

struct MellinRow {
  std::uint64_t k = 0;
  FunctionalPoint s{0.0};
  std::complex<double> quadrature;
  std::complex<double> fk;
  double abs_diff = 0.0;
  double quadrature_error = 0.0;
  bool pass = false;
};

std::vector<MellinRow> run_mellin_verify(std::span<const std::uint64_t> k_list,
                                         std::span<const FunctionalPoint> s_grid, double tol);

struct MellinRhoRow {
  double alpha = 0.0;
  FunctionalPoint s{0.0};
  std::complex<double> value;
  std::complex<double> identity;  // (zeta(s)/s)(alpha - alpha^s)
  double abs_diff = 0.0;
  double tail_bound = 0.0;
  bool pass = false;
};

std::vector<MellinRhoRow> run_mellin_rho(std::span<const double> alphas, std::span<const FunctionalPoint> s_grid,
                                         double tol);

/// Reproducible random test polynomials: degree uniform in [1, max_degree],
/// real and imaginary parts uniform in [-1, 1], drawn from mt19937_64(seed).
std::vector<ComplexSeries> random_polynomials(std::uint64_t seed, std::size_t count, std::size_t max_degree);

struct InequalityRow {
  std::size_t poly = 0;
  std::size_t degree = 0;
  std::string check;  // "duren", "hardy:q=1.5", "reverse_holder:p=1;q=0.4", "parseval"
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Duren's coefficient bound, ||f||_p <= ||a||_q for q in {1, 1.5, 2} and
/// reverse Hölder at (p, q) in {(1, 0.4), (2, 0.5)}, each holding when
/// lhs <= rhs (1 + rel_tol). The "parseval" row compares ||f||_2 on the
/// circle (lhs) with ||a||_2 (rhs) and holds at 1e-12 relative.
std::vector<InequalityRow> run_inequality_battery(std::uint64_t seed, std::size_t count, std::size_t max_degree,
                                                  double rel_tol = 1e-9);

// CSV output, one record per row, shortest round-trip reals.
void write_csv(std::ostream& out, std::span<const ConvergenceRecord> rows);
void write_csv(std::ostream& out, std::span<const LambdaSweepRow> rows);
void write_csv(std::ostream& out, std::span<const ApproxRow> rows);
void write_csv(std::ostream& out, std::span<const MellinRow> rows);
void write_csv(std::ostream& out, std::span<const MellinRhoRow> rows);
void write_csv(std::ostream& out, std::span<const ClassificationResult> rows);
void write_csv(std::ostream& out, std::span<const InequalityRow> rows);

struct Thresholds {
  double max_decade_ratio = 1.0;  // value(next n) < ratio * value(n)
  double refinement_rel = 1e-4;
  double lambda_slack = 1e-8;
  double mellin_tol = 1e-8;
  double rho_tol = 1e-6;
  double inequality_rel = 1e-9;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

CheckOutcome check_trend(std::span<const ConvergenceRecord> records, double max_ratio);
CheckOutcome check_refinement(std::span<const HpConvergenceRow> rows, double rel);
CheckOutcome check_lambda(std::span<const LambdaSweepRow> rows);
/// Strictly decreasing residual over n for each s with Re(s) > 1; other s are
/// only reported.
CheckOutcome check_approx(std::span<const ApproxRow> rows);
CheckOutcome check_mellin(std::span<const MellinRow> rows);
CheckOutcome check_mellin_rho(std::span<const MellinRhoRow> rows);
CheckOutcome check_inequalities(std::span<const InequalityRow> rows);
/// Strips of the seven representative families: Right x3, None x2, Left x2.
CheckOutcome check_table1(std::span<const ClassificationResult> rows);

/// One experiment: kind plus its parameters in CLI syntax ("n": "10,100,1000").
/// Same manifest, same platform, same bytes out.
struct ExperimentManifest {
  std::string id;
  // lq_convergence | hp_convergence | lambda_sweep | pointwise_approx |
  // mellin_verify | mellin_rho | weights_table1 | weights_classify | inequalities
  std::string kind;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::string code_version;
  std::string s_grid;
  Thresholds thresholds;
  bool timing = false;
};

/// Accepts one manifest object or {"experiments": [...]}. Throws
/// InvalidArgument on malformed JSON, unknown kinds or unknown keys.
std::vector<ExperimentManifest> parse_manifests(const std::string& json_text);
/// Normalized JSON (every field spelled out), suitable as a sidecar.
std::string manifest_to_json(const ExperimentManifest& manifest, const std::vector<std::string>& notes = {});

struct ExperimentOutput {
  std::string csv;
  std::vector<CheckOutcome> checks;
  std::vector<std::string> notes;  // e.g. the fitted divisor constant
};

ExperimentOutput run_experiment(const ExperimentManifest& manifest);

/// Library version string compiled into the core.
std::string code_version();

}  // namespace zfhp
