#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zfhp {

enum class WeightKind { Identity, Power, PowerLog, QuasiExp, StretchedExp, Geometric, SuperExp };

/// A weight sequence w_n >= 1 defining the space of sum a_n z^n with
/// (a_n / w_n) in l^2. w_0 = 1 for every kind.
class WeightFamily {
 public:
  static WeightFamily identity();
  static WeightFamily power(double alpha);                   // n^alpha, alpha > 0
  static WeightFamily power_log(double alpha, double beta);  // n^alpha + (log n)^beta
  static WeightFamily quasi_exp(double alpha);               // exp((log n)^{1+alpha})
  static WeightFamily stretched_exp(double alpha);           // exp(n^alpha), 0 < alpha < 1
  static WeightFamily geometric(double epsilon);             // (1/epsilon)^n, 0 < epsilon < 1
  static WeightFamily super_exp(double alpha);               // exp(n^alpha), alpha > 1

  /// `identity | power:A | powerlog:A,B | quasiexp:A | stretchedexp:A |
  /// geometric:EPS | superexp:A`
  static WeightFamily parse(std::string_view text);

  [[nodiscard]] WeightKind kind() const noexcept { return kind_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double beta() const noexcept { return beta_; }
  [[nodiscard]] double epsilon() const noexcept { return epsilon_; }

  /// log w_n; finite for every n even where w_n itself overflows.
  [[nodiscard]] double log_weight(std::uint64_t n) const noexcept;
  [[nodiscard]] double weight(std::uint64_t n) const noexcept;

  [[nodiscard]] std::string name() const;    // "power"
  [[nodiscard]] std::string params() const;  // "alpha=0.25"
  [[nodiscard]] std::string spec() const;    // "power:0.25", re-parseable

  friend bool operator==(const WeightFamily&, const WeightFamily&) = default;

 private:
  WeightFamily(WeightKind kind, double alpha, double beta, double epsilon)
      : kind_(kind), alpha_(alpha), beta_(beta), epsilon_(epsilon) {}

  WeightKind kind_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double epsilon_ = 0.0;
};

enum class Strip { Left, Central, Right, None };
std::string to_string(Strip strip);

struct ClassificationResult {
  WeightFamily family;
  std::optional<double> c4_halfplane;  // r* with Lambda^{(s)} bounded for Re(s) > r*
  bool easy_c3_bounded_rm = false;     // necessary condition for invertible I - S
  Strip strip = Strip::None;
};

/// inf of r with (w_k / k^r) in l^2, from the comparison test per kind;
/// absent when no r works.
std::optional<double> c4_halfplane(const WeightFamily& family);

/// Partial sums of (w_k / k^r)^2 up to k_max/10 and k_max. A convergent
/// series shows growth() near 1; divergence shows up as growth() well above.
struct SquareSumTrend {
  double head = 0.0;
  double full = 0.0;
  [[nodiscard]] double growth() const;
};
SquareSumTrend c4_square_sum_trend(const WeightFamily& family, double r, std::uint64_t k_max);

/// r_m = sum_{n>=m} w_m^2 / w_n^2 for m = 0..m_max.
struct RmSequence {
  std::vector<double> values;      // +inf when sum w_n^{-2} diverges
  std::vector<double> tail_slack;  // |true r_m - values[m]| <= tail_slack[m]
  std::uint64_t tail_cutoff = 0;
  [[nodiscard]] bool divergent() const noexcept;
};

/// Exact terms for n <= tail_cutoff, then the analytic tail for the kind.
/// Requires m_max <= tail_cutoff.
RmSequence rm_sequence(const WeightFamily& family, std::uint64_t m_max, std::uint64_t tail_cutoff);

/// 10^7 for power-like kinds, 10^3 for exponential ones.
std::uint64_t default_tail_cutoff(const WeightFamily& family);

/// Whether (r_m) is bounded, decided per kind from the closed-form
/// asymptotics of r_m. A necessary condition for Easy (C3) only.
bool rm_bounded(const WeightFamily& family);

ClassificationResult classify(const WeightFamily& family);

/// Representative rows: 1, n^a, n^a + (log n)^b, exp((log n)^{1+a}),
/// exp(n^a) (a<1), (1/eps)^n, exp(n^a) (a>1).
std::vector<WeightFamily> table1_families();

/// Indices for the extremal probe: "all", "primes", or "ap:START,STEP".
std::vector<std::uint64_t> subsequence_indices(std::string_view kind, std::uint64_t count);

struct ProbeResult {
  double running_min = 0.0;
  double running_max = 0.0;
  std::vector<double> trace;  // w_{n_i} / n_i^{r - 1/2}
};

/// Traces w_{n_i} / n_i^{r-1/2} along strictly increasing indices n_i >= 1,
/// r in (1/2, 1).
ProbeResult extremal_probe(const WeightFamily& family, double r, std::span<const std::uint64_t> indices);

}  // namespace zfhp
