#include "zfhp/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "zfhp/errors.hpp"
#include "zfhp/format.hpp"
#include "zfhp/summation.hpp"

namespace zfhp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

double parse_number(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) {
    throw InvalidArgument("cannot parse number '" + std::string(text) + "' in weight family '" +
                          std::string(context) + "'");
  }
  return value;
}

}  // namespace

WeightFamily WeightFamily::identity() { return {WeightKind::Identity, 0.0, 0.0, 0.0}; }

WeightFamily WeightFamily::power(double alpha) {
  require(alpha > 0.0 && std::isfinite(alpha), "power weight needs alpha > 0");
  return {WeightKind::Power, alpha, 0.0, 0.0};
}

WeightFamily WeightFamily::power_log(double alpha, double beta) {
  require(alpha > 0.0 && std::isfinite(alpha), "powerlog weight needs alpha > 0");
  require(beta > 0.0 && std::isfinite(beta), "powerlog weight needs beta > 0");
  return {WeightKind::PowerLog, alpha, beta, 0.0};
}

WeightFamily WeightFamily::quasi_exp(double alpha) {
  require(alpha > 0.0 && std::isfinite(alpha), "quasiexp weight needs alpha > 0");
  return {WeightKind::QuasiExp, alpha, 0.0, 0.0};
}

WeightFamily WeightFamily::stretched_exp(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "stretchedexp weight needs 0 < alpha < 1");
  return {WeightKind::StretchedExp, alpha, 0.0, 0.0};
}

WeightFamily WeightFamily::geometric(double epsilon) {
  require(epsilon > 0.0 && epsilon < 1.0, "geometric weight needs 0 < epsilon < 1");
  return {WeightKind::Geometric, 0.0, 0.0, epsilon};
}

WeightFamily WeightFamily::super_exp(double alpha) {
  require(alpha > 1.0 && std::isfinite(alpha), "superexp weight needs alpha > 1");
  return {WeightKind::SuperExp, alpha, 0.0, 0.0};
}

WeightFamily WeightFamily::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto one = [&]() {
    require(!args.empty() && args.find(',') == std::string_view::npos,
            "weight family '" + std::string(text) + "' takes exactly one parameter");
    return parse_number(args, text);
  };
  if (head == "identity") {
    require(colon == std::string_view::npos, "identity takes no parameters");
    return identity();
  }
  if (head == "power") return power(one());
  if (head == "quasiexp") return quasi_exp(one());
  if (head == "stretchedexp") return stretched_exp(one());
  if (head == "geometric") return geometric(one());
  if (head == "superexp") return super_exp(one());
  if (head == "powerlog") {
    const auto comma = args.find(',');
    require(comma != std::string_view::npos, "powerlog takes two parameters ALPHA,BETA");
    return power_log(parse_number(args.substr(0, comma), text), parse_number(args.substr(comma + 1), text));
  }
  throw InvalidArgument("unknown weight family '" + std::string(text) + "'");
}

double WeightFamily::log_weight(std::uint64_t n) const noexcept {
  if (n == 0) return 0.0;
  const double x = static_cast<double>(n);
  switch (kind_) {
    case WeightKind::Identity:
      return 0.0;
    case WeightKind::Power:
      return alpha_ * std::log(x);
    case WeightKind::PowerLog:
      if (n == 1) return 0.0;
      return std::log(std::pow(x, alpha_) + std::pow(std::log(x), beta_));
    case WeightKind::QuasiExp:
      if (n == 1) return 0.0;
      return std::pow(std::log(x), 1.0 + alpha_);
    case WeightKind::StretchedExp:
    case WeightKind::SuperExp:
      return std::pow(x, alpha_);
    case WeightKind::Geometric:
      return x * -std::log(epsilon_);
  }
  return 0.0;
}

double WeightFamily::weight(std::uint64_t n) const noexcept { return std::exp(log_weight(n)); }

std::string WeightFamily::name() const {
  switch (kind_) {
    case WeightKind::Identity: return "identity";
    case WeightKind::Power: return "power";
    case WeightKind::PowerLog: return "powerlog";
    case WeightKind::QuasiExp: return "quasiexp";
    case WeightKind::StretchedExp: return "stretchedexp";
    case WeightKind::Geometric: return "geometric";
    case WeightKind::SuperExp: return "superexp";
  }
  return "?";
}

std::string WeightFamily::params() const {
  switch (kind_) {
    case WeightKind::Identity: return "";
    case WeightKind::PowerLog: return "alpha=" + format_double(alpha_) + ";beta=" + format_double(beta_);
    case WeightKind::Geometric: return "epsilon=" + format_double(epsilon_);
    default: return "alpha=" + format_double(alpha_);
  }
}

std::string WeightFamily::spec() const {
  switch (kind_) {
    case WeightKind::Identity: return "identity";
    case WeightKind::PowerLog: return "powerlog:" + format_double(alpha_) + "," + format_double(beta_);
    case WeightKind::Geometric: return "geometric:" + format_double(epsilon_);
    default: return name() + ":" + format_double(alpha_);
  }
}

std::string to_string(Strip strip) {
  switch (strip) {
    case Strip::Left: return "Left";
    case Strip::Central: return "Central";
    case Strip::Right: return "Right";
    case Strip::None: return "None";
  }
  return "?";
}

std::optional<double> c4_halfplane(const WeightFamily& family) {
  // (w_k k^{-r}) in l^2 iff w_k^2 k^{-2r} summable.
  switch (family.kind()) {
    case WeightKind::Identity:
      return 0.5;
    case WeightKind::Power:
    case WeightKind::PowerLog:  // (log n)^beta is dominated by n^alpha
      return 0.5 + family.alpha();
    case WeightKind::QuasiExp:  // beats every power of n
    case WeightKind::StretchedExp:
    case WeightKind::Geometric:
    case WeightKind::SuperExp:
      return std::nullopt;
  }
  return std::nullopt;
}

double SquareSumTrend::growth() const {
  if (std::isinf(full)) return kInf;
  if (head <= 0.0) return kInf;
  return full / head;
}

SquareSumTrend c4_square_sum_trend(const WeightFamily& family, double r, std::uint64_t k_max) {
  require(k_max >= 10, "c4_square_sum_trend: k_max must be >= 10");
  CompensatedSum sum;
  SquareSumTrend out;
  const std::uint64_t head_end = k_max / 10;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    sum += std::exp(2.0 * (family.log_weight(k) - r * std::log(static_cast<double>(k))));
    if (k == head_end) out.head = sum.value();
  }
  out.full = sum.value();
  return out;
}

bool RmSequence::divergent() const noexcept {
  return !values.empty() && std::isinf(values.front());
}

namespace {

bool inverse_square_sum_diverges(const WeightFamily& family) {
  switch (family.kind()) {
    case WeightKind::Identity:
      return true;
    case WeightKind::Power:
    case WeightKind::PowerLog:
      return family.alpha() <= 0.5;
    default:
      return false;
  }
}

struct Bracket {
  double lo;
  double hi;
};

// Bracket for R = sum_{n>=a} (w_a / w_n)^2. With g = w^{-2} decreasing,
// int_a^inf g <= sum_{n>=a} g(n) <= g(a) + int_a^inf g; each kind bounds the
// scaled integral I = w_a^2 int_a^inf g.
Bracket scaled_tail(const WeightFamily& family, std::uint64_t a_index) {
  const double a = static_cast<double>(a_index);
  const double alpha = family.alpha();
  double lo = 0.0;
  double hi = 0.0;
  switch (family.kind()) {
    case WeightKind::Identity:
      return {kInf, kInf};
    case WeightKind::Geometric: {
      const double r = 1.0 / (1.0 - family.epsilon() * family.epsilon());
      return {r, r};
    }
    case WeightKind::Power:
      lo = hi = a / (2.0 * alpha - 1.0);
      break;
    case WeightKind::PowerLog: {
      // w(x) <= x^alpha (1 + delta) once (log x)^beta / x^alpha is decreasing
      const double beta = family.beta();
      const double delta = std::pow(std::log(a), beta) / std::pow(a, alpha);
      hi = a * (1.0 + delta) * (1.0 + delta) / (2.0 * alpha - 1.0);
      lo = std::log(a) > beta / alpha ? a / (2.0 * alpha - 1.0) : 0.0;
      break;
    }
    case WeightKind::QuasiExp: {
      // x = e^u: integrand exp(u - 2u^{1+alpha} + 2u0^{1+alpha}) is
      // log-concave, so it sits below its tangent line at u0 = log a.
      const double slope = 2.0 * (1.0 + alpha) * std::pow(std::log(a), alpha) - 1.0;
      hi = slope > 0.0 ? a / slope : kInf;
      break;
    }
    case WeightKind::StretchedExp: {
      // t = x^alpha, v = t - a^alpha: I = (1/alpha) int_0^inf e^{-2v} (a^alpha + v)^b dv
      const double b = 1.0 / alpha - 1.0;
      const double head = std::pow(std::pow(a, alpha), b) / 2.0;
      const double moment = std::tgamma(b + 1.0) / std::pow(2.0, b + 1.0);
      lo = head / alpha;
      hi = (b <= 1.0 ? 1.0 : std::pow(2.0, b - 1.0)) * (head + moment) / alpha;
      break;
    }
    case WeightKind::SuperExp:
      // x^alpha lies above its tangent at a
      hi = 1.0 / (2.0 * alpha * std::pow(a, alpha - 1.0));
      break;
  }
  return {lo, 1.0 + hi};
}

}  // namespace

std::uint64_t default_tail_cutoff(const WeightFamily& family) {
  switch (family.kind()) {
    case WeightKind::Identity:
    case WeightKind::Power:
    case WeightKind::PowerLog:
    case WeightKind::QuasiExp:
      return 10'000'000;
    default:
      return 1'000;
  }
}

RmSequence rm_sequence(const WeightFamily& family, std::uint64_t m_max, std::uint64_t tail_cutoff) {
  require(m_max <= tail_cutoff, "rm_sequence: m_max must not exceed tail_cutoff");
  RmSequence out;
  out.tail_cutoff = tail_cutoff;
  if (inverse_square_sum_diverges(family)) {
    out.values.assign(m_max + 1, kInf);
    out.tail_slack.assign(m_max + 1, 0.0);
    return out;
  }
  out.values.resize(m_max + 1);
  out.tail_slack.resize(m_max + 1);

  const Bracket tail = scaled_tail(family, tail_cutoff + 1);
  // r_m = 1 + (w_m / w_{m+1})^2 r_{m+1}, run down from m = tail_cutoff + 1.
  double r = 0.5 * (tail.lo + tail.hi);
  double slack = 0.5 * (tail.hi - tail.lo);
  double log_next = family.log_weight(tail_cutoff + 1);
  for (std::uint64_t m = tail_cutoff;; --m) {
    const double log_m = family.log_weight(m);
    const double ratio = std::exp(2.0 * (log_m - log_next));
    r = 1.0 + ratio * r;
    slack *= ratio;
    if (m <= m_max) {
      out.values[m] = r;
      out.tail_slack[m] = slack;
    }
    log_next = log_m;
    if (m == 0) break;
  }
  return out;
}

bool rm_bounded(const WeightFamily& family) {
  switch (family.kind()) {
    case WeightKind::Geometric:  // r_m = 1/(1 - eps^2)
    case WeightKind::SuperExp:   // r_m -> 1
      return true;
    case WeightKind::Identity:      // infinite
    case WeightKind::Power:         // ~ m/(2 alpha - 1) or infinite
    case WeightKind::PowerLog:      // same order as Power
    case WeightKind::QuasiExp:      // ~ m / (2 (1+alpha) (log m)^alpha)
    case WeightKind::StretchedExp:  // ~ m^{1-alpha} / (2 alpha)
      return false;
  }
  return false;
}

ClassificationResult classify(const WeightFamily& family) {
  ClassificationResult out{family, c4_halfplane(family), rm_bounded(family), Strip::None};
  const bool half_plane = out.c4_halfplane.has_value();
  if (half_plane && out.easy_c3_bounded_rm) {
    out.strip = Strip::Central;
  } else if (out.easy_c3_bounded_rm) {
    out.strip = Strip::Left;
  } else if (half_plane) {
    out.strip = Strip::Right;
  }
  return out;
}

std::vector<WeightFamily> table1_families() {
  return {
      WeightFamily::identity(),         WeightFamily::power(0.25),       WeightFamily::power_log(0.25, 1.0),
      WeightFamily::quasi_exp(0.25),    WeightFamily::stretched_exp(0.5), WeightFamily::geometric(0.5),
      WeightFamily::super_exp(2.0),
  };
}

std::vector<std::uint64_t> subsequence_indices(std::string_view kind, std::uint64_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  if (kind == "all") {
    for (std::uint64_t i = 1; i <= count; ++i) out.push_back(i);
    return out;
  }
  if (kind == "primes") {
    // p_n < n (log n + log log n) for n >= 6
    const double c = static_cast<double>(std::max<std::uint64_t>(count, 6));
    const auto bound = static_cast<std::uint64_t>(c * (std::log(c) + std::log(std::log(c)))) + 16;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t p = 2; p <= bound && out.size() < count; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
    }
    return out;
  }
  if (kind.starts_with("ap:")) {
    const auto args = kind.substr(3);
    const auto comma = args.find(',');
    require(comma != std::string_view::npos, "arithmetic progression needs ap:START,STEP");
    const double start = parse_number(args.substr(0, comma), kind);
    const double step = parse_number(args.substr(comma + 1), kind);
    require(start >= 1 && step >= 1 && start == std::floor(start) && step == std::floor(step),
            "arithmetic progression needs positive integer START and STEP");
    for (std::uint64_t i = 0; i < count; ++i) {
      out.push_back(static_cast<std::uint64_t>(start) + i * static_cast<std::uint64_t>(step));
    }
    return out;
  }
  throw InvalidArgument("unknown subsequence '" + std::string(kind) + "' (all | primes | ap:START,STEP)");
}

ProbeResult extremal_probe(const WeightFamily& family, double r, std::span<const std::uint64_t> indices) {
  require(r > 0.5 && r < 1.0, "extremal_probe: r must lie in (1/2, 1)");
  require(!indices.empty(), "extremal_probe: empty subsequence");
  ProbeResult out;
  out.trace.reserve(indices.size());
  out.running_min = kInf;
  out.running_max = 0.0;
  std::uint64_t previous = 0;
  for (const std::uint64_t n : indices) {
    require(n > previous, "extremal_probe: subsequence must be strictly increasing and start at >= 1");
    previous = n;
    const double ratio = std::exp(family.log_weight(n) - (r - 0.5) * std::log(static_cast<double>(n)));
    out.trace.push_back(ratio);
    out.running_min = std::min(out.running_min, ratio);
    out.running_max = std::max(out.running_max, ratio);
  }
  return out;
}

}  // namespace zfhp
