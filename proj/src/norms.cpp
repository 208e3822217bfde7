#include "zfhp/norms.hpp"

#include <fftw3.h>

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include "zfhp/errors.hpp"
#include "zfhp/format.hpp"
#include "zfhp/summation.hpp"

namespace zfhp {

using cplx = std::complex<double>;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

void require_nodes(std::size_t nodes) {
  require(nodes >= 16 && nodes % 2 == 0, "quadrature needs an even node count >= 16, got " + std::to_string(nodes));
}

// FFTW's planner is not reentrant.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

template <class F>
double power_mean(const std::vector<cplx>& values, double p, F&& magnitude) {
  if (std::isinf(p)) {
    double best = 0.0;
    for (const auto& v : values) best = std::max(best, magnitude(v));
    return best;
  }
  CompensatedSum sum;
  for (const auto& v : values) sum += std::pow(magnitude(v), p);
  return std::pow(sum.value() / static_cast<double>(values.size()), 1.0 / p);
}

}  // namespace

NormSpec::NormSpec(Kind kind) : kind_(std::move(kind)) {
  if (const auto* lq = std::get_if<LqNormSpec>(&kind_)) {
    require(lq->q > 0.0, "lq norm needs q > 0");
  } else if (const auto* hp = std::get_if<HpNormSpec>(&kind_)) {
    require(hp->p > 0.0, "hp norm needs p > 0");
    require_nodes(hp->nodes);
  }
}

std::string NormSpec::name() const {
  switch (kind_.index()) {
    case 0: return "lq";
    case 1: return "weighted_l2";
    default: return "hp";
  }
}

std::string NormSpec::param() const {
  if (const auto* lq = std::get_if<LqNormSpec>(&kind_)) return "q=" + format_double(lq->q);
  if (const auto* w = std::get_if<WeightedL2NormSpec>(&kind_)) return w->family.spec();
  const auto& hp = std::get<HpNormSpec>(kind_);
  return "p=" + format_double(hp.p) + ";nodes=" + std::to_string(hp.nodes);
}

template <class T>
double lq_norm(const BasicSeries<T>& f, double q) {
  require(q > 0.0, "lq_norm: q must be > 0, got " + format_double(q));
  if (std::isinf(q)) {
    double best = 0.0;
    for (const auto& a : f.coeffs()) best = std::max(best, std::abs(a));
    return best;
  }
  CompensatedSum sum;
  for (const auto& a : f.coeffs()) {
    const double m = std::abs(a);
    if (m != 0.0) sum += std::pow(m, q);
  }
  return std::pow(sum.value(), 1.0 / q);
}

template <class T>
double weighted_l2_norm(const BasicSeries<T>& f, const WeightFamily& family) {
  CompensatedSum sum;
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double m = std::abs(f[n]);
    if (m != 0.0) sum += std::exp(2.0 * (std::log(m) - family.log_weight(n)));
  }
  return std::sqrt(sum.value());
}

template <class T>
std::vector<cplx> circle_values(const BasicSeries<T>& f, std::size_t nodes, double radius) {
  require(nodes >= 1, "circle_values: need at least one node");
  require(radius > 0.0 && radius <= 1.0, "circle_values: radius must lie in (0, 1]");
  // f(r e^{i theta_j}) = sum_n a_n r^n e^{i pi n/M} e^{2 pi i n j/M}
  //                    = DFT_j of b_t = sum_{n = t mod M} a_n r^n e^{i pi n/M}
  const std::size_t m = nodes;
  std::vector<cplx> folded(m, 0.0);
  const double log_r = std::log(radius);
  for (std::size_t n = 0; n < f.size(); ++n) {
    const cplx a = f[n];
    if (a == 0.0) continue;
    const double phase = std::numbers::pi * static_cast<double>(n % (2 * m)) / static_cast<double>(m);
    const double scale = radius == 1.0 ? 1.0 : std::exp(log_r * static_cast<double>(n));
    folded[n % m] += a * std::polar(scale, phase);
  }
  std::vector<cplx> out(m);
  auto* in_ptr = reinterpret_cast<fftw_complex*>(folded.data());
  auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(m), in_ptr, out_ptr, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

template <class T>
double circle_mean(const BasicSeries<T>& f, double p, std::size_t nodes, double radius) {
  require(p > 0.0, "circle_mean: p must be > 0");
  require_nodes(nodes);
  const auto values = circle_values(f, nodes, radius);
  return power_mean(values, p, [](const cplx& v) { return std::abs(v); });
}

template <class T>
HpEstimate hp_norm_estimate(const BasicSeries<T>& f, double p, std::size_t nodes) {
  HpEstimate out;
  out.value = circle_mean(f, p, nodes, 1.0);
  out.nodes = nodes;
  out.underresolved = nodes <= 2 * f.degree();
  return out;
}

std::size_t default_nodes(std::size_t degree) {
  std::size_t n = 16;
  while (n < 4 * (degree + 1)) n *= 2;
  return n;
}

template <class T>
InequalityCheck duren_coefficient_check(const BasicSeries<T>& f, std::size_t nodes) {
  CompensatedSum lhs;
  for (std::size_t n = 0; n < f.size(); ++n) lhs += std::abs(f[n]) / static_cast<double>(n + 1);
  return {lhs.value(), std::numbers::pi * hp_norm_estimate(f, 1.0, nodes).value};
}

template <class T>
InequalityCheck hardy_from_lq_check(const BasicSeries<T>& f, double q, std::size_t nodes) {
  require(q >= 1.0 && q <= 2.0, "hardy_from_lq_check: q must lie in [1, 2], got " + format_double(q));
  const double p = q == 1.0 ? kInf : q / (q - 1.0);
  return {hp_norm_estimate(f, p, nodes).value, lq_norm(f, q)};
}

double circle_power_mean(double a) {
  require(a > -1.0, "circle_power_mean: exponent must exceed -1");
  const double g = std::tgamma(1.0 + 0.5 * a);
  return std::tgamma(1.0 + a) / (g * g);
}

double reverse_holder_constant(double p, double q) {
  require(p > 0.0 && q > 0.0, "reverse_holder_constant: p, q must be > 0");
  require(q < p / (1.0 + p), "reverse_holder_constant: needs q < p/(1+p), got p = " + format_double(p) +
                                 ", q = " + format_double(q));
  // r = q/p, 1/r + 1/s = 1, so p s = -pq/(p - q) and -1/(p s) = (p - q)/(pq)
  const double exponent = -p * q / (p - q);
  return std::pow(circle_power_mean(exponent), (p - q) / (p * q));
}

template <class T>
double quotient_quasinorm(const BasicSeries<T>& h, double q, std::size_t nodes) {
  require(q > 0.0 && q < 1.0, "quotient_quasinorm: q must lie in (0, 1)");
  require_nodes(nodes);
  // theta = pi u^beta flattens |1 - z|^{-q} at z = 1; each half of the circle is
  // then integrated over u in [0, 1] with 10-point Gauss-Legendre panels
  const double beta = 2.0 / (1.0 - q);
  using rule = boost::math::quadrature::gauss<double, 10>;
  const auto& abscissa = rule::abscissa();
  const auto& weights = rule::weights();
  const std::size_t panels = std::max<std::size_t>(1, nodes / 20);
  const double width = 1.0 / static_cast<double>(panels);
  CompensatedSum sum;
  for (std::size_t panel = 0; panel < panels; ++panel) {
    const double mid = (static_cast<double>(panel) + 0.5) * width;
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
      // only the positive half of the symmetric rule is stored
      for (const double side : {1.0, -1.0}) {
        const double u = mid + side * 0.5 * width * abscissa[i];
        const double theta = std::numbers::pi * std::pow(u, beta);
        const double jacobian = std::numbers::pi * beta * std::pow(u, beta - 1.0);
        const double w = 0.5 * width * weights[i] * jacobian;
        for (const double sign : {1.0, -1.0}) {
          const cplx z = std::polar(1.0, sign * theta);
          const double mag = std::abs(h.evaluate(z) / (1.0 - z));
          if (mag != 0.0) sum += std::pow(mag, q) * w;
        }
      }
    }
  }
  // both halves, normalised by 2 pi
  const double mean = sum.value() / (2.0 * std::numbers::pi);
  return std::pow(mean, 1.0 / q);
}

template <class T>
RefinedQuadrature refined_quotient_quasinorm(const BasicSeries<T>& h, double q, std::size_t nodes, double rel_tol,
                                             std::size_t max_nodes) {
  require(rel_tol > 0.0, "refined_quotient_quasinorm: rel_tol must be positive");
  RefinedQuadrature out;
  double coarse = quotient_quasinorm(h, q, nodes);
  while (2 * nodes <= max_nodes) {
    nodes *= 2;
    const double fine = quotient_quasinorm(h, q, nodes);
    out = {fine, nodes, fine == 0.0 ? 0.0 : std::abs(fine - coarse) / fine, false};
    out.converged = out.refinement_rel <= rel_tol;
    if (out.converged) break;
    coarse = fine;
  }
  if (out.nodes == 0) out = {coarse, nodes, kInf, false};
  return out;
}

template <class T>
InequalityCheck reverse_holder_check(const BasicSeries<T>& h, double p, double q, std::size_t nodes) {
  const double c = reverse_holder_constant(p, q);
  const auto lhs = refined_quotient_quasinorm(h, q, nodes);
  if (!lhs.converged) {
    throw ConditionError("reverse_holder_check: quadrature did not settle by " + std::to_string(lhs.nodes) +
                         " nodes");
  }
  return {lhs.value, c * hp_norm_estimate(h, p, nodes).value};
}

#define ZFHP_INSTANTIATE_NORMS(T)                                                         \
  template double lq_norm(const BasicSeries<T>&, double);                                 \
  template double weighted_l2_norm(const BasicSeries<T>&, const WeightFamily&);           \
  template std::vector<cplx> circle_values(const BasicSeries<T>&, std::size_t, double);   \
  template double circle_mean(const BasicSeries<T>&, double, std::size_t, double);        \
  template HpEstimate hp_norm_estimate(const BasicSeries<T>&, double, std::size_t);       \
  template InequalityCheck duren_coefficient_check(const BasicSeries<T>&, std::size_t);   \
  template InequalityCheck hardy_from_lq_check(const BasicSeries<T>&, double, std::size_t); \
  template double quotient_quasinorm(const BasicSeries<T>&, double, std::size_t);         \
  template RefinedQuadrature refined_quotient_quasinorm(const BasicSeries<T>&, double, std::size_t, double, \
                                                        std::size_t);                                     \
  template InequalityCheck reverse_holder_check(const BasicSeries<T>&, double, double, std::size_t);

ZFHP_INSTANTIATE_NORMS(double)
ZFHP_INSTANTIATE_NORMS(cplx)

#undef ZFHP_INSTANTIATE_NORMS

}  // namespace zfhp
