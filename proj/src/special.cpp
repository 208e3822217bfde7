#include "zfhp/special.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "zfhp/errors.hpp"
#include "zfhp/format.hpp"
#include "zfhp/summation.hpp"

namespace zfhp {

using cplx = std::complex<double>;

std::string to_string(const FunctionalPoint& s) {
  std::string out = format_double(s.re());
  if (!std::signbit(s.im())) out += '+';
  out += format_double(s.im());
  out += 'i';
  return out;
}

namespace {

void require_right_half_plane(FunctionalPoint s, const char* who) {
  if (!(s.re() > 0.0)) {
    throw DomainError(std::string(who) + ": requires Re(s) > 0, got s = " + to_string(s));
  }
}

}  // namespace

cplx expm1(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double em1 = std::expm1(x);
  const double half_sin = std::sin(0.5 * y);
  // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
  const double re = em1 * std::cos(y) - 2.0 * half_sin * half_sin;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

cplx f_k(std::uint64_t k, FunctionalPoint s) {
  require_right_half_plane(s, "f_k");
  if (k == 0) throw InvalidArgument("f_k: k must be >= 1");
  const cplx sv = s.value();
  const cplx one_minus_s = 1.0 - sv;
  const double kd = static_cast<double>(k);
  const cplx k_pow = std::exp(one_minus_s * std::log(kd));
  return -(k_pow * expm1(one_minus_s * std::log1p(1.0 / kd))) / sv;
}

cplx lambda_on_constant(FunctionalPoint s) {
  require_right_half_plane(s, "lambda_on_constant");
  return -1.0 / s.value();
}

ZetaValue zeta(FunctionalPoint s) {
  require_right_half_plane(s, "zeta");
  const cplx sv = s.value();
  if (sv == cplx(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  const cplx denom = 1.0 - std::exp((1.0 - sv) * std::numbers::ln2);
  if (std::abs(denom) < 1e-12) {
    throw ConditionError("zeta: 2^{1-s} = 1 at s = " + to_string(s) +
                         "; eta/(1 - 2^{1-s}) is indeterminate there");
  }

  // Error of the accelerated sum is below 3 (1 + 2|t|) e^{pi|t|/2} (3+sqrt 8)^{-n}.
  const double t = std::abs(s.im());
  const double target = std::log(3.0 * (1.0 + 2.0 * t)) + 0.5 * std::numbers::pi * t + 40.0;
  int n = static_cast<int>(std::ceil(target / std::log(3.0 + std::sqrt(8.0))));
  n = std::max(n, 20);

  // d_k = n sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!)
  std::vector<double> d(static_cast<std::size_t>(n) + 1);
  double term = 1.0 / n;
  double partial = term;
  d[0] = n * partial;
  for (int i = 0; i < n; ++i) {
    term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
    partial += term;
    d[static_cast<std::size_t>(i) + 1] = n * partial;
  }
  const double dn = d[static_cast<std::size_t>(n)];

  CompensatedComplexSum sum;
  for (int k = 0; k < n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double weight = sign * (d[static_cast<std::size_t>(k)] - dn) / dn;
    sum += weight * std::exp(-sv * std::log(static_cast<double>(k + 1)));
  }
  const cplx eta = -sum.value();
  return ZetaValue{eta / denom, "accelerated-eta", n};
}

cplx g_k(std::uint64_t k, FunctionalPoint s) {
  if (k < 2) throw InvalidArgument("g_k: k must be >= 2");
  const cplx z = zeta(s).value;
  const cplx sv = s.value();
  const double kd = static_cast<double>(k);
  return -(z / sv) * (std::exp(-sv * std::log(kd)) - 1.0 / kd);
}

MellinStepResult mellin_step_pk(std::uint64_t k, FunctionalPoint s) {
  require_right_half_plane(s, "mellin_step_pk");
  if (k == 0) throw InvalidArgument("mellin_step_pk: k must be >= 1");
  const cplx sv = s.value();
  const double kd = static_cast<double>(k);
  const double lo = 1.0 / (kd + 1.0);
  const double hi = 1.0 / kd;
  auto power = [sv](double x) -> cplx { return std::exp((sv - 1.0) * std::log(x)); };

  double err_step = 0.0;
  const cplx step = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      power, lo, hi, 15, 1e-14, &err_step);
  // x^{s-1} is integrable at 0 but singular when Re(s) < 1.
  boost::math::quadrature::tanh_sinh<double> integrator;
  double err_head = 0.0;
  const cplx head = integrator.integrate(power, 0.0, lo, 1e-14, &err_head);

  MellinStepResult out;
  out.quadrature = kd * step - head;
  out.quadrature_error = kd * err_step + err_head;
  auto antiderivative = [sv](double x) { return std::exp(sv * std::log(x)) / sv; };
  out.closed_form = kd * (antiderivative(hi) - antiderivative(lo)) - antiderivative(lo);
  return out;
}

MellinRhoResult mellin_rho_alpha(double alpha, FunctionalPoint s, double truncation) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("mellin_rho_alpha: alpha must lie in (0, 1), got " + format_double(alpha));
  }
  require_right_half_plane(s, "mellin_rho_alpha");
  if (!(truncation > 0.0 && truncation < 1.0)) {
    throw InvalidArgument("mellin_rho_alpha: truncation must lie in (0, 1)");
  }
  const cplx sv = s.value();
  const double y_end = 1.0 / truncation;
  auto neg_power = [sv](double y) { return std::exp(-sv * std::log(y)); };

  // On [y1, y2) with floor(y) = b and floor(alpha y) = a the integrand is
  // (alpha b - a) y^{-s-1}.
  CompensatedComplexSum sum;
  std::uint64_t b = 1;
  std::uint64_t a = 0;
  double y1 = 1.0;
  cplx p1 = neg_power(y1);
  std::uint64_t pieces = 0;
  while (y1 < y_end) {
    const double next_int = static_cast<double>(b + 1);
    const double next_alpha = static_cast<double>(a + 1) / alpha;
    const double y2 = std::min({next_int, next_alpha, y_end});
    const cplx p2 = neg_power(y2);
    const double c = alpha * static_cast<double>(b) - static_cast<double>(a);
    if (c != 0.0) sum += c * (p1 - p2);
    ++pieces;
    if (y2 == next_int) ++b;
    if (y2 == next_alpha) ++a;
    y1 = y2;
    p1 = p2;
  }
  MellinRhoResult out;
  out.value = sum.value() / sv;
  out.tail_bound = std::pow(truncation, s.re()) / s.re();
  out.pieces = pieces;
  return out;
}

double rho_truncation_for(FunctionalPoint s, double tol) {
  require_right_half_plane(s, "rho_truncation_for");
  double t = 0.1;
  while (std::pow(t, s.re()) / s.re() > tol) t *= 0.1;
  return t;
}

FkGrowthBracket fk_growth_bracket(FunctionalPoint s, std::uint64_t k_max) {
  require_right_half_plane(s, "fk_growth_bracket");
  if (k_max == 0) throw InvalidArgument("fk_growth_bracket: k_max must be >= 1");
  FkGrowthBracket out;
  out.explicit_constant = std::abs(1.0 - s.value()) / std::abs(s.value());
  out.c1 = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const double scale = std::pow(static_cast<double>(k), s.re());
    const double ratio = std::abs(f_k(k, s)) * scale;
    out.c1 = std::min(out.c1, ratio);
    out.c2 = std::max(out.c2, ratio);
    if (ratio > out.explicit_constant * (1.0 + 1e-12)) ++out.bound_violations;
  }
  return out;
}

}  // namespace zfhp
