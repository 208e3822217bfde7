#include "zfhp/functionals.hpp"

#include <cmath>
#include <string>

#include "zfhp/errors.hpp"
#include "zfhp/summation.hpp"

namespace zfhp {

using cplx = std::complex<double>;

std::vector<cplx> lambda_basis(FunctionalPoint s, std::size_t degree) {
  std::vector<cplx> basis(degree + 1);
  basis[0] = lambda_on_constant(s);
  for (std::size_t n = 1; n <= degree; ++n) basis[n] = f_k(n, s);
  return basis;
}

template <class T>
double fitted_coefficient_bound(const BasicSeries<T>& f) {
  const std::size_t n_max = f.degree();
  double c = 0.0;
  for (std::size_t m = std::max<std::size_t>(1, n_max / 2); m <= n_max; ++m) {
    c = std::max(c, static_cast<double>(m) * std::abs(f[m]));
  }
  return c;
}

double lambda_tail_bound(FunctionalPoint s, std::size_t degree, double coefficient_bound) {
  if (!(s.re() > 0.0)) throw DomainError("lambda_tail_bound: requires Re(s) > 0");
  if (coefficient_bound < 0.0) throw InvalidArgument("lambda_tail_bound: negative coefficient bound");
  if (coefficient_bound == 0.0) return 0.0;
  const double sigma = s.re();
  const double ratio = std::abs(1.0 - s.value()) / std::abs(s.value());
  // sum_{n>N} n^{-sigma-1} <= int_N^inf x^{-sigma-1} dx, or 1 + 1/sigma when N = 0
  const double tail_sum = degree == 0 ? 1.0 + 1.0 / sigma
                                      : std::pow(static_cast<double>(degree), -sigma) / sigma;
  return coefficient_bound * ratio * tail_sum;
}

template <class T>
FunctionalEvaluation lambda_apply(const BasicSeries<T>& f, FunctionalPoint s,
                                  std::span<const cplx> basis, std::optional<double> coefficient_bound) {
  if (!(s.re() > 0.0)) throw DomainError("lambda_apply: requires Re(s) > 0, got " + to_string(s));
  if (basis.size() < f.size()) {
    throw InvalidArgument("lambda_apply: basis of degree " + std::to_string(basis.size() - 1) +
                          " is shorter than the series");
  }
  CompensatedComplexSum sum;
  for (std::size_t n = 0; n < f.size(); ++n) sum += f[n] * basis[n];
  const double bound = coefficient_bound ? *coefficient_bound : fitted_coefficient_bound(f);
  return FunctionalEvaluation{s, sum.value(), lambda_tail_bound(s, f.degree(), bound), f.degree()};
}

template <class T>
FunctionalEvaluation lambda_apply(const BasicSeries<T>& f, FunctionalPoint s,
                                  std::optional<double> coefficient_bound) {
  const auto basis = lambda_basis(s, f.degree());
  return lambda_apply(f, s, std::span<const cplx>(basis), coefficient_bound);
}

cplx approx_reciprocal_s(std::uint64_t n, FunctionalPoint s, const MobiusTable& table) {
  if (n < 2) throw InvalidArgument("approx_reciprocal_s: n must be >= 2");
  if (n > table.limit()) {
    throw OutOfRange("approx_reciprocal_s: n = " + std::to_string(n) + " exceeds table limit " +
                     std::to_string(table.limit()));
  }
  const cplx z = zeta(s).value;
  const cplx sv = s.value();
  // sum mu(k) G_k(s) = -(zeta(s)/s) sum mu(k) (k^{-s} - 1/k)
  CompensatedComplexSum sum;
  for (std::uint64_t k = 2; k <= n; ++k) {
    const int mu = table[k];
    if (mu == 0) continue;
    const double kd = static_cast<double>(k);
    sum += static_cast<double>(mu) * (std::exp(-sv * std::log(kd)) - 1.0 / kd);
  }
  return -(z / sv) * sum.value();
}

double lambda_linearity_check(const ComplexSeries& f, const ComplexSeries& g, cplx a, cplx b,
                              FunctionalPoint s) {
  const ComplexSeries combo = a * f + b * g;
  const auto basis = lambda_basis(s, combo.degree());
  const std::span<const cplx> view(basis);
  const cplx lhs = lambda_apply(combo, s, view, 0.0).value;
  const cplx rhs = a * lambda_apply(f, s, view, 0.0).value + b * lambda_apply(g, s, view, 0.0).value;
  return std::abs(lhs - rhs);
}

template double fitted_coefficient_bound(const BasicSeries<double>&);
template double fitted_coefficient_bound(const BasicSeries<cplx>&);
template FunctionalEvaluation lambda_apply(const BasicSeries<double>&, FunctionalPoint, std::optional<double>);
template FunctionalEvaluation lambda_apply(const BasicSeries<cplx>&, FunctionalPoint, std::optional<double>);
template FunctionalEvaluation lambda_apply(const BasicSeries<double>&, FunctionalPoint, std::span<const cplx>,
                                           std::optional<double>);
template FunctionalEvaluation lambda_apply(const BasicSeries<cplx>&, FunctionalPoint, std::span<const cplx>,
                                           std::optional<double>);

}  // namespace zfhp
