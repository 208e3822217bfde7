#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zfhp/arith.hpp"
#include "zfhp/series.hpp"
#include "zfhp/special.hpp"

namespace zfhp {

struct FunctionalEvaluation {
  FunctionalPoint s;
  std::complex<double> value;
  double tail_bound = 0.0;
  std::size_t degree_used = 0;
};

/// [Lambda^{(s)}(1), Lambda^{(s)}(z), ..., Lambda^{(s)}(z^N)] = [-1/s, f_1(s), ..., f_N(s)].
std::vector<std::complex<double>> lambda_basis(FunctionalPoint s, std::size_t degree);

/// max over N/2 <= m <= N of m |a_m|: the constant C in |a_m| <= C/m
/// used to model the coefficients past the truncation.
template <class T>
double fitted_coefficient_bound(const BasicSeries<T>& f);

/// Bound on |sum_{n>N} a_n f_n(s)| given |a_n| <= B/n:
/// B (|1-s|/|s|) N^{-Re s}/Re s.
double lambda_tail_bound(FunctionalPoint s, std::size_t degree, double coefficient_bound);

/// Lambda^{(s)} f ~ a_0 (-1/s) + sum_{n=1}^{N} a_n f_n(s), summed in
/// increasing n with compensation. If `coefficient_bound` is absent it is
/// fitted from the series itself; pass 0 for an exact polynomial.
template <class T>
FunctionalEvaluation lambda_apply(const BasicSeries<T>& f, FunctionalPoint s,
                                  std::optional<double> coefficient_bound = std::nullopt);

/// Same, reusing a basis from lambda_basis(s, M) with M >= deg f.
template <class T>
FunctionalEvaluation lambda_apply(const BasicSeries<T>& f, FunctionalPoint s,
                                  std::span<const std::complex<double>> basis,
                                  std::optional<double> coefficient_bound = std::nullopt);

/// sum_{k=2}^{n} mu(k) G_k(s), the candidate approximant to -1/s.
/// Converges for Re(s) > 1; elsewhere the residual is only reported.
std::complex<double> approx_reciprocal_s(std::uint64_t n, FunctionalPoint s, const MobiusTable& table);

/// |Lambda(a f + b g) - a Lambda(f) - b Lambda(g)|.
double lambda_linearity_check(const ComplexSeries& f, const ComplexSeries& g, std::complex<double> a,
                              std::complex<double> b, FunctionalPoint s);

}  // namespace zfhp
