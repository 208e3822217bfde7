#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zfhp/arith.hpp"

namespace zfhp {

/// Taylor coefficients a_0..a_N of an analytic function on the unit disk,
/// truncated at degree N. The degree is explicit: trailing zeros are kept.
template <class T>
class BasicSeries {
 public:
  using value_type = T;

  /// Throws InvalidArgument on an empty vector or a non-finite coefficient.
  explicit BasicSeries(std::vector<T> coeffs);
  BasicSeries(std::initializer_list<T> coeffs) : BasicSeries(std::vector<T>(coeffs)) {}

  static BasicSeries zeros(std::size_t degree) { return BasicSeries(std::vector<T>(degree + 1)); }
  static BasicSeries monomial(std::size_t n, T c = T{1});

  [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] std::span<const T> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] const T& operator[](std::size_t i) const noexcept { return coeffs_[i]; }

  /// Value at z by Horner's rule.
  [[nodiscard]] std::complex<double> evaluate(std::complex<double> z) const noexcept;

  /// Widen to complex coefficients.
  [[nodiscard]] BasicSeries<std::complex<double>> to_complex() const;

  friend bool operator==(const BasicSeries&, const BasicSeries&) = default;

 private:
  std::vector<T> coeffs_;
};

using TruncatedSeries = BasicSeries<double>;
using ComplexSeries = BasicSeries<std::complex<double>>;

// Coefficientwise arithmetic; the result has the larger of the two degrees.
template <class T>
BasicSeries<T> operator+(const BasicSeries<T>& f, const BasicSeries<T>& g);
template <class T>
BasicSeries<T> operator-(const BasicSeries<T>& f, const BasicSeries<T>& g);
template <class T>
BasicSeries<T> operator*(T c, const BasicSeries<T>& f);

/// (I - S) f = (1 - z) f truncated to deg f.
template <class T>
BasicSeries<T> apply_one_minus_shift(const BasicSeries<T>& f);

/// Formal (I - S)^{-1} f = f / (1 - z) truncated to deg f: running sums.
template <class T>
BasicSeries<T> cumulative_sum(const BasicSeries<T>& f);

/// Coefficients of (I - S) h_k = (1/k)[log(1 - z^k) - log(1 - z) - log k]:
/// a_0 = -log(k)/k and a_m = (1/m)(1/k - [k | m]).
TruncatedSeries ims_hk_coeffs(std::uint64_t k, std::size_t degree);

/// h_k(z) = (1/k) (1/(1-z)) log((1 + z + ... + z^{k-1})/k), k >= 2.
TruncatedSeries hk_coeffs(std::uint64_t k, std::size_t degree);

/// Running sum of mu(k) (I - S) h_k for k = 2, 3, ..., advanced in place.
/// Terms are added in increasing k with per-coefficient compensation, so a
/// given (n, degree) always produces the same bits.
class MobiusImsAccumulator {
 public:
  MobiusImsAccumulator(const MobiusTable& table, std::size_t degree);

  /// Adds the terms k = current()+1 .. n. Throws OutOfRange past the table
  /// and InvalidArgument if n < current().
  void advance_to(std::uint64_t n);
  /// Largest k included so far (1 means the sum is still empty).
  [[nodiscard]] std::uint64_t current() const noexcept { return current_; }
  [[nodiscard]] std::size_t degree() const noexcept { return sum_.size() - 1; }
  [[nodiscard]] TruncatedSeries series() const;

 private:
  const MobiusTable* table_;
  std::uint64_t current_ = 1;
  std::vector<double> sum_;
  std::vector<double> comp_;
};

/// sum_{k=2}^{n} mu(k) (I - S) h_k truncated to `degree`.
TruncatedSeries mobius_partial_sum_ims(std::uint64_t n, std::size_t degree, const MobiusTable& table);

/// W_n f(z) = (1 + z + ... + z^{n-1}) f(z^n). The natural degree is
/// n deg f + n - 1; `degree_cap` truncates below that.
template <class T>
BasicSeries<T> wn_operator(const BasicSeries<T>& f, std::uint64_t n,
                           std::optional<std::size_t> degree_cap = std::nullopt);

}  // namespace zfhp
