#include "zfhp/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zfhp/errors.hpp"
#include "zfhp/summation.hpp"

namespace zfhp {

namespace {

bool is_finite(double x) { return std::isfinite(x); }
bool is_finite(std::complex<double> z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

template <class T>
BasicSeries<T>::BasicSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("series needs at least one coefficient");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!is_finite(coeffs_[i])) {
      throw InvalidArgument("series coefficient " + std::to_string(i) + " is not finite");
    }
  }
}

template <class T>
BasicSeries<T> BasicSeries<T>::monomial(std::size_t n, T c) {
  std::vector<T> v(n + 1);
  v[n] = c;
  return BasicSeries(std::move(v));
}

template <class T>
std::complex<double> BasicSeries<T>::evaluate(std::complex<double> z) const noexcept {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

template <class T>
BasicSeries<std::complex<double>> BasicSeries<T>::to_complex() const {
  return BasicSeries<std::complex<double>>(
      std::vector<std::complex<double>>(coeffs_.begin(), coeffs_.end()));
}

template <class T>
BasicSeries<T> operator+(const BasicSeries<T>& f, const BasicSeries<T>& g) {
  std::vector<T> out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] += g[i];
  return BasicSeries<T>(std::move(out));
}

template <class T>
BasicSeries<T> operator-(const BasicSeries<T>& f, const BasicSeries<T>& g) {
  std::vector<T> out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] -= g[i];
  return BasicSeries<T>(std::move(out));
}

template <class T>
BasicSeries<T> operator*(T c, const BasicSeries<T>& f) {
  std::vector<T> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : out) a *= c;
  return BasicSeries<T>(std::move(out));
}

template <class T>
BasicSeries<T> apply_one_minus_shift(const BasicSeries<T>& f) {
  std::vector<T> out(f.size());
  out[0] = f[0];
  for (std::size_t m = 1; m < f.size(); ++m) out[m] = f[m] - f[m - 1];
  return BasicSeries<T>(std::move(out));
}

template <class T>
BasicSeries<T> cumulative_sum(const BasicSeries<T>& f) {
  std::vector<T> out(f.size());
  if constexpr (std::is_same_v<T, double>) {
    CompensatedSum acc;
    for (std::size_t m = 0; m < f.size(); ++m) {
      acc += f[m];
      out[m] = acc.value();
    }
  } else {
    CompensatedComplexSum acc;
    for (std::size_t m = 0; m < f.size(); ++m) {
      acc += f[m];
      out[m] = acc.value();
    }
  }
  return BasicSeries<T>(std::move(out));
}

namespace {

void require_k(std::uint64_t k, const char* who) {
  if (k < 2) throw InvalidArgument(std::string(who) + ": k must be >= 2, got " + std::to_string(k));
}

}  // namespace

TruncatedSeries ims_hk_coeffs(std::uint64_t k, std::size_t degree) {
  require_k(k, "ims_hk_coeffs");
  const double kd = static_cast<double>(k);
  const double inv_k = 1.0 / kd;
  std::vector<double> a(degree + 1);
  a[0] = -std::log(kd) / kd;
  std::uint64_t phase = 0;  // m mod k
  for (std::size_t m = 1; m <= degree; ++m) {
    if (++phase == k) phase = 0;
    a[m] = (inv_k - (phase == 0 ? 1.0 : 0.0)) / static_cast<double>(m);
  }
  return TruncatedSeries(std::move(a));
}

TruncatedSeries hk_coeffs(std::uint64_t k, std::size_t degree) {
  require_k(k, "hk_coeffs");
  return cumulative_sum(ims_hk_coeffs(k, degree));
}

MobiusImsAccumulator::MobiusImsAccumulator(const MobiusTable& table, std::size_t degree)
    : table_(&table), sum_(degree + 1, 0.0), comp_(degree + 1, 0.0) {}

void MobiusImsAccumulator::advance_to(std::uint64_t n) {
  if (n < current_) {
    throw InvalidArgument("MobiusImsAccumulator: cannot go back from " + std::to_string(current_) +
                          " to " + std::to_string(n));
  }
  if (n > table_->limit()) {
    throw OutOfRange("Mobius partial sum up to " + std::to_string(n) + " exceeds table limit " +
                     std::to_string(table_->limit()));
  }
  const std::size_t degree = sum_.size() - 1;
  auto add = [this](std::size_t m, double x) {
    double& s = sum_[m];
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      comp_[m] += (s - t) + x;
    } else {
      comp_[m] += (x - t) + s;
    }
    s = t;
  };
  for (std::uint64_t k = current_ + 1; k <= n; ++k) {
    const int mu = (*table_)[k];
    if (mu == 0) continue;
    const double kd = static_cast<double>(k);
    const double inv_k = 1.0 / kd;
    add(0, mu * (-std::log(kd) / kd));
    std::uint64_t phase = 0;
    for (std::size_t m = 1; m <= degree; ++m) {
      if (++phase == k) phase = 0;
      add(m, mu * ((inv_k - (phase == 0 ? 1.0 : 0.0)) / static_cast<double>(m)));
    }
  }
  current_ = n;
}

TruncatedSeries MobiusImsAccumulator::series() const {
  std::vector<double> out(sum_.size());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = sum_[m] + comp_[m];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries mobius_partial_sum_ims(std::uint64_t n, std::size_t degree, const MobiusTable& table) {
  if (n < 2) throw InvalidArgument("mobius_partial_sum_ims: n must be >= 2");
  MobiusImsAccumulator acc(table, degree);
  acc.advance_to(n);
  return acc.series();
}

template <class T>
BasicSeries<T> wn_operator(const BasicSeries<T>& f, std::uint64_t n, std::optional<std::size_t> degree_cap) {
  if (n == 0) throw InvalidArgument("wn_operator: n must be >= 1");
  std::size_t degree = n * f.degree() + n - 1;
  if (degree_cap) degree = std::min(degree, *degree_cap);
  std::vector<T> out(degree + 1);
  // (1 + z + ... + z^{n-1}) * sum_j a_j z^{nj}
  for (std::size_t j = 0; j < f.size(); ++j) {
    const std::size_t base = n * j;
    if (base > degree) break;
    for (std::uint64_t i = 0; i < n && base + i <= degree; ++i) out[base + i] += f[j];
  }
  return BasicSeries<T>(std::move(out));
}

#define ZFHP_INSTANTIATE_SERIES(T)                                                            \
  template class BasicSeries<T>;                                                              \
  template BasicSeries<T> operator+(const BasicSeries<T>&, const BasicSeries<T>&);            \
  template BasicSeries<T> operator-(const BasicSeries<T>&, const BasicSeries<T>&);            \
  template BasicSeries<T> operator*(T, const BasicSeries<T>&);                                \
  template BasicSeries<T> apply_one_minus_shift(const BasicSeries<T>&);                       \
  template BasicSeries<T> cumulative_sum(const BasicSeries<T>&);                              \
  template BasicSeries<T> wn_operator(const BasicSeries<T>&, std::uint64_t, std::optional<std::size_t>);

ZFHP_INSTANTIATE_SERIES(double)
ZFHP_INSTANTIATE_SERIES(std::complex<double>)

#undef ZFHP_INSTANTIATE_SERIES

}  // namespace zfhp
