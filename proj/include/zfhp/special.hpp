#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace zfhp {

/// A complex parameter s at which the functionals, f_k, G_k and zeta are
/// evaluated. Domain checks happen in the operations, not here.
class FunctionalPoint {
 public:
  constexpr FunctionalPoint(double re, double im = 0.0) noexcept : s_(re, im) {}
  constexpr explicit FunctionalPoint(std::complex<double> s) noexcept : s_(s) {}

  [[nodiscard]] constexpr std::complex<double> value() const noexcept { return s_; }
  [[nodiscard]] constexpr double re() const noexcept { return s_.real(); }
  [[nodiscard]] constexpr double im() const noexcept { return s_.imag(); }
  [[nodiscard]] constexpr FunctionalPoint conj() const noexcept { return FunctionalPoint(re(), -im()); }

  friend constexpr bool operator==(const FunctionalPoint&, const FunctionalPoint&) = default;

 private:
  std::complex<double> s_;
};

/// "re+imi" with shortest round-trip digits, e.g. "0.75+5i".
std::string to_string(const FunctionalPoint& s);

struct ZetaValue {
  std::complex<double> value;
  std::string method;  // "accelerated-eta"
  int terms_used = 0;
};

/// e^z - 1 without cancellation for small |z|.
std::complex<double> expm1(std::complex<double> z);

/// f_k(s) = -(1/s)((k+1)^{1-s} - k^{1-s}), evaluated as
/// -(1/s) k^{1-s} expm1((1-s) log1p(1/k)). Re(s) > 0, k >= 1.
std::complex<double> f_k(std::uint64_t k, FunctionalPoint s);

/// Lambda^{(s)}(1) = -1/s. Re(s) > 0.
std::complex<double> lambda_on_constant(FunctionalPoint s);

/// zeta(s) for Re(s) > 0, s != 1, from the alternating eta series with
/// Chebyshev-polynomial acceleration (Borwein's algorithm 2):
/// zeta(s) = eta(s) / (1 - 2^{1-s}).
ZetaValue zeta(FunctionalPoint s);

/// G_k(s) = -(zeta(s)/s)(k^{-s} - k^{-1}), k >= 2.
std::complex<double> g_k(std::uint64_t k, FunctionalPoint s);

struct MellinStepResult {
  std::complex<double> quadrature;   // adaptive quadrature of both pieces
  std::complex<double> closed_form;  // power-rule antiderivatives
  double quadrature_error = 0.0;     // integrators' own error estimate
};

/// Mellin transform of the step function p_k, which is k on [1/(k+1), 1/k)
/// and -1 on (0, 1/(k+1)). Equals f_k(s). Re(s) > 0, k >= 1.
MellinStepResult mellin_step_pk(std::uint64_t k, FunctionalPoint s);

struct MellinRhoResult {
  std::complex<double> value;  // integral over (truncation, 1)
  double tail_bound = 0.0;     // bound on the omitted (0, truncation]
  std::uint64_t pieces = 0;
};

/// Mellin transform of rho_alpha(x) = rho(alpha/x) - alpha rho(1/x) over
/// (truncation, 1). With y = 1/x the integrand is y^{-s-1} times the
/// piecewise constant alpha*floor(y) - floor(alpha*y), so every piece
/// integrates exactly. |rho_alpha| <= 1 bounds the rest by T^{Re s}/Re s.
MellinRhoResult mellin_rho_alpha(double alpha, FunctionalPoint s, double truncation);

/// Smallest power-of-ten truncation T with T^{Re s}/Re s <= tol.
double rho_truncation_for(FunctionalPoint s, double tol);

struct FkGrowthBracket {
  double c1 = 0.0;  // min_k |f_k(s)| k^{Re s}
  double c2 = 0.0;  // max_k |f_k(s)| k^{Re s}
  double explicit_constant = 0.0;    // |1-s|/|s|
  std::uint64_t bound_violations = 0;  // k with |f_k(s)| > |1-s|/|s| k^{-Re s}
};

/// Scans k = 1..k_max.
FkGrowthBracket fk_growth_bracket(FunctionalPoint s, std::uint64_t k_max);

}  // namespace zfhp
