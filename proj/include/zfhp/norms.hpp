#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "zfhp/series.hpp"
#include "zfhp/weights.hpp"

namespace zfhp {

struct LqNormSpec {
  double q;
};
struct WeightedL2NormSpec {
  WeightFamily family;
};
struct HpNormSpec {
  double p;
  std::size_t nodes;
  std::string radius_policy = "boundary";
};

/// Which (quasi-)norm a record was measured in. Validates q, p > 0 and
/// nodes >= 16 and even.
class NormSpec {
 public:
  using Kind = std::variant<LqNormSpec, WeightedL2NormSpec, HpNormSpec>;

  explicit NormSpec(Kind kind);
  static NormSpec lq(double q) { return NormSpec(LqNormSpec{q}); }
  static NormSpec hp(double p, std::size_t nodes) { return NormSpec(HpNormSpec{p, nodes}); }
  static NormSpec weighted_l2(WeightFamily family) { return NormSpec(WeightedL2NormSpec{family}); }

  [[nodiscard]] const Kind& kind() const noexcept { return kind_; }
  [[nodiscard]] std::string name() const;   // "lq", "hp", "weighted_l2"
  [[nodiscard]] std::string param() const;  // "q=1.5", "p=0.5;nodes=8192", family spec

 private:
  Kind kind_;
};

/// (sum |a_n|^q)^{1/q}; a quasi-norm for q < 1. q = +inf gives max |a_n|.
template <class T>
double lq_norm(const BasicSeries<T>& f, double q);

/// (sum |a_n|^2 / w_n^2)^{1/2}.
template <class T>
double weighted_l2_norm(const BasicSeries<T>& f, const WeightFamily& family);

/// f at z_j = r e^{i theta_j}, theta_j = 2 pi (j + 1/2)/nodes, computed by
/// folding the coefficients mod `nodes` and one FFT. z = 1 is never a node.
template <class T>
std::vector<std::complex<double>> circle_values(const BasicSeries<T>& f, std::size_t nodes, double radius = 1.0);

struct HpEstimate {
  double value = 0.0;
  std::size_t nodes = 0;
  bool underresolved = false;  // nodes <= 2 deg f: not exact even for p = 2
};

/// ((1/nodes) sum_j |f(r e^{i theta_j})|^p)^{1/p}; p = +inf gives the max.
template <class T>
double circle_mean(const BasicSeries<T>& f, double p, std::size_t nodes, double radius);

/// H^p (quasi-)norm of a polynomial: the circle mean at r = 1, since the
/// means increase with r and polynomials are continuous on the closed disk.
template <class T>
HpEstimate hp_norm_estimate(const BasicSeries<T>& f, double p, std::size_t nodes);

/// 4 (deg + 1) rounded up to a power of two, at least 16.
std::size_t default_nodes(std::size_t degree);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  [[nodiscard]] bool holds(double abs_tol = 0.0, double rel_tol = 0.0) const noexcept {
    return lhs <= rhs + abs_tol + rel_tol * rhs;
  }
};

/// sum |a_n|/(n+1) <= pi ||f||_1.
template <class T>
InequalityCheck duren_coefficient_check(const BasicSeries<T>& f, std::size_t nodes);

/// ||f||_p <= ||a||_q with 1/p + 1/q = 1, 1 <= q <= 2 (q = 1 means p = inf).
template <class T>
InequalityCheck hardy_from_lq_check(const BasicSeries<T>& f, double q, std::size_t nodes);

/// C_{p,q} = (int_T |1 - z|^{-pq/(p-q)} dm)^{(p-q)/(pq)}, finite iff q < p/(1+p).
double reverse_holder_constant(double p, double q);

/// int_T |1 - z|^a dm = Gamma(1 + a) / Gamma(1 + a/2)^2 for a > -1.
double circle_power_mean(double a);

/// (int_T |h(z)/(1 - z)|^q dm)^{1/q} for 0 < q < 1. Gauss-Legendre panels in
/// u on theta = +-pi u^beta, beta = 2/(1 - q), so nodes cluster at z = 1 where
/// the integrand blows up like |theta|^{-q}; never evaluates at z = 1.
template <class T>
double quotient_quasinorm(const BasicSeries<T>& h, double q, std::size_t nodes);

struct RefinedQuadrature {
  double value = 0.0;
  std::size_t nodes = 0;        // finer count of the last pair compared
  double refinement_rel = 0.0;  // |fine - coarse| / fine for that pair
  bool converged = false;
};

/// quotient_quasinorm with node doubling from `nodes` until two successive
/// counts agree to rel_tol, or max_nodes is reached.
template <class T>
RefinedQuadrature refined_quotient_quasinorm(const BasicSeries<T>& h, double q, std::size_t nodes,
                                             double rel_tol = 1e-4, std::size_t max_nodes = std::size_t{1} << 22);

/// ||h/(1-z)||_q <= C_{p,q} ||h||_p for 0 < q < p/(1+p). The left side comes
/// from refined_quotient_quasinorm started at `nodes`.
template <class T>
InequalityCheck reverse_holder_check(const BasicSeries<T>& h, double p, double q, std::size_t nodes);

}  // namespace zfhp
