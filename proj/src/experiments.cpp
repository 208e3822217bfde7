#include "zfhp/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>

#include "zfhp/errors.hpp"
#include "zfhp/format.hpp"
#include "zfhp/functionals.hpp"
#include "zfhp/summation.hpp"

#ifndef ZFHP_VERSION
#define ZFHP_VERSION "unknown"
#endif

namespace zfhp {

using cplx = std::complex<double>;

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  [[nodiscard]] std::int64_t elapsed_ms() const {
    if (!enabled_) return 0;
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

void validate_n_list(std::span<const std::uint64_t> n_list, std::size_t degree, const MobiusTable& table) {
  if (n_list.empty()) throw InvalidArgument("n list is empty");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 2) throw InvalidArgument("every n must be >= 2");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw InvalidArgument("n list must be strictly increasing");
  }
  if (n_list.back() > table.limit()) {
    throw OutOfRange("largest n " + std::to_string(n_list.back()) + " exceeds the Möbius table limit " +
                     std::to_string(table.limit()));
  }
  if (degree < n_list.back()) throw InvalidArgument("coefficient cutoff must be >= every n");
}

void validate_s(FunctionalPoint s) {
  if (s.value() == cplx(1.0, 0.0)) throw PoleError("s = 1 is the pole of zeta");
  if (!(s.re() > 0.5)) {
    throw DomainError("s = " + to_string(s) + " rejected: Lambda^(s) is bounded on H^2(D) only for Re(s) > 1/2");
  }
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string code_version() { return ZFHP_VERSION; }

DivisorBound fit_divisor_bound(const DivisorCountTable& tau, double exponent) {
  if (!(exponent > 0.0 && exponent < 1.0)) throw InvalidArgument("divisor bound exponent must lie in (0, 1)");
  if (tau.limit() < 1) throw InvalidArgument("divisor table is empty");
  double c = 0.0;
  for (std::uint64_t j = 1; j <= tau.limit(); ++j) {
    c = std::max(c, static_cast<double>(tau[j]) / std::pow(static_cast<double>(j), exponent));
  }
  return {c, exponent, tau.limit()};
}

std::optional<double> lq_tail_bound(double q, std::size_t degree, double mobius_sum, const DivisorCountTable& tau,
                                    const DivisorBound& bound) {
  if (!(q > 1.0) || !std::isfinite(q)) throw InvalidArgument("lq_tail_bound: q must be finite and > 1");
  const double decay = q * (1.0 - bound.exponent);
  if (decay <= 1.0) return std::nullopt;
  const double a = std::abs(mobius_sum);
  const std::uint64_t limit = std::max<std::uint64_t>(tau.limit(), degree);
  CompensatedSum sum;
  for (std::uint64_t j = degree + 1; j <= tau.limit(); ++j) {
    sum += std::pow((a + tau[j]) / static_cast<double>(j), q);
  }
  // (a + C x^theta)/x <= (a L^-theta + C) x^(theta - 1) for x >= L, and the
  // sum over j > L is at most the integral from L
  const double big_l = static_cast<double>(limit);
  const double k = a * std::pow(big_l, -bound.exponent) + bound.constant;
  sum += std::pow(k, q) * std::pow(big_l, 1.0 - decay) / (decay - 1.0);
  return std::pow(sum.value(), 1.0 / q);
}

LqConvergence run_lq_convergence(double q, std::span<const std::uint64_t> n_list, std::size_t degree,
                                 const MobiusTable& table, const DivisorCountTable& tau, RunOptions options) {
  if (!(q > 1.0) || !std::isfinite(q)) throw InvalidArgument("lq convergence needs finite q > 1");
  validate_n_list(n_list, degree, table);
  LqConvergence out;
  out.divisor_bound = fit_divisor_bound(tau);
  const NormSpec spec = NormSpec::lq(q);
  const TruncatedSeries target({1.0, -1.0});
  MobiusImsAccumulator acc(table, degree);
  for (const std::uint64_t n : n_list) {
    const Stopwatch watch(options.timing);
    acc.advance_to(n);
    const double value = lq_norm(acc.series() - target, q);
    const double tail = lq_tail_bound(q, degree, mobius_sum_over_k(table, n), tau, out.divisor_bound).value_or(-1.0);
    ConvergenceRecord rec{n, spec, degree, value, std::nullopt, 0};
    if (tail >= 0.0) rec.tail_bound = tail;
    rec.wall_time_ms = watch.elapsed_ms();
    out.records.push_back(std::move(rec));
  }
  return out;
}

std::vector<HpConvergenceRow> run_hp_convergence(double p, std::span<const std::uint64_t> n_list, std::size_t degree,
                                                 std::size_t nodes, const MobiusTable& table, RunOptions options) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("hp convergence needs 0 < p < 1");
  validate_n_list(n_list, degree, table);
  const NormSpec coarse_spec = NormSpec::hp(p, nodes);
  const NormSpec fine_spec = NormSpec::hp(p, 2 * nodes);
  const TruncatedSeries one({1.0});
  MobiusImsAccumulator acc(table, degree);
  std::vector<HpConvergenceRow> rows;
  for (const std::uint64_t n : n_list) {
    const Stopwatch watch(options.timing);
    acc.advance_to(n);
    // (I - S)^{-1} is exact on truncations: coefficient m only sees 0..m
    const TruncatedSeries residual = cumulative_sum(acc.series()) - one;
    const HpEstimate coarse = hp_norm_estimate(residual, p, nodes);
    const std::int64_t coarse_ms = watch.elapsed_ms();
    const HpEstimate fine = hp_norm_estimate(residual, p, 2 * nodes);
    const std::int64_t fine_ms = watch.elapsed_ms();
    const double rel = std::abs(coarse.value - fine.value) / fine.value;
    rows.push_back({ConvergenceRecord{n, coarse_spec, degree, coarse.value, std::nullopt, coarse_ms},
                    ConvergenceRecord{n, fine_spec, degree, fine.value, std::nullopt, fine_ms}, rel,
                    coarse.underresolved});
  }
  return rows;
}

std::vector<ConvergenceRecord> flatten(std::span<const HpConvergenceRow> rows) {
  std::vector<ConvergenceRecord> out;
  for (const auto& row : rows) {
    out.push_back(row.coarse);
    out.push_back(row.fine);
  }
  return out;
}

std::vector<LambdaSweepRow> run_lambda_sweep(std::span<const std::uint64_t> k_list,
                                             std::span<const FunctionalPoint> s_grid, std::size_t degree,
                                             double abs_slack) {
  for (const auto s : s_grid) validate_s(s);
  for (const auto k : k_list) {
    if (k < 2) throw InvalidArgument("lambda sweep needs k >= 2");
  }
  std::vector<TruncatedSeries> hk;
  hk.reserve(k_list.size());
  for (const auto k : k_list) hk.push_back(hk_coeffs(k, degree));
  std::vector<LambdaSweepRow> rows;
  for (std::size_t ik = 0; ik < k_list.size(); ++ik) {
    for (const auto s : s_grid) rows.push_back({k_list[ik], s, 0.0, 0.0, false});
  }
  // one basis per s, reused for every k
  for (std::size_t is = 0; is < s_grid.size(); ++is) {
    const auto basis = lambda_basis(s_grid[is], degree);
    for (std::size_t ik = 0; ik < k_list.size(); ++ik) {
      const FunctionalEvaluation e = lambda_apply(hk[ik], s_grid[is], std::span<const cplx>(basis));
      auto& row = rows[ik * s_grid.size() + is];
      row.residual = std::abs(e.value - g_k(k_list[ik], s_grid[is]));
      row.tail_bound = e.tail_bound;
      row.pass = row.residual <= row.tail_bound + abs_slack;
    }
  }
  return rows;
}

std::vector<ApproxRow> run_pointwise_approx(std::span<const FunctionalPoint> s_grid,
                                            std::span<const std::uint64_t> n_list, const MobiusTable& table) {
  for (const auto s : s_grid) validate_s(s);
  std::vector<ApproxRow> rows;
  for (const auto s : s_grid) {
    for (const auto n : n_list) {
      const cplx v = approx_reciprocal_s(n, s, table);
      rows.push_back({s, n, v, std::abs(v + 1.0 / s.value())});
    }
  }
  return rows;
}

std::vector<MellinRow> run_mellin_verify(std::span<const std::uint64_t> k_list,
                                         std::span<const FunctionalPoint> s_grid, double tol) {
  std::vector<MellinRow> rows;
  for (const auto k : k_list) {
    for (const auto s : s_grid) {
      const MellinStepResult m = mellin_step_pk(k, s);
      const cplx fk = f_k(k, s);
      const double diff = std::abs(m.quadrature - fk);
      rows.push_back({k, s, m.quadrature, fk, diff, m.quadrature_error, diff <= tol});
    }
  }
  return rows;
}

std::vector<MellinRhoRow> run_mellin_rho(std::span<const double> alphas, std::span<const FunctionalPoint> s_grid,
                                         double tol) {
  std::vector<MellinRhoRow> rows;
  for (const double alpha : alphas) {
    for (const auto s : s_grid) {
      const MellinRhoResult m = mellin_rho_alpha(alpha, s, rho_truncation_for(s, tol / 10.0));
      const cplx sv = s.value();
      const cplx identity = zeta(s).value / sv * (alpha - std::pow(alpha, sv));
      const double diff = std::abs(m.value - identity);
      rows.push_back({alpha, s, m.value, identity, diff, m.tail_bound, diff <= tol});
    }
  }
  return rows;
}

std::vector<ComplexSeries> random_polynomials(std::uint64_t seed, std::size_t count, std::size_t max_degree) {
  if (max_degree < 1) throw InvalidArgument("random polynomials need max_degree >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> degree_dist(1, max_degree);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<ComplexSeries> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<cplx> c(degree_dist(rng) + 1);
    for (auto& a : c) {
      const double re = coeff(rng);
      a = cplx(re, coeff(rng));
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<InequalityRow> run_inequality_battery(std::uint64_t seed, std::size_t count, std::size_t max_degree,
                                                  double rel_tol) {
  const auto polys = random_polynomials(seed, count, max_degree);
  std::vector<InequalityRow> rows;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& f = polys[i];
    const std::size_t nodes = 16 * default_nodes(f.degree());
    auto push = [&](std::string name, const InequalityCheck& c) {
      rows.push_back({i, f.degree(), std::move(name), c.lhs, c.rhs, c.holds(0.0, rel_tol)});
    };
    push("duren", duren_coefficient_check(f, nodes));
    for (const double q : {1.0, 1.5, 2.0}) push("hardy:q=" + format_double(q), hardy_from_lq_check(f, q, nodes));
    for (const auto& [p, q] : {std::pair{1.0, 0.4}, std::pair{2.0, 0.5}}) {
      push("reverse_holder:p=" + format_double(p) + ";q=" + format_double(q), reverse_holder_check(f, p, q, nodes));
    }
    const double h2 = hp_norm_estimate(f, 2.0, nodes).value;
    const double l2 = lq_norm(f, 2.0);
    rows.push_back({i, f.degree(), "parseval", h2, l2, std::abs(h2 - l2) <= 1e-12 * l2});
  }
  return rows;
}

// ---- CSV ----

namespace {

std::string opt(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

}  // namespace

void write_csv(std::ostream& out, std::span<const ConvergenceRecord> rows) {
  out << "n,norm_kind,param,coeff_cutoff,value,tail_bound,wall_time_ms\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.norm_kind.name() << ',' << r.norm_kind.param() << ',' << r.coeff_cutoff << ','
        << format_double(r.value) << ',' << opt(r.tail_bound) << ',' << r.wall_time_ms << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const LambdaSweepRow> rows) {
  out << "k,s_re,s_im,residual,tail_bound,pass\n";
  for (const auto& r : rows) {
    out << r.k << ',' << format_double(r.s.re()) << ',' << format_double(r.s.im()) << ','
        << format_double(r.residual) << ',' << format_double(r.tail_bound) << ',' << flag(r.pass) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const ApproxRow> rows) {
  out << "s_re,s_im,n,approx_re,approx_im,residual\n";
  for (const auto& r : rows) {
    out << format_double(r.s.re()) << ',' << format_double(r.s.im()) << ',' << r.n << ','
        << format_double(r.value.real()) << ',' << format_double(r.value.imag()) << ','
        << format_double(r.residual) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const MellinRow> rows) {
  out << "k,s_re,s_im,quadrature_re,quadrature_im,fk_re,fk_im,abs_diff,quadrature_error,pass\n";
  for (const auto& r : rows) {
    out << r.k << ',' << format_double(r.s.re()) << ',' << format_double(r.s.im()) << ','
        << format_double(r.quadrature.real()) << ',' << format_double(r.quadrature.imag()) << ','
        << format_double(r.fk.real()) << ',' << format_double(r.fk.imag()) << ',' << format_double(r.abs_diff)
        << ',' << format_double(r.quadrature_error) << ',' << flag(r.pass) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const MellinRhoRow> rows) {
  out << "alpha,s_re,s_im,value_re,value_im,identity_re,identity_im,abs_diff,tail_bound,pass\n";
  for (const auto& r : rows) {
    out << format_double(r.alpha) << ',' << format_double(r.s.re()) << ',' << format_double(r.s.im()) << ','
        << format_double(r.value.real()) << ',' << format_double(r.value.imag()) << ','
        << format_double(r.identity.real()) << ',' << format_double(r.identity.imag()) << ','
        << format_double(r.abs_diff) << ',' << format_double(r.tail_bound) << ',' << flag(r.pass) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const ClassificationResult> rows) {
  out << "family,params,c4_r,rm_bounded,strip\n";
  for (const auto& r : rows) {
    out << r.family.name() << ',' << r.family.params() << ',' << opt(r.c4_halfplane) << ','
        << flag(r.easy_c3_bounded_rm) << ',' << to_string(r.strip) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const InequalityRow> rows) {
  out << "poly,degree,check,lhs,rhs,holds\n";
  for (const auto& r : rows) {
    out << r.poly << ',' << r.degree << ',' << r.check << ',' << format_double(r.lhs) << ','
        << format_double(r.rhs) << ',' << flag(r.holds) << '\n';
  }
}

// ---- checks ----

CheckOutcome check_trend(std::span<const ConvergenceRecord> records, double max_ratio) {
  CheckOutcome out{"trend", true, ""};
  for (std::size_t i = 1; i < records.size(); ++i) {
    const double ratio = records[i].value / records[i - 1].value;
    out.detail += (i > 1 ? " " : "") + std::string("n=") + std::to_string(records[i].n) +
                  ":ratio=" + format_double(ratio);
    if (!(records[i].value < max_ratio * records[i - 1].value)) out.passed = false;
  }
  return out;
}

CheckOutcome check_refinement(std::span<const HpConvergenceRow> rows, double rel) {
  CheckOutcome out{"refinement", true, ""};
  for (const auto& r : rows) {
    if (!out.detail.empty()) out.detail += ' ';
    out.detail += "n=" + std::to_string(r.coarse.n) + ":rel=" + format_double(r.refinement_rel);
    if (!(r.refinement_rel <= rel)) out.passed = false;
  }
  return out;
}

CheckOutcome check_lambda(std::span<const LambdaSweepRow> rows) {
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; });
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.residual);
  return {"lambda", failed == 0,
          std::to_string(failed) + " of " + std::to_string(rows.size()) + " failed; max residual " +
              format_double(worst)};
}

CheckOutcome check_approx(std::span<const ApproxRow> rows) {
  CheckOutcome out{"approx", true, ""};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].s == rows[i - 1].s) || rows[i].s.re() <= 1.0) continue;
    if (!(rows[i].residual < rows[i - 1].residual)) {
      out.passed = false;
      out.detail += "s=" + to_string(rows[i].s) + " n=" + std::to_string(rows[i].n) + " not decreasing; ";
    }
  }
  if (out.detail.empty()) out.detail = "residuals decrease for every Re(s) > 1";
  return out;
}

CheckOutcome check_mellin(std::span<const MellinRow> rows) {
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; });
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.abs_diff);
  return {"mellin", failed == 0,
          std::to_string(failed) + " of " + std::to_string(rows.size()) + " failed; max diff " +
              format_double(worst)};
}

CheckOutcome check_mellin_rho(std::span<const MellinRhoRow> rows) {
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; });
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.abs_diff);
  return {"mellin_rho", failed == 0,
          std::to_string(failed) + " of " + std::to_string(rows.size()) + " failed; max diff " +
              format_double(worst)};
}

CheckOutcome check_inequalities(std::span<const InequalityRow> rows) {
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.holds; });
  return {"inequalities", failed == 0, std::to_string(failed) + " of " + std::to_string(rows.size()) + " failed"};
}

CheckOutcome check_table1(std::span<const ClassificationResult> rows) {
  auto expected = [](WeightKind kind) {
    switch (kind) {
      case WeightKind::Identity:
      case WeightKind::Power:
      case WeightKind::PowerLog: return Strip::Right;
      case WeightKind::Geometric:
      case WeightKind::SuperExp: return Strip::Left;
      default: return Strip::None;
    }
  };
  CheckOutcome out{"table1", true, ""};
  for (const auto& r : rows) {
    if (r.strip != expected(r.family.kind())) {
      out.passed = false;
      out.detail += r.family.spec() + " classified " + to_string(r.strip) + "; ";
    }
  }
  if (out.passed) out.detail = std::to_string(rows.size()) + " rows match";
  return out;
}

}  // namespace zfhp
