// zfhp: command-line front end. Exit codes: 0 ok, 2 bad arguments,
// 3 domain error, 4 a --check assertion failed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zfhp/arith.hpp"
#include "zfhp/errors.hpp"
#include "zfhp/experiments.hpp"
#include "zfhp/format.hpp"
#include "zfhp/parse.hpp"
#include "zfhp/special.hpp"
#include "zfhp/weights.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCheck = 4;

using namespace zfhp;

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw InvalidArgument("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

template <class Rows>
void emit(const std::string& path, const Rows& rows) {
  Output out(path);
  write_csv(out.stream(), std::span(rows));
}

int report(const std::vector<CheckOutcome>& checks) {
  bool ok = true;
  for (const auto& c : checks) {
    std::cerr << "check " << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
    ok = ok && c.passed;
  }
  return ok ? 0 : kExitCheck;
}

std::uint64_t max_of(const std::vector<std::uint64_t>& v) {
  if (v.empty()) throw InvalidArgument("empty list");
  return *std::max_element(v.begin(), v.end());
}

struct ConvergenceArgs {
  std::string space;
  double q = 0.0;
  double p = 0.0;
  std::string n = "10,100,1000";
  std::size_t coeff_cutoff = 100000;
  std::uint64_t mobius_limit = 0;
  std::uint64_t divisor_limit = 0;
  std::size_t nodes = 8192;
  std::string out;
  bool check = false;
  bool no_timing = false;
  Thresholds thresholds;
};

int run_convergence(const ConvergenceArgs& a) {
  const auto n_list = parse_index_list(a.n);
  const auto table = build_mobius(a.mobius_limit ? a.mobius_limit : max_of(n_list));
  const RunOptions options{!a.no_timing};
  std::vector<CheckOutcome> checks;
  if (a.space == "lq") {
    const auto tau = build_divisor_counts(a.divisor_limit ? a.divisor_limit : 4 * std::max<std::size_t>(a.coeff_cutoff, 1));
    const auto res = run_lq_convergence(a.q, n_list, a.coeff_cutoff, table, tau, options);
    std::cerr << "tail bound uses tau(j) <= C j^" << format_double(res.divisor_bound.exponent)
              << ", C = " << format_double(res.divisor_bound.constant) << " (fitted over j <= "
              << res.divisor_bound.table_limit << ")\n";
    emit(a.out, res.records);
    checks.push_back(check_trend(res.records, a.thresholds.max_decade_ratio));
  } else {
    const auto rows = run_hp_convergence(a.p, n_list, a.coeff_cutoff, a.nodes, table, options);
    if (!rows.empty() && rows.front().underresolved) {
      std::cerr << "warning: nodes <= 2 * coeff-cutoff, the quadrature does not resolve the polynomial exactly\n";
    }
    emit(a.out, flatten(rows));
    std::vector<ConvergenceRecord> coarse;
    for (const auto& r : rows) coarse.push_back(r.coarse);
    checks.push_back(check_trend(coarse, a.thresholds.max_decade_ratio));
    checks.push_back(check_refinement(rows, a.thresholds.refinement_rel));
  }
  return a.check ? report(checks) : 0;
}

int run_manifest_file(const std::string& path, const std::string& out_dir, bool check) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read manifest '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto manifests = parse_manifests(buffer.str());
  std::filesystem::create_directories(out_dir);
  std::vector<CheckOutcome> checks;
  for (const auto& m : manifests) {
    if (!m.code_version.empty() && m.code_version != code_version()) {
      std::cerr << "warning: manifest " << m.id << " was written for version " << m.code_version
                << ", running " << code_version() << "\n";
    }
    const ExperimentOutput result = run_experiment(m);
    const auto base = std::filesystem::path(out_dir) / m.id;
    std::ofstream(base.string() + ".csv", std::ios::binary) << result.csv;
    std::ofstream(base.string() + ".json", std::ios::binary) << manifest_to_json(m, result.notes);
    std::cerr << m.id << ": wrote " << base.string() << ".csv\n";
    for (auto c : result.checks) {
      c.name = m.id + "/" + c.name;
      checks.push_back(std::move(c));
    }
  }
  return check ? report(checks) : 0;
}

void add_check_flag(CLI::App* cmd, bool& check) {
  cmd->add_flag("--check", check, "Assert the expected behaviour; exit 4 on failure");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments with h_k, Lambda^(s) and weighted spaces of analytic functions"};
  app.set_version_flag("--version", zfhp::code_version());
  app.require_subcommand(1);

  // convergence
  ConvergenceArgs conv;
  auto* c = app.add_subcommand("convergence", "Möbius partial sums against 1 - z (lq) or 1 (hp)");
  c->add_option("--space", conv.space, "lq or hp")->required()->check(CLI::IsMember({"lq", "hp"}));
  c->add_option("--q", conv.q, "lq exponent, q > 1");
  c->add_option("--p", conv.p, "hp exponent, 0 < p < 1");
  c->add_option("--n", conv.n, "Truncations, e.g. 10,100,1000")->capture_default_str();
  c->add_option("--coeff-cutoff", conv.coeff_cutoff, "Series degree N")->capture_default_str();
  c->add_option("--mobius-limit", conv.mobius_limit, "Möbius table size (default: largest n)");
  c->add_option("--divisor-limit", conv.divisor_limit, "Divisor table size for the lq tail (default: 4N)");
  c->add_option("--nodes", conv.nodes, "hp quadrature nodes")->capture_default_str();
  c->add_option("--max-decade-ratio", conv.thresholds.max_decade_ratio, "Trend threshold for --check")
      ->capture_default_str();
  c->add_option("--refinement-rel", conv.thresholds.refinement_rel, "nodes vs 2*nodes tolerance for --check")
      ->capture_default_str();
  c->add_option("--out", conv.out, "CSV path (default: stdout)");
  c->add_flag("--no-timing", conv.no_timing, "Write 0 in wall_time_ms");
  add_check_flag(c, conv.check);

  // lambda
  std::string lambda_k = "2..10";
  std::string lambda_grid = "0.6,0.75,1.5,2 x 0,1,5";
  std::size_t lambda_cutoff = 100000;
  std::string lambda_out;
  bool lambda_check = false;
  auto* l = app.add_subcommand("lambda", "Lambda^(s)(h_k) against G_k(s)");
  l->add_option("--k", lambda_k, "k values, e.g. 2..10")->capture_default_str();
  l->add_option("--s-grid", lambda_grid, "\"RE,... x IM,...\" or a list of complex s")->capture_default_str();
  l->add_option("--coeff-cutoff", lambda_cutoff, "Series degree N")->capture_default_str();
  l->add_option("--out", lambda_out, "CSV path (default: stdout)");
  add_check_flag(l, lambda_check);

  // approx
  std::string approx_s = "2+0i";
  std::string approx_n = "100,10000,1000000";
  std::uint64_t approx_limit = 0;
  std::string approx_out;
  bool approx_check = false;
  auto* ap = app.add_subcommand("approx", "Pointwise approximation of -1/s by sum mu(k) G_k(s)");
  ap->add_option("--s", approx_s, "Comma-separated complex s")->capture_default_str();
  ap->add_option("--n", approx_n, "Truncations")->capture_default_str();
  ap->add_option("--mobius-limit", approx_limit, "Möbius table size (default: largest n)");
  ap->add_option("--out", approx_out, "CSV path (default: stdout)");
  add_check_flag(ap, approx_check);

  // weights
  auto* w = app.add_subcommand("weights", "Weight-family classification");
  w->require_subcommand(1);
  std::vector<std::string> classify_family;
  std::string classify_out;
  bool classify_check = false;
  auto* wc = w->add_subcommand("classify", "Classify one or more families");
  wc->add_option("--family", classify_family, "identity | power:A | powerlog:A,B | quasiexp:A | stretchedexp:A | "
                                             "geometric:EPS | superexp:A")
      ->required()
      ->delimiter(';');
  wc->add_option("--out", classify_out, "CSV path (default: stdout)");
  add_check_flag(wc, classify_check);
  std::string table_out;
  bool table_check = false;
  auto* wt = w->add_subcommand("table1", "Classify the seven representative families");
  wt->add_option("--out", table_out, "CSV path (default: stdout)");
  add_check_flag(wt, table_check);
  std::string probe_family;
  double probe_r = 0.75;
  std::string probe_sub = "all";
  std::uint64_t probe_count = 100000;
  std::string probe_out;
  auto* wp = w->add_subcommand("probe", "Trace w_n / n^(r - 1/2) along a subsequence");
  wp->add_option("--family", probe_family, "Weight family")->required();
  wp->add_option("--r", probe_r, "r in (1/2, 1)")->capture_default_str();
  wp->add_option("--subsequence", probe_sub, "all | primes | ap:START,STEP")->capture_default_str();
  wp->add_option("--count", probe_count, "Number of indices")->capture_default_str();
  wp->add_option("--out", probe_out, "Trace CSV path (default: summary only)");

  // mellin
  auto* me = app.add_subcommand("mellin", "Mellin transform checks");
  me->require_subcommand(1);
  std::string mellin_k = "1..10";
  std::string mellin_s = "2+1i";
  double mellin_tol = 1e-8;
  std::string mellin_out;
  bool mellin_check = false;
  auto* mv = me->add_subcommand("verify", "Quadrature of the step functions p_k against f_k(s)");
  mv->add_option("--k", mellin_k, "k values")->capture_default_str();
  mv->add_option("--s", mellin_s, "Comma-separated complex s")->capture_default_str();
  mv->add_option("--tol", mellin_tol, "Absolute tolerance")->capture_default_str();
  mv->add_option("--out", mellin_out, "CSV path (default: stdout)");
  add_check_flag(mv, mellin_check);
  std::string rho_alpha = "0.25,0.5,0.75";
  std::string rho_s = "2,3,2+1i";
  double rho_tol = 1e-6;
  std::string rho_out;
  bool rho_check = false;
  auto* mr = me->add_subcommand("rho", "Mellin transform of rho_alpha against (zeta(s)/s)(alpha - alpha^s)");
  mr->add_option("--alpha", rho_alpha, "alpha values in (0, 1)")->capture_default_str();
  mr->add_option("--s", rho_s, "Comma-separated complex s")->capture_default_str();
  mr->add_option("--tol", rho_tol, "Absolute tolerance")->capture_default_str();
  mr->add_option("--out", rho_out, "CSV path (default: stdout)");
  add_check_flag(mr, rho_check);

  // zeta
  std::string zeta_s;
  auto* z = app.add_subcommand("zeta", "Riemann zeta for Re(s) > 0, s != 1");
  z->add_option("--s", zeta_s, "Comma-separated complex s")->required();

  // inequalities
  std::uint64_t ineq_seed = 0;
  std::size_t ineq_count = 100;
  std::size_t ineq_degree = 64;
  std::string ineq_out;
  bool ineq_check = false;
  auto* iq = app.add_subcommand("inequalities", "Norm inequalities on seeded random polynomials");
  iq->add_option("--seed", ineq_seed, "RNG seed")->capture_default_str();
  iq->add_option("--count", ineq_count, "Number of polynomials")->capture_default_str();
  iq->add_option("--max-degree", ineq_degree, "Largest degree")->capture_default_str();
  iq->add_option("--out", ineq_out, "CSV path (default: stdout)");
  add_check_flag(iq, ineq_check);

  // run
  std::string manifest_path;
  std::string out_dir = ".";
  bool run_check = false;
  auto* r = app.add_subcommand("run", "Run experiments from a JSON manifest");
  r->add_option("--manifest", manifest_path, "Manifest path")->required();
  r->add_option("--out-dir", out_dir, "Directory for <id>.csv and <id>.json")->capture_default_str();
  add_check_flag(r, run_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*c) {
      if (conv.space == "lq" && c->count("--q") == 0) throw InvalidArgument("--space lq needs --q");
      if (conv.space == "hp" && c->count("--p") == 0) throw InvalidArgument("--space hp needs --p");
      return run_convergence(conv);
    }
    if (*l) {
      const auto rows =
          run_lambda_sweep(parse_index_list(lambda_k), parse_s_grid(lambda_grid), lambda_cutoff);
      emit(lambda_out, rows);
      return lambda_check ? report({check_lambda(rows)}) : 0;
    }
    if (*ap) {
      const auto n_list = parse_index_list(approx_n);
      const auto table = build_mobius(approx_limit ? approx_limit : max_of(n_list));
      const auto rows = run_pointwise_approx(parse_point_list(approx_s), n_list, table);
      emit(approx_out, rows);
      return approx_check ? report({check_approx(rows)}) : 0;
    }
    if (*wc || *wt) {
      std::vector<ClassificationResult> rows;
      if (*wc) {
        for (const auto& f : classify_family) rows.push_back(classify(WeightFamily::parse(f)));
      } else {
        for (const auto& f : table1_families()) rows.push_back(classify(f));
      }
      emit(*wc ? classify_out : table_out, rows);
      const bool check = *wc ? classify_check : table_check;
      return check ? report({check_table1(rows)}) : 0;
    }
    if (*wp) {
      const auto family = WeightFamily::parse(probe_family);
      const auto indices = subsequence_indices(probe_sub, probe_count);
      const ProbeResult res = extremal_probe(family, probe_r, indices);
      std::cout << "family,params,r,subsequence,count,running_min,running_max\n"
                << family.name() << ',' << family.params() << ',' << format_double(probe_r) << ',' << probe_sub
                << ',' << indices.size() << ',' << format_double(res.running_min) << ','
                << format_double(res.running_max) << '\n';
      if (!probe_out.empty()) {
        Output out(probe_out);
        out.stream() << "i,n,ratio\n";
        for (std::size_t i = 0; i < indices.size(); ++i) {
          out.stream() << i << ',' << indices[i] << ',' << format_double(res.trace[i]) << '\n';
        }
      }
      return 0;
    }
    if (*mv) {
      const auto rows = run_mellin_verify(parse_index_list(mellin_k), parse_point_list(mellin_s), mellin_tol);
      emit(mellin_out, rows);
      return mellin_check ? report({check_mellin(rows)}) : 0;
    }
    if (*mr) {
      const auto rows = run_mellin_rho(parse_real_list(rho_alpha), parse_point_list(rho_s), rho_tol);
      emit(rho_out, rows);
      return rho_check ? report({check_mellin_rho(rows)}) : 0;
    }
    if (*z) {
      std::vector<std::pair<FunctionalPoint, ZetaValue>> values;
      for (const auto s : parse_point_list(zeta_s)) values.emplace_back(s, zeta(s));
      std::cout << "s_re,s_im,zeta_re,zeta_im,method,terms_used\n";
      for (const auto& [s, v] : values) {
        std::cout << format_double(s.re()) << ',' << format_double(s.im()) << ','
                  << format_double(v.value.real()) << ',' << format_double(v.value.imag()) << ',' << v.method
                  << ',' << v.terms_used << '\n';
      }
      return 0;
    }
    if (*iq) {
      const auto rows = run_inequality_battery(ineq_seed, ineq_count, ineq_degree);
      emit(ineq_out, rows);
      return ineq_check ? report({check_inequalities(rows)}) : 0;
    }
    if (*r) return run_manifest_file(manifest_path, out_dir, run_check);
  } catch (const zfhp::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
