#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zfhp/errors.hpp"
#include "zfhp/experiments.hpp"
#include "zfhp/format.hpp"
#include "zfhp/parse.hpp"

namespace zfhp {

using nlohmann::ordered_json;

namespace {

struct KindSpec {
  std::set<std::string> allowed;
  std::set<std::string> required;
  bool needs_s_grid = false;
};

const std::map<std::string, KindSpec>& kinds() {
  static const std::map<std::string, KindSpec> table = {
      {"lq_convergence", {{"q", "n", "coeff_cutoff", "mobius_limit", "divisor_limit"}, {"q", "n"}, false}},
      {"hp_convergence", {{"p", "n", "coeff_cutoff", "nodes", "mobius_limit"}, {"p", "n"}, false}},
      {"lambda_sweep", {{"k", "coeff_cutoff"}, {"k"}, true}},
      {"pointwise_approx", {{"n", "mobius_limit"}, {"n"}, true}},
      {"mellin_verify", {{"k", "tol"}, {"k"}, true}},
      {"mellin_rho", {{"alpha", "tol"}, {"alpha"}, true}},
      {"weights_table1", {{}, {}, false}},
      {"weights_classify", {{"family"}, {"family"}, false}},
      {"inequalities", {{"count", "max_degree"}, {}, false}},
  };
  return table;
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_float()) return format_double(v.get<double>());
  throw InvalidArgument("manifest parameter values must be strings, numbers or arrays of them");
}

std::string param_text(const std::string& key, const ordered_json& v) {
  if (!v.is_array()) return scalar_text(v);
  // family specs contain commas themselves
  const char sep = key == "family" ? ';' : ',';
  std::string out;
  for (const auto& item : v) {
    if (!out.empty()) out += sep;
    out += scalar_text(item);
  }
  return out;
}

double number_field(const ordered_json& v, const std::string& name) {
  if (!v.is_number()) throw InvalidArgument("manifest threshold '" + name + "' must be a number");
  return v.get<double>();
}

Thresholds parse_thresholds(const ordered_json& j) {
  Thresholds t;
  if (!j.is_object()) throw InvalidArgument("manifest 'thresholds' must be an object");
  const std::map<std::string, double*> fields = {
      {"max_decade_ratio", &t.max_decade_ratio}, {"refinement_rel", &t.refinement_rel},
      {"lambda_slack", &t.lambda_slack},         {"mellin_tol", &t.mellin_tol},
      {"rho_tol", &t.rho_tol},                   {"inequality_rel", &t.inequality_rel},
  };
  for (const auto& [key, value] : j.items()) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw InvalidArgument("unknown threshold '" + key + "'");
    *it->second = number_field(value, key);
  }
  return t;
}

ExperimentManifest parse_one(const ordered_json& j) {
  if (!j.is_object()) throw InvalidArgument("a manifest must be a JSON object");
  static const std::set<std::string> top = {"id",     "kind",         "params", "seed",
                                            "s_grid", "code_version", "timing", "thresholds"};
  for (const auto& [key, value] : j.items()) {
    if (!top.contains(key)) throw InvalidArgument("unknown manifest key '" + key + "'");
  }
  ExperimentManifest m;
  if (!j.contains("id") || !j["id"].is_string()) throw InvalidArgument("manifest needs a string 'id'");
  if (!j.contains("kind") || !j["kind"].is_string()) throw InvalidArgument("manifest needs a string 'kind'");
  m.id = j["id"].get<std::string>();
  m.kind = j["kind"].get<std::string>();
  if (m.id.empty() || m.id.find_first_of("/\\") != std::string::npos) {
    throw InvalidArgument("manifest id must be non-empty and contain no path separators");
  }
  const auto kind = kinds().find(m.kind);
  if (kind == kinds().end()) throw InvalidArgument("unknown experiment kind '" + m.kind + "'");
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw InvalidArgument("manifest 'params' must be an object");
    for (const auto& [key, value] : j["params"].items()) {
      if (!kind->second.allowed.contains(key)) {
        throw InvalidArgument("parameter '" + key + "' does not apply to " + m.kind);
      }
      m.params[key] = param_text(key, value);
    }
  }
  for (const auto& key : kind->second.required) {
    if (!m.params.contains(key)) throw InvalidArgument(m.kind + " needs parameter '" + key + "'");
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw InvalidArgument("manifest 'seed' must be a non-negative integer");
    m.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("s_grid")) m.s_grid = param_text("s_grid", j["s_grid"]);
  if (kind->second.needs_s_grid && m.s_grid.empty()) throw InvalidArgument(m.kind + " needs an 's_grid'");
  if (j.contains("code_version")) {
    if (!j["code_version"].is_string()) throw InvalidArgument("manifest 'code_version' must be a string");
    m.code_version = j["code_version"].get<std::string>();
  }
  if (j.contains("timing")) {
    if (!j["timing"].is_boolean()) throw InvalidArgument("manifest 'timing' must be a boolean");
    m.timing = j["timing"].get<bool>();
  }
  if (j.contains("thresholds")) m.thresholds = parse_thresholds(j["thresholds"]);
  return m;
}

std::string get(const ExperimentManifest& m, const std::string& key, const std::string& fallback) {
  const auto it = m.params.find(key);
  return it == m.params.end() ? fallback : it->second;
}

std::uint64_t get_count(const ExperimentManifest& m, const std::string& key, std::uint64_t fallback) {
  const auto it = m.params.find(key);
  if (it == m.params.end()) return fallback;
  const auto v = parse_index_list(it->second);
  if (v.size() != 1) throw InvalidArgument("parameter '" + key + "' must be a single integer");
  return v.front();
}

template <class Rows>
std::string to_csv(const Rows& rows) {
  std::ostringstream out;
  write_csv(out, std::span(rows));
  return out.str();
}

std::vector<std::string> split_families(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(item);
  return out;
}

}  // namespace

std::vector<ExperimentManifest> parse_manifests(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw InvalidArgument(std::string("manifest is not valid JSON: ") + e.what());
  }
  std::vector<ExperimentManifest> out;
  if (j.is_object() && j.contains("experiments")) {
    if (j.size() != 1 || !j["experiments"].is_array()) {
      throw InvalidArgument("a manifest list must be {\"experiments\": [...]} and nothing else");
    }
    for (const auto& item : j["experiments"]) out.push_back(parse_one(item));
  } else {
    out.push_back(parse_one(j));
  }
  std::set<std::string> ids;
  for (const auto& m : out) {
    if (!ids.insert(m.id).second) throw InvalidArgument("duplicate experiment id '" + m.id + "'");
  }
  return out;
}

std::string manifest_to_json(const ExperimentManifest& m, const std::vector<std::string>& notes) {
  ordered_json j;
  j["id"] = m.id;
  j["kind"] = m.kind;
  j["params"] = ordered_json::object();
  for (const auto& [key, value] : m.params) j["params"][key] = value;
  j["seed"] = m.seed;
  j["s_grid"] = m.s_grid;
  j["code_version"] = m.code_version.empty() ? code_version() : m.code_version;
  j["timing"] = m.timing;
  j["thresholds"] = {
      {"max_decade_ratio", m.thresholds.max_decade_ratio}, {"refinement_rel", m.thresholds.refinement_rel},
      {"lambda_slack", m.thresholds.lambda_slack},         {"mellin_tol", m.thresholds.mellin_tol},
      {"rho_tol", m.thresholds.rho_tol},                   {"inequality_rel", m.thresholds.inequality_rel},
  };
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(2) + "\n";
}

ExperimentOutput run_experiment(const ExperimentManifest& m) {
  ExperimentOutput out;
  const RunOptions options{m.timing};
  const Thresholds& t = m.thresholds;
  const auto grid = m.s_grid.empty() ? std::vector<FunctionalPoint>{} : parse_s_grid(m.s_grid);

  if (m.kind == "lq_convergence" || m.kind == "hp_convergence" || m.kind == "pointwise_approx") {
    const auto n_list = parse_index_list(get(m, "n", ""));
    if (n_list.empty()) throw InvalidArgument("empty n list");
    const std::uint64_t n_max = *std::max_element(n_list.begin(), n_list.end());
    const auto table = build_mobius(get_count(m, "mobius_limit", n_max));
    if (m.kind == "pointwise_approx") {
      const auto rows = run_pointwise_approx(grid, n_list, table);
      out.csv = to_csv(rows);
      out.checks.push_back(check_approx(rows));
      return out;
    }
    const std::size_t degree = get_count(m, "coeff_cutoff", 100000);
    if (m.kind == "lq_convergence") {
      const double q = parse_real(get(m, "q", ""));
      const auto tau = build_divisor_counts(get_count(m, "divisor_limit", 4 * std::max<std::uint64_t>(degree, 1)));
      const auto res = run_lq_convergence(q, n_list, degree, table, tau, options);
      out.csv = to_csv(res.records);
      out.checks.push_back(check_trend(res.records, t.max_decade_ratio));
      out.notes.push_back("tau(j) <= C j^" + format_double(res.divisor_bound.exponent) + " with C = " +
                          format_double(res.divisor_bound.constant) + " fitted over j <= " +
                          std::to_string(res.divisor_bound.table_limit));
      return out;
    }
    const double p = parse_real(get(m, "p", ""));
    const auto rows = run_hp_convergence(p, n_list, degree, get_count(m, "nodes", 8192), table, options);
    const auto records = flatten(rows);
    out.csv = to_csv(records);
    std::vector<ConvergenceRecord> coarse;
    for (const auto& r : rows) coarse.push_back(r.coarse);
    out.checks.push_back(check_trend(coarse, t.max_decade_ratio));
    out.checks.push_back(check_refinement(rows, t.refinement_rel));
    if (!rows.empty() && rows.front().underresolved) {
      out.notes.push_back("nodes <= 2 * coeff_cutoff: quadrature does not resolve the polynomial exactly");
    }
    return out;
  }
  if (m.kind == "lambda_sweep") {
    const auto rows =
        run_lambda_sweep(parse_index_list(get(m, "k", "")), grid, get_count(m, "coeff_cutoff", 100000), t.lambda_slack);
    out.csv = to_csv(rows);
    out.checks.push_back(check_lambda(rows));
    return out;
  }
  if (m.kind == "mellin_verify") {
    const double tol = m.params.contains("tol") ? parse_real(get(m, "tol", "")) : t.mellin_tol;
    const auto rows = run_mellin_verify(parse_index_list(get(m, "k", "")), grid, tol);
    out.csv = to_csv(rows);
    out.checks.push_back(check_mellin(rows));
    return out;
  }
  if (m.kind == "mellin_rho") {
    const double tol = m.params.contains("tol") ? parse_real(get(m, "tol", "")) : t.rho_tol;
    const auto rows = run_mellin_rho(parse_real_list(get(m, "alpha", "")), grid, tol);
    out.csv = to_csv(rows);
    out.checks.push_back(check_mellin_rho(rows));
    return out;
  }
  if (m.kind == "weights_table1" || m.kind == "weights_classify") {
    std::vector<ClassificationResult> rows;
    if (m.kind == "weights_table1") {
      for (const auto& f : table1_families()) rows.push_back(classify(f));
    } else {
      for (const auto& spec : split_families(get(m, "family", ""))) rows.push_back(classify(WeightFamily::parse(spec)));
    }
    out.csv = to_csv(rows);
    out.checks.push_back(check_table1(rows));
    return out;
  }
  if (m.kind == "inequalities") {
    const auto rows = run_inequality_battery(m.seed, get_count(m, "count", 100), get_count(m, "max_degree", 64),
                                             t.inequality_rel);
    out.csv = to_csv(rows);
    out.checks.push_back(check_inequalities(rows));
    return out;
  }
  throw InvalidArgument("unknown experiment kind '" + m.kind + "'");
}

}  // namespace zfhp
