// mutunc: command-line front end for the uncertainty, detection and
// steering routines.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mutunc/entanglement.hpp"
#include "mutunc/matrix_io.hpp"
#include "mutunc/numeric.hpp"
#include "mutunc/reproduce.hpp"
#include "mutunc/steering.hpp"
#include "mutunc/uncertainty.hpp"

using json = nlohmann::ordered_json;
using namespace mutunc;

namespace {

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kReproduction = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string state = "werner";
  std::vector<std::string> params;
  std::vector<std::string> obs;
  std::string criterion;
  std::string target = "all";
  double from = 0.0, to = 0.0;
  std::size_t steps = 0;
  bool grid_given = false;
  std::uint64_t seed = 2024;
  std::string out;
  std::string format;
};

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round15(x);
}

std::string csv_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects k=v, got '" + item + "'");
    const std::string value = item.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0') throw UsageError("--param value is not a number: '" + item + "'");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

bool is_named_state(const std::string& s) {
  return s == "werner" || s == "canonical" || s == "tiles" || s == "schmidt" || s == "nqubit-product";
}

DensityMatrix load_state(const Config& cfg) {
  if (is_named_state(cfg.state)) return make_named_state(cfg.state, parse_params(cfg.params)).state;
  if (!cfg.params.empty()) throw UsageError("--param only applies to named states");
  if (!std::filesystem::exists(cfg.state)) {
    throw UsageError("--state is neither a known id (werner, canonical, tiles, schmidt, nqubit-product) nor a file: " +
                     cfg.state);
  }
  const MatrixFile f = read_matrix_file(cfg.state);
  return make_density_matrix(f.matrix, f.dims);
}

// "site:x,y,z" for a qubit site.
bool parse_bloch_spec(const std::string& spec, std::size_t& site, Vec3& v) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0) return false;
  const std::string head = spec.substr(0, colon);
  if (head.find_first_not_of("0123456789") != std::string::npos) return false;
  site = std::stoul(head);
  std::stringstream ss(spec.substr(colon + 1));
  std::string part;
  std::size_t k = 0;
  while (std::getline(ss, part, ',')) {
    if (k == 3) return false;
    char* end = nullptr;
    v[k++] = std::strtod(part.c_str(), &end);
    if (part.empty() || *end != '\0') return false;
  }
  return k == 3;
}

struct ObservableSpecs {
  std::vector<Observable> ops;
  std::vector<std::pair<std::size_t, Vec3>> bloch;  // empty for file observables
};

ObservableSpecs load_observables(const std::vector<std::string>& specs, const DensityMatrix& rho) {
  ObservableSpecs out;
  bool any_bloch = false, any_file = false;
  const auto& dims = rho.subsystem_dims();
  for (const auto& spec : specs) {
    std::size_t site = 0;
    Vec3 v{};
    if (parse_bloch_spec(spec, site, v)) {
      any_bloch = true;
      if (site >= dims.size()) throw DimensionError("observable site " + std::to_string(site) + " out of range");
      if (dims[site] != 2) throw DimensionError("Bloch-vector observables need a qubit site");
      out.bloch.emplace_back(site, v);
      out.ops.push_back(embed(pauli_dot(v), site, dims));
    } else if (std::filesystem::exists(spec)) {
      any_file = true;
      const MatrixFile f = read_matrix_file(spec);
      if (f.matrix.rows() != rho.dim()) {
        throw DimensionError("observable in " + spec + " is " + f.matrix.shape_string() + ", state dimension is " +
                             std::to_string(rho.dim()));
      }
      out.ops.push_back(make_observable(f.matrix));
    } else {
      throw UsageError("--obs is neither site:x,y,z nor an existing file: " + spec);
    }
  }
  if (any_bloch && any_file) throw UsageError("--obs mixes Bloch vectors and matrix files");
  return out;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + cfg.out);
  f << text;
}

// Error stream messages stay on one line.
void report_error(const std::string& what) {
  std::string msg = what;
  for (auto& ch : msg)
    if (ch == '\n' || ch == '\r') ch = ' ';
  std::cerr << "error: " << msg << "\n";
}

std::string format_or(const Config& cfg, const std::string& fallback) { return cfg.format.empty() ? fallback : cfg.format; }

int cmd_compute(const Config& cfg) {
  if (cfg.obs.size() < 2) throw UsageError("compute needs at least two --obs");
  if (format_or(cfg, "json") != "json") throw UsageError("compute only writes json");
  const DensityMatrix rho = load_state(cfg);
  const auto obs = load_observables(cfg.obs, rho);
  const auto rep = uncertainty_report(rho, obs.ops);

  json j;
  j["state"] = cfg.state;
  j["std_devs"] = json::array();
  for (double s : rep.std_devs) j["std_devs"].push_back(num(s));
  j["std_sum_obs"] = num(rep.std_sum);
  j["mutual"] = num(rep.mutual);
  j["conditional"] = {{"a_given_b", num(*rep.conditional)}};
  j["conditional_variance"] = num(*rep.conditional_variance);
  j["covariance"] = num(*rep.covariance);
  if (rep.conditional_mutual) j["conditional_mutual"] = num(*rep.conditional_mutual);
  emit(cfg, j.dump(2) + "\n");
  return kOk;
}

json verdict_json(const DetectionVerdict& v) {
  return {{"criterion", v.criterion},
          {"statistic", num(v.statistic)},
          {"threshold", num(v.threshold)},
          {"verdict", to_string(v.verdict)},
          {"direction", to_string(v.direction)}};
}

int cmd_detect(const Config& cfg) {
  if (format_or(cfg, "json") != "json") throw UsageError("detect only writes json");
  const DensityMatrix rho = load_state(cfg);
  json j;
  if (cfg.criterion == "nqubit-product") {
    std::vector<Vec3> vecs;
    if (cfg.obs.empty()) {
      vecs = default_product_test_vectors(rho);
    } else {
      const auto obs = load_observables(cfg.obs, rho);
      if (obs.bloch.size() != rho.subsystems()) throw UsageError("nqubit-product needs one site:x,y,z per qubit");
      vecs.resize(obs.bloch.size());
      for (const auto& [site, v] : obs.bloch) vecs[site] = v;
    }
    const auto res = nqubit_product_test(rho, vecs);
    j = verdict_json(res.verdict);
    j["closed_form"] = num(res.closed_form);
  } else {
    if (!cfg.obs.empty()) throw UsageError("--obs is only used by nqubit-product");
    if (cfg.criterion == "ppt") {
      j = verdict_json(ppt_criterion(rho));
    } else if (cfg.criterion == "kyfan-condf") {
      j = verdict_json(kyfan_criterion(rho, KyFanCriterion::condF));
    } else if (cfg.criterion == "kyfan-dsep") {
      j = verdict_json(kyfan_criterion(rho, KyFanCriterion::dsep));
    } else {
      // condvar with observable sets aligned to the singular vectors of T
      const auto basis = gell_mann_basis(local_dimension(rho));
      const auto sets = svd_aligned_observable_sets(pairwise_correlation_tensor(rho, basis, 0, 1), basis);
      j = verdict_json(conditional_variance_witness(rho, sets.a, sets.b));
    }
  }
  emit(cfg, j.dump(2) + "\n");
  return kOk;
}

int cmd_steer_sweep(const Config& cfg) {
  const bool werner_sweep = cfg.state == "werner";
  if (!werner_sweep && cfg.state != "pssv") throw UsageError("steer-sweep --state must be pssv or werner");
  double from = werner_sweep ? 0.0 : 0.01, to = werner_sweep ? 1.0 : 1.5;
  std::size_t steps = werner_sweep ? 101 : 150;
  if (cfg.grid_given) {
    from = cfg.from;
    to = cfg.to;
    steps = cfg.steps;
  }
  if (steps < 2) throw UsageError("--steps must be at least 2");
  if (!(from < to)) throw UsageError("--from must be below --to");
  const std::string fmt = format_or(cfg, "csv");

  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  if (werner_sweep) {
    header = {"p", "m_inf_analytic", "m_inf_matrix"};
    for (std::size_t i = 0; i < steps; ++i) {
      const double p = grid_point(from, to, steps, i);
      rows.push_back({p, werner_minf_analytic(p), werner_minf_matrix(p).verdict.statistic});
    }
  } else {
    header = {"alpha", "m_inf", "reid_product", "reid_bound"};
    for (std::size_t i = 0; i < steps; ++i) {
      const double a = grid_point(from, to, steps, i);
      const auto f = pssv_closed_forms(a);
      rows.push_back({a, f.m_inf_cv, f.reid_product, 0.25});
    }
  }

  std::string text;
  if (fmt == "csv") {
    for (std::size_t k = 0; k < header.size(); ++k) text += (k ? "," : "") + header[k];
    text += "\n";
    for (const auto& r : rows) {
      for (std::size_t k = 0; k < r.size(); ++k) text += (k ? "," : "") + csv_num(r[k]);
      text += "\n";
    }
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      json o;
      for (std::size_t k = 0; k < header.size(); ++k) o[header[k]] = num(r[k]);
      arr.push_back(o);
    }
    text = json{{"state", cfg.state}, {"rows", arr}}.dump(2) + "\n";
  }
  emit(cfg, text);
  return kOk;
}

int cmd_reproduce(const Config& cfg) {
  const auto report = reproduce(cfg.target, cfg.seed);
  const std::string fmt = format_or(cfg, "table");
  std::string text;
  if (fmt == "json") {
    json arr = json::array();
    for (const auto& r : report.rows) {
      arr.push_back({{"target", r.target},
                     {"quantity", r.quantity},
                     {"reference", num(r.reference)},
                     {"computed", num(r.computed)},
                     {"abs_diff", num(r.diff())},
                     {"tolerance", num(r.tolerance)},
                     {"check", to_string(r.check)},
                     {"pass", r.pass}});
    }
    text = json{{"target", cfg.target}, {"pass", report.all_pass()}, {"rows", arr}}.dump(2) + "\n";
  } else if (fmt == "csv") {
    text = "target,quantity,reference,computed,abs_diff,tolerance,check,pass\n";
    for (const auto& r : report.rows) {
      text += r.target + ",\"" + r.quantity + "\"," + csv_num(r.reference) + "," + csv_num(r.computed) + "," +
              csv_num(r.diff()) + "," + csv_num(r.tolerance) + "," + to_string(r.check) + "," +
              (r.pass ? "pass" : "FAIL") + "\n";
    }
  } else {
    char line[512];
    std::snprintf(line, sizeof line, "%-13s %-52s %16s %18s %10s  %s\n", "target", "quantity", "reference", "computed",
                  "|diff|", "result");
    text += line;
    for (const auto& r : report.rows) {
      std::snprintf(line, sizeof line, "%-13s %-52s %16.10g %18.12g %10.3g  %s\n", r.target.c_str(),
                    r.quantity.c_str(), r.reference, r.computed, r.diff(),
                    r.check == Check::none ? "info" : (r.pass ? "pass" : "FAIL"));
      text += line;
    }
  }
  emit(cfg, text);
  if (!report.all_pass()) {
    report_error("reproduction failed for target " + cfg.target);
    return kReproduction;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutual and conditional uncertainty: compute, detect, steer-sweep, reproduce"};
  app.require_subcommand(1);
  Config cfg;

  auto common_out = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--out", cfg.out, "Write output to this path instead of stdout");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed));
    sub->add_option("--seed", cfg.seed, "Random seed");
  };
  auto state_opts = [&](CLI::App* sub) {
    sub->add_option("--state", cfg.state, "Named state id or matrix file");
    sub->add_option("--param", cfg.params, "State parameter k=v (repeatable)");
  };

  auto* compute = app.add_subcommand("compute", "Uncertainty quantities for a state and observables");
  state_opts(compute);
  compute->add_option("--obs", cfg.obs, "site:x,y,z or matrix file (repeatable)");
  common_out(compute, {"json"});

  auto* detect = app.add_subcommand("detect", "Run an entanglement criterion");
  state_opts(detect);
  detect->add_option("--criterion", cfg.criterion, "Criterion id")
      ->required()
      ->check(CLI::IsMember({"condvar", "kyfan-condf", "kyfan-dsep", "ppt", "nqubit-product"}));
  detect->add_option("--obs", cfg.obs, "Measurement vectors for nqubit-product, site:x,y,z");
  common_out(detect, {"json"});

  auto* sweep = app.add_subcommand("steer-sweep", "Steering statistics over a parameter grid");
  sweep->add_option("--state", cfg.state, "pssv or werner")->default_str("pssv");
  auto* from = sweep->add_option("--from", cfg.from, "Grid start");
  auto* to = sweep->add_option("--to", cfg.to, "Grid end");
  auto* steps = sweep->add_option("--steps", cfg.steps, "Grid points");
  from->needs(to, steps);
  to->needs(from, steps);
  steps->needs(from, to);
  common_out(sweep, {"csv", "json"});

  auto* repro = app.add_subcommand("reproduce", "Recompute the published numbers and compare");
  repro->add_option("target", cfg.target, "example1, example2, werner, figure1, propositions or all")
      ->check(CLI::IsMember(reproduction_targets()));
  common_out(repro, {"table", "json", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error(e.what());
    return kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg);
    if (detect->parsed()) return cmd_detect(cfg);
    if (sweep->parsed()) {
      if (sweep->count("--state") == 0) cfg.state = "pssv";
      cfg.grid_given = sweep->count("--from") > 0;
      return cmd_steer_sweep(cfg);
    }
    return cmd_reproduce(cfg);
  } catch (const UsageError& e) {
    report_error(e.what());
    return kUsage;
  } catch (const std::exception& e) {
    report_error(e.what());
    return kValidation;
  }
}
