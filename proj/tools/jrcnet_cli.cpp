// jrcnet command-line front end. Talks to the library only through jrcnet.h.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jrcnet/jrcnet.h"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitValidation = 4;
constexpr int kExitInternal = 1;

struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

int exit_code_for(jrc_status s) {
  switch (s) {
    case JRC_OK: return kExitOk;
    case JRC_E_INVALID_ARGUMENT:
    case JRC_E_CONFIG: return kExitConfig;
    case JRC_E_NUMERICAL: return kExitNumerical;
    case JRC_E_VALIDATION: return kExitValidation;
    default: return kExitInternal;
  }
}

void check(jrc_status s) {
  if (s != JRC_OK) throw CliError(exit_code_for(s), jrc_last_error());
}

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || first == last) {
    throw CliError(kExitConfig, "cannot parse '" + text + "' as a number for " + what);
  }
  return v;
}

class ScenarioHandle {
public:
  ScenarioHandle() { check(jrc_scenario_create(&ptr_)); }
  explicit ScenarioHandle(const std::string& path) { check(jrc_scenario_load(path.c_str(), &ptr_)); }
  ScenarioHandle(const ScenarioHandle& other) { check(jrc_scenario_clone(other.ptr_, &ptr_)); }
  ScenarioHandle& operator=(const ScenarioHandle&) = delete;
  ~ScenarioHandle() { jrc_scenario_destroy(ptr_); }

  jrc_scenario* get() const { return ptr_; }

  void set(const std::string& key, const std::string& value) {
    check(jrc_scenario_set(ptr_, key.c_str(), value.c_str()));
  }
  void set(const std::string& key, double value) {
    check(jrc_scenario_set_double(ptr_, key.c_str(), value));
  }
  double get(const std::string& key) const {
    double v = 0.0;
    check(jrc_scenario_get_double(ptr_, key.c_str(), &v));
    return v;
  }

  json snapshot() const {
    json cfg = json::object();
    for (std::size_t i = 0; i < jrc_parameter_count(); ++i) {
      const std::string key = jrc_parameter_name(i);
      cfg[key] = fmt(get(key));
    }
    return cfg;
  }

private:
  jrc_scenario* ptr_ = nullptr;
};

// ---------------------------------------------------------------------------
// Sweeps

struct Sweep {
  std::string variable;  // empty: single point at the configured values
  double start = 0.0, stop = 0.0;
  int count = 1;
  bool log = false;

  std::vector<double> grid() const {
    std::vector<double> g;
    for (int i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : double(i) / (count - 1);
      g.push_back(log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                      : start + t * (stop - start));
    }
    return g;
  }

  std::string spec() const {
    if (variable.empty()) return "";
    return variable + "=" + fmt(start) + ":" + fmt(stop) + ":" + std::to_string(count) +
           (log ? "log" : "");
  }
};

Sweep parse_sweep(const std::string& text) {
  Sweep s;
  if (text.empty()) return s;
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw CliError(kExitConfig, "--sweep expects KEY=START:STOP:N[log]");
  s.variable = text.substr(0, eq);
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(eq + 1));
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw CliError(kExitConfig, "--sweep expects KEY=START:STOP:N[log]");
  std::string n = parts[2];
  if (n.size() > 3 && n.compare(n.size() - 3, 3, "log") == 0) {
    s.log = true;
    n.resize(n.size() - 3);
  }
  s.start = parse_number(parts[0], "sweep start");
  s.stop = parse_number(parts[1], "sweep stop");
  const double count = parse_number(n, "sweep count");
  if (count < 1 || count != std::floor(count) || count > 1e6) {
    throw CliError(kExitConfig, "sweep count must be a positive integer");
  }
  s.count = int(count);
  if (s.count > 1 && !(s.stop > s.start)) {
    throw CliError(kExitConfig, "sweep grid must be strictly increasing (START < STOP)");
  }
  if (s.log && !(s.start > 0.0)) throw CliError(kExitConfig, "log sweep needs START > 0");
  return s;
}

// Sweep variables beyond the raw configuration keys.
void apply_variable(ScenarioHandle& s, const std::string& variable, double value) {
  if (variable == "L") return s.set("baseline_L", value);
  if (variable == "rho_c") return s.set("density_rho_c", value);
  if (variable == "sigma_c_bar") return s.set("mean_rcs_c", value);
  if (variable == "gamma_dB") return s.set("gamma", std::pow(10.0, value / 10.0));
  if (variable == "bw") {
    if (!(value > 0.0)) throw CliError(kExitConfig, "bw must be > 0");
    return s.set("tau", 1.0 / value);
  }
  s.set(variable, value);
}

// ---------------------------------------------------------------------------
// Run description, shared by the subcommands and by rerun

struct Run {
  std::string command;
  Sweep sweep;
  std::vector<std::string> engines;
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;
  std::string which = "duty";
  std::vector<double> gamma_db{0.0, 3.0};
  Sweep z{"z", 0.02, 0.98, 49, false};
  std::string out_dir = ".";
  int threads = 0;
};

json run_options(const Run& r) {
  json o;
  o["sweep"] = r.sweep.spec();
  o["engines"] = r.engines;
  o["trials"] = r.trials;
  o["seed"] = r.seed;
  o["which"] = r.which;
  std::vector<std::string> g;
  for (double v : r.gamma_db) g.push_back(fmt(v));
  o["gamma_db"] = g;
  o["z"] = r.z.spec().substr(2);
  return o;
}

struct Outputs {
  std::vector<std::pair<std::string, std::string>> files;  // (label, path)
};

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const Run& r, const ScenarioHandle& s, const Outputs& out,
                    const std::vector<std::string>& argv) {
  json m;
  m["tool"] = "jrcnet";
  m["version"] = jrc_version();
  m["command"] = r.command;
  m["seed"] = r.seed;
  m["timestamp"] = timestamp_utc();
  m["rng"] = jrc_rng_name();
  m["args"] = argv;
  m["options"] = run_options(r);
  m["config"] = s.snapshot();
  json files = json::object();
  for (const auto& [label, path] : out.files) files[label] = path;
  m["outputs"] = files;
  const fs::path path = fs::path(r.out_dir) / (r.command + ".manifest.json");
  std::ofstream f(path, std::ios::binary);
  f << m.dump(2) << '\n';
  if (!f) throw CliError(kExitInternal, "cannot write " + path.string());
}

std::ofstream open_csv(const Run& r, const std::string& name, Outputs& out,
                       const std::string& label) {
  fs::create_directories(r.out_dir);
  const fs::path path = fs::path(r.out_dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliError(kExitInternal, "cannot open " + path.string() + " for writing");
  out.files.emplace_back(label, path.string());
  return f;
}

bool has_engine(const Run& r, const std::string& e) {
  for (const auto& x : r.engines) {
    if (x == e) return true;
  }
  return false;
}

void require_engines(const Run& r, const std::vector<std::string>& allowed) {
  for (const auto& e : r.engines) {
    bool ok = false;
    for (const auto& a : allowed) ok = ok || a == e;
    if (!ok) throw CliError(kExitConfig, "engine '" + e + "' not available for " + r.command);
  }
  if (has_engine(r, "montecarlo") && r.trials < 100) {
    throw CliError(kExitConfig, "--trials must be >= 100 when montecarlo is selected");
  }
}

// ---------------------------------------------------------------------------
// Commands

void sweep_command(const Run& r, const ScenarioHandle& base, Outputs& out, bool throughput) {
  require_engines(r, {"analytic", "montecarlo"});
  auto csv = open_csv(r, throughput ? "throughput.csv" : "coverage.csv", out, r.command);
  csv << "sweep_param,value,engine,mean,ci_low,ci_high,n_trials,seed\n";
  const std::string var = r.sweep.variable.empty() ? "none" : r.sweep.variable;
  const std::vector<double> grid = r.sweep.variable.empty() ? std::vector<double>{0.0}
                                                            : r.sweep.grid();
  for (double v : grid) {
    ScenarioHandle s(base);
    if (!r.sweep.variable.empty()) apply_variable(s, r.sweep.variable, v);
    check(jrc_scenario_validate(s.get()));
    const std::string prefix = var + "," + fmt(v) + ",";
    if (has_engine(r, "analytic")) {
      double mean = 0.0;
      if (throughput) {
        jrc_throughput t;
        check(jrc_throughput_at(s.get(), 0, &t));
        mean = t.upsilon;
      } else {
        jrc_coverage c;
        check(jrc_coverage_at(s.get(), &c));
        mean = c.p_dc;
      }
      csv << prefix << "analytic," << fmt(mean) << ',' << fmt(mean) << ',' << fmt(mean)
          << ",0," << r.seed << '\n';
    }
    if (has_engine(r, "montecarlo")) {
      jrc_estimate e;
      check(throughput ? jrc_estimate_throughput(s.get(), r.trials, r.seed, r.threads, &e)
                       : jrc_estimate_pdc(s.get(), r.trials, r.seed, r.threads, &e));
      csv << prefix << "montecarlo," << fmt(e.mean) << ',' << fmt(e.ci95_low) << ','
          << fmt(e.ci95_high) << ',' << e.n_trials << ',' << e.seed << '\n';
    }
  }
  std::cout << "wrote " << out.files.back().second << " (" << grid.size() << " grid points)\n";
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), 1e-300); }

void optimize_command(const Run& r, const ScenarioHandle& s, Outputs& out) {
  check(jrc_scenario_validate(s.get()));
  auto csv = open_csv(r, "optimize.csv", out, "optimize");
  csv << "which,quantity,closed_form,numeric,relative_gap\n";
  auto row = [&](const std::string& quantity, double closed, double numeric) {
    csv << r.which << ',' << quantity << ',' << fmt(closed) << ',' << fmt(numeric) << ','
        << fmt(relative_gap(closed, numeric)) << '\n';
    std::printf("%-10s %-28s closed %.10g  numeric %.10g  gap %.3g\n", r.which.c_str(),
                quantity.c_str(), closed, numeric, relative_gap(closed, numeric));
  };
  if (r.which == "duty") {
    jrc_duty_solution d;
    check(jrc_optimal_duty(s.get(), &d));
    row("epsilon", d.epsilon_star, d.epsilon_numeric);
    row("upsilon", d.upsilon_at_star, d.upsilon_numeric);
    csv << "duty,decay_a," << fmt(d.decay_a) << ",,\n";
  } else if (r.which == "bandwidth") {
    jrc_bandwidth_solution b;
    check(jrc_optimal_bandwidth(s.get(), &b));
    row("bw_coverage_exponent", b.closed_form, b.coverage_argmax);
    row("bw_throughput", b.closed_form, b.throughput_argmax);
  } else if (r.which == "pri") {
    jrc_pri_solution p;
    check(jrc_optimal_pri(s.get(), &p));
    row("t_pri", p.closed_form, p.numeric_argmax);
  } else {
    throw CliError(kExitConfig, "--which must be duty, bandwidth or pri");
  }
}

void metadist_command(const Run& r, const ScenarioHandle& base, Outputs& out) {
  require_engines(r, {"analytic", "metadist", "montecarlo"});
  const std::vector<double> z = r.z.grid();
  auto csv = open_csv(r, "metadist.csv", out, "metadist");
  csv << "gamma_dB,z,F_z,branch\n";
  for (double g : r.gamma_db) {
    ScenarioHandle s(base);
    apply_variable(s, "gamma_dB", g);
    check(jrc_scenario_validate(s.get()));
    auto emit = [&](const std::string& branch, const std::vector<double>& F) {
      for (std::size_t i = 0; i < z.size(); ++i) {
        csv << fmt(g) << ',' << fmt(z[i]) << ',' << fmt(F[i]) << ',' << branch << '\n';
      }
      std::printf("gamma %g dB  %-9s ceiling %.3f\n", g, branch.c_str(),
                  jrc_reliability_ceiling(z.data(), F.data(), z.size()));
    };
    std::vector<double> F(z.size());
    if (has_engine(r, "analytic")) {
      check(jrc_metadist(s.get(), JRC_BRANCH_APPROX, z.data(), z.size(), r.threads, F.data(),
                         nullptr));
      emit("approx", F);
    }
    if (has_engine(r, "metadist")) {
      check(jrc_metadist(s.get(), JRC_BRANCH_EXACT, z.data(), z.size(), r.threads, F.data(),
                         nullptr));
      emit("exact", F);
    }
    if (has_engine(r, "montecarlo")) {
      check(jrc_metadist_empirical(s.get(), z.data(), z.size(), r.trials, r.seed, r.threads,
                                   F.data()));
      emit("empirical", F);
    }
  }
}

int validate_command(const Run& r, const ScenarioHandle& base, Outputs& out) {
  check(jrc_scenario_validate(base.get()));
  if (r.trials < 100) throw CliError(kExitConfig, "--trials must be >= 100");
  const double L = base.get("baseline_L");
  const double k_lo = std::max(2.0 * L, 1.0);
  const double k_hi = 80.0;
  if (!(k_hi > k_lo)) throw CliError(kExitConfig, "baseline too long for the validation grid");
  auto csv = open_csv(r, "validate.csv", out, "validate");
  csv << "kappa,epsilon,analytic,mean,ci_low,ci_high,n_trials,seed,pass\n";
  int passed = 0, total = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      ScenarioHandle s(base);
      const double kappa = k_lo + (k_hi - k_lo) * i / 4.0;
      const double eps = 0.1 + 0.8 * j / 4.0;
      s.set("kappa", kappa);
      s.set("epsilon", eps);
      const std::uint64_t seed = r.seed + std::uint64_t(5 * i + j);
      jrc_coverage c;
      jrc_estimate e;
      check(jrc_coverage_at(s.get(), &c));
      check(jrc_estimate_pdc(s.get(), r.trials, seed, r.threads, &e));
      const bool ok = c.p_dc >= e.ci95_low && c.p_dc <= e.ci95_high;
      passed += ok;
      ++total;
      csv << fmt(kappa) << ',' << fmt(eps) << ',' << fmt(c.p_dc) << ',' << fmt(e.mean) << ','
          << fmt(e.ci95_low) << ',' << fmt(e.ci95_high) << ',' << e.n_trials << ',' << seed
          << ',' << (ok ? "pass" : "fail") << '\n';
      std::printf("kappa %6.2f  eps %.2f  analytic %.5f  mc %.5f [%.5f, %.5f]  %s\n", kappa,
                  eps, c.p_dc, e.mean, e.ci95_low, e.ci95_high, ok ? "pass" : "FAIL");
    }
  }
  const double rate = double(passed) / total;
  std::printf("%d/%d grid points inside the 95%% Wilson interval (%.0f%%)\n", passed, total,
              100.0 * rate);
  return rate >= 0.9 ? kExitOk : kExitValidation;
}

int execute(const Run& r, const ScenarioHandle& s, const std::vector<std::string>& argv) {
  Outputs out;
  int code = kExitOk;
  if (r.command == "coverage") sweep_command(r, s, out, false);
  else if (r.command == "throughput") sweep_command(r, s, out, true);
  else if (r.command == "optimize") optimize_command(r, s, out);
  else if (r.command == "metadist") metadist_command(r, s, out);
  else if (r.command == "validate") code = validate_command(r, s, out);
  else throw CliError(kExitConfig, "unknown command '" + r.command + "'");
  write_manifest(r, s, out, argv);
  return code;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int rerun(const std::string& manifest_path, const std::string& out_override, int threads,
          const std::vector<std::string>& argv) {
  std::ifstream f(manifest_path);
  if (!f) throw CliError(kExitConfig, "cannot open manifest '" + manifest_path + "'");
  json m;
  try {
    f >> m;
  } catch (const json::exception& e) {
    throw CliError(kExitConfig, std::string("malformed manifest: ") + e.what());
  }
  try {
    ScenarioHandle s;
    for (const auto& [key, value] : m.at("config").items()) s.set(key, value.get<std::string>());
    const json& o = m.at("options");
    Run r;
    r.command = m.at("command").get<std::string>();
    r.sweep = parse_sweep(o.at("sweep").get<std::string>());
    r.engines = o.at("engines").get<std::vector<std::string>>();
    r.trials = o.at("trials").get<std::int64_t>();
    r.seed = o.at("seed").get<std::uint64_t>();
    r.which = o.at("which").get<std::string>();
    r.gamma_db.clear();
    for (const auto& g : o.at("gamma_db")) r.gamma_db.push_back(parse_number(g.get<std::string>(), "gamma_db"));
    r.z = parse_sweep("z=" + o.at("z").get<std::string>());
    r.out_dir = out_override.empty() ? fs::path(manifest_path).parent_path().string() : out_override;
    if (r.out_dir.empty()) r.out_dir = ".";
    r.threads = threads;
    return execute(r, s, argv);
  } catch (const json::exception& e) {
    throw CliError(kExitConfig, std::string("malformed manifest: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  CLI::App app{"Detection coverage and throughput planning for joint radar-communication networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(jrc_version()));

  Run run;
  std::string config_path, sweep_text, gamma_text = "0,3", z_text = "0.02:0.98:49";
  std::map<std::string, std::string> engines_text;
  std::vector<std::string> overrides;
  std::string manifest_path;

  auto common = [&](CLI::App* sub, bool with_sweep, const std::string& default_engines) {
    sub->add_option("--config", config_path, "scenario file (key = value)");
    sub->add_option("--set", overrides, "override one key, KEY=VALUE (repeatable)");
    sub->add_option("--out", run.out_dir, "output directory")->capture_default_str();
    sub->add_option("--threads", run.threads, "worker threads, 0 = all cores")->capture_default_str();
    sub->add_option("--seed", run.seed, "random seed")->capture_default_str();
    sub->add_option("--trials", run.trials, "Monte Carlo trials per point")->capture_default_str();
    if (with_sweep) sub->add_option("--sweep", sweep_text, "KEY=START:STOP:N[log]");
    if (!default_engines.empty()) {
      std::string& engines = engines_text[sub->get_name()];
      engines = default_engines;
      sub->add_option("--engines", engines, "comma-separated engines")
          ->default_str(default_engines);
    }
  };

  auto* cov = app.add_subcommand("coverage", "sweep detection coverage P_DC");
  common(cov, true, "analytic,montecarlo");
  auto* thr = app.add_subcommand("throughput", "sweep network throughput");
  common(thr, true, "analytic,montecarlo");
  auto* opt = app.add_subcommand("optimize", "closed-form optimum vs numeric argmax");
  common(opt, false, "");
  opt->add_option("--which", run.which, "duty | bandwidth | pri")
      ->check(CLI::IsMember({"duty", "bandwidth", "pri"}))
      ->capture_default_str();
  auto* md = app.add_subcommand("metadist", "meta-distribution F(z) per SCNR threshold");
  common(md, false, "analytic,metadist");
  md->add_option("--gamma-db", gamma_text, "comma-separated thresholds in dB")->capture_default_str();
  md->add_option("--z", z_text, "z grid START:STOP:N")->capture_default_str();
  auto* val = app.add_subcommand("validate", "analytic vs Monte Carlo agreement on a 5x5 grid");
  common(val, false, "");
  auto* re = app.add_subcommand("rerun", "repeat a run from its manifest");
  re->add_option("--manifest", manifest_path, "manifest written by an earlier run")->required();
  re->add_option("--out", run.out_dir, "output directory (default: the manifest's)");
  re->add_option("--threads", run.threads, "worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (re->parsed()) {
      const bool out_given = re->count("--out") > 0;
      return rerun(manifest_path, out_given ? run.out_dir : std::string(), run.threads, args);
    }
    CLI::App* sub = app.get_subcommands().front();
    run.command = sub->get_name();
    ScenarioHandle scenario = config_path.empty() ? ScenarioHandle() : ScenarioHandle(config_path);
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw CliError(kExitConfig, "--set expects KEY=VALUE");
      scenario.set(o.substr(0, eq), o.substr(eq + 1));
    }
    check(jrc_scenario_validate(scenario.get()));
    run.sweep = parse_sweep(sweep_text);
    if (run.command == "coverage" || run.command == "throughput" || run.command == "metadist") {
      run.engines = split_list(engines_text[run.command]);
      if (run.engines.empty()) throw CliError(kExitConfig, "--engines must not be empty");
    }
    if (run.command == "metadist") {
      run.gamma_db.clear();
      for (const auto& g : split_list(gamma_text)) run.gamma_db.push_back(parse_number(g, "--gamma-db"));
      if (run.gamma_db.empty()) throw CliError(kExitConfig, "--gamma-db must not be empty");
      run.z = parse_sweep("z=" + z_text);
    }
    return execute(run, scenario, args);
  } catch (const CliError& e) {
    std::cerr << "jrcnet: " << e.what() << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "jrcnet: " << e.what() << '\n';
    return kExitInternal;
  }
}
