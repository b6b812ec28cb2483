#include "jrcnet/config_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "jrcnet/error.hpp"

namespace jrc {

namespace {

struct KeyBinding {
  const char* name;
  double* (*field)(Scenario&);
};

#define JRC_KEY(key, expr) \
  KeyBinding { key, [](Scenario& s) -> double* { return &(expr); } }

const std::vector<KeyBinding>& bindings() {
  static const std::vector<KeyBinding> table = {
      JRC_KEY("ptx", s.system.ptx),
      JRC_KEY("g0", s.system.g0),
      JRC_KEY("wavelength", s.system.wavelength),
      JRC_KEY("t_total", s.system.t_total),
      JRC_KEY("t_beam", s.system.t_beam),
      JRC_KEY("tau", s.system.tau),
      JRC_KEY("t_sys", s.system.t_sys),
      JRC_KEY("gamma", s.system.gamma),
      JRC_KEY("rate_D", s.system.rate_D),
      JRC_KEY("t_pri", s.system.t_pri),
      JRC_KEY("baseline_L", s.system.geometry.baseline_L),
      JRC_KEY("search_space_Omega", s.system.geometry.search_space_Omega),
      JRC_KEY("mean_rcs_m", s.target.mean_rcs_m),
      JRC_KEY("density_rho_m", s.target.density_rho_m),
      JRC_KEY("mean_rcs_c", s.clutter.mean_rcs_c),
      JRC_KEY("density_rho_c", s.clutter.density_rho_c),
      JRC_KEY("weibull_alpha", s.clutter.weibull_alpha),
      JRC_KEY("kappa", s.kappa),
      JRC_KEY("epsilon", s.epsilon),
      JRC_KEY("half_extent", s.half_extent),
  };
  return table;
}

#undef JRC_KEY

const KeyBinding& find_binding(std::string_view key) {
  for (const auto& b : bindings()) {
    if (key == b.name) return b;
  }
  fail_config("unknown configuration key '" + std::string(key) + "'");
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

void Scenario::validate() const {
  system.validate();
  target.validate();
  clutter.validate();
  if (!(kappa > 0.0) || !std::isfinite(kappa)) fail_config("kappa must be > 0");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) fail_config("epsilon must lie in (0, 1]");
  if (!(half_extent > 0.0) || !std::isfinite(half_extent)) {
    fail_config("half_extent must be > 0");
  }
}

Scenario reference_scenario() { return Scenario{}; }

const std::vector<std::string>& parameter_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& b : bindings()) k.emplace_back(b.name);
    return k;
  }();
  return keys;
}

bool is_parameter_key(std::string_view key) {
  return std::any_of(bindings().begin(), bindings().end(),
                     [&](const KeyBinding& b) { return key == b.name; });
}

double parse_double(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    fail_config("cannot parse value '" + std::string(text) + "' for " + std::string(what));
  }
  return v;
}

void set_parameter(Scenario& s, std::string_view key, std::string_view value) {
  const auto& b = find_binding(key);
  std::string_view v = trim(value);
  if (v.size() > 2 && (v.ends_with("dB") || v.ends_with("db"))) {
    if (key != "gamma") {
      fail_config("dB values are accepted only for gamma (key '" + std::string(key) + "')");
    }
    const double db = parse_double(v.substr(0, v.size() - 2), key);
    *b.field(s) = std::pow(10.0, db / 10.0);
    return;
  }
  *b.field(s) = parse_double(v, key);
}

void set_parameter(Scenario& s, std::string_view key, double value) {
  *find_binding(key).field(s) = value;
}

double get_parameter(const Scenario& s, std::string_view key) {
  // The binding table hands out mutable pointers; reading through a copy keeps
  // this function const-correct.
  Scenario copy = s;
  return *find_binding(key).field(copy);
}

Scenario parse_scenario(std::istream& in, const std::string& source_name) {
  Scenario s = reference_scenario();
  std::set<std::string, std::less<>> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    const std::string where = source_name + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) fail_config(where + ": expected 'key = value'");
    const std::string key(trim(view.substr(0, eq)));
    const std::string_view value = trim(view.substr(eq + 1));
    if (!is_parameter_key(key)) {
      fail_config(where + ": unknown configuration key '" + key + "'");
    }
    if (!seen.insert(key).second) fail_config(where + ": duplicate key '" + key + "'");
    try {
      set_parameter(s, key, value);
    } catch (const Error& e) {
      fail_config(where + ": " + e.what());
    }
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_config("cannot open configuration file '" + path + "'");
  return parse_scenario(in, path);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_scenario(const Scenario& s) {
  std::ostringstream out;
  for (const auto& key : parameter_keys()) {
    out << key << " = " << format_double(get_parameter(s, key)) << '\n';
  }
  return out.str();
}

}  // namespace jrc
