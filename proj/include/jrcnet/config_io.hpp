#pragma once

// Flat key/value scenario files:
//
//   # Reference scenario with a 2.5 m wavelength
//   wavelength = 2.5
//   gamma = 3dB
//
// Keys are the field names of SystemConfig, GeometryConfig, TargetModel and
// ClutterModel, plus the operating point (kappa, epsilon) and the simulation
// half_extent. Unknown or repeated keys are rejected. Only gamma accepts a
// "dB" suffix; every other value is plain SI.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jrcnet/model.hpp"

namespace jrc {

struct Scenario {
  SystemConfig system;
  TargetModel target;
  ClutterModel clutter;
  double kappa = 50.0;        // m, operating bistatic range
  double epsilon = 0.5;       // operating duty cycle
  double half_extent = 100.0;  // m, simulation region is [-E, E]^2

  void validate() const;
};

/// Reference values with a 5 mm wavelength and unit rate.
Scenario reference_scenario();

const std::vector<std::string>& parameter_keys();

bool is_parameter_key(std::string_view key);

/// Sets one key from its textual value (gamma may carry a dB suffix).
void set_parameter(Scenario& s, std::string_view key, std::string_view value);
void set_parameter(Scenario& s, std::string_view key, double value);
double get_parameter(const Scenario& s, std::string_view key);

/// Parses a scenario file on top of the reference defaults and validates it.
Scenario parse_scenario(std::istream& in, const std::string& source_name = "<input>");
Scenario load_scenario(const std::string& path);

/// Writes every key with 17 significant digits; parse_scenario(format_scenario(s))
/// reproduces s exactly.
std::string format_scenario(const Scenario& s);

/// Locale-independent shortest round-trip text for a double at 17 significant digits.
std::string format_double(double v);

double parse_double(std::string_view text, std::string_view what);

}  // namespace jrc
