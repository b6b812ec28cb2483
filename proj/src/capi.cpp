#include "jrcnet/jrcnet.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "jrcnet/analytic.hpp"
#include "jrcnet/config_io.hpp"
#include "jrcnet/error.hpp"
#include "jrcnet/metadist.hpp"
#include "jrcnet/montecarlo.hpp"
#include "jrcnet/optimize.hpp"
#include "jrcnet/rng.hpp"

struct jrc_scenario {
  jrc::Scenario value;
};

namespace {

thread_local std::string g_last_error;

jrc_status record(jrc_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <class F>
jrc_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return JRC_OK;
  } catch (const jrc::Error& e) {
    return record(static_cast<jrc_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return record(JRC_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(JRC_E_INTERNAL, e.what());
  } catch (...) {
    return record(JRC_E_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) {
    throw jrc::Error(jrc::ErrorCode::invalid_argument, std::string(name) + " is NULL");
  }
}

jrc_coverage to_c(const jrc::CoverageReport& r) {
  return {r.p_dc, r.snr_term, r.scr_term, r.log_snr_term, r.log_scr_term, r.kappa, r.epsilon};
}

jrc_estimate to_c(const jrc::EmpiricalEstimate& e) {
  return {e.mean, e.ci95_low, e.ci95_high, e.n_trials, e.successes, e.seed};
}

jrc_duty_solution to_c(const jrc::DutyCycleSolution& d) {
  return {d.epsilon_star,    d.decay_a,         d.amplitude_A0,
          d.upsilon_at_star, d.epsilon_numeric, d.upsilon_numeric};
}

const jrc::Scenario& scenario(const jrc_scenario* s) {
  require(s, "scenario");
  return s->value;
}

jrc::MonteCarloOptions mc_options(int64_t n_trials, uint64_t seed, int threads) {
  jrc::MonteCarloOptions opt;
  opt.n_trials = n_trials;
  opt.seed = seed;
  opt.threads = threads;
  return opt;
}

}  // namespace

extern "C" {

const char* jrc_version(void) { return "0.1.0"; }

const char* jrc_rng_name(void) { return jrc::rng::kGeneratorName; }

const char* jrc_last_error(void) { return g_last_error.c_str(); }

jrc_status jrc_scenario_create(jrc_scenario** out) {
  return guarded([&] {
    require(out, "out");
    *out = new jrc_scenario{jrc::reference_scenario()};
  });
}

jrc_status jrc_scenario_load(const char* path, jrc_scenario** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new jrc_scenario{jrc::load_scenario(path)};
  });
}

jrc_status jrc_scenario_parse(const char* text, jrc_scenario** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::istringstream in{std::string(text)};
    *out = new jrc_scenario{jrc::parse_scenario(in)};
  });
}

jrc_status jrc_scenario_clone(const jrc_scenario* s, jrc_scenario** out) {
  return guarded([&] {
    require(out, "out");
    *out = new jrc_scenario{scenario(s)};
  });
}

void jrc_scenario_destroy(jrc_scenario* s) { delete s; }

jrc_status jrc_scenario_set(jrc_scenario* s, const char* key, const char* value) {
  return guarded([&] {
    require(s, "scenario");
    require(key, "key");
    require(value, "value");
    jrc::set_parameter(s->value, key, std::string_view(value));
  });
}

jrc_status jrc_scenario_set_double(jrc_scenario* s, const char* key, double value) {
  return guarded([&] {
    require(s, "scenario");
    require(key, "key");
    jrc::set_parameter(s->value, key, value);
  });
}

jrc_status jrc_scenario_get_double(const jrc_scenario* s, const char* key, double* out) {
  return guarded([&] {
    require(key, "key");
    require(out, "out");
    *out = jrc::get_parameter(scenario(s), key);
  });
}

jrc_status jrc_scenario_validate(const jrc_scenario* s) {
  return guarded([&] { scenario(s).validate(); });
}

jrc_status jrc_scenario_format(const jrc_scenario* s, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    const std::string text = jrc::format_scenario(scenario(s));
    if (needed != nullptr) *needed = text.size() + 1;
    if (cap == 0) return;
    require(buf, "buf");
    if (cap < text.size() + 1) {
      throw jrc::Error(jrc::ErrorCode::invalid_argument, "buffer too small");
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
  });
}

size_t jrc_parameter_count(void) { return jrc::parameter_keys().size(); }

const char* jrc_parameter_name(size_t index) {
  const auto& keys = jrc::parameter_keys();
  return index < keys.size() ? keys[index].c_str() : nullptr;
}

jrc_status jrc_coverage_at(const jrc_scenario* s, jrc_coverage* out) {
  return guarded([&] {
    require(out, "out");
    const auto& v = scenario(s);
    v.validate();
    *out = to_c(jrc::coverage_probability(v.system, v.target, v.clutter, v.kappa, v.epsilon));
  });
}

jrc_status jrc_monostatic_coverage(const jrc_scenario* s, jrc_coverage* out) {
  return guarded([&] {
    require(out, "out");
    const auto& v = scenario(s);
    v.validate();
    *out = to_c(jrc::monostatic_coverage(v.system, v.target, v.clutter, v.kappa, v.epsilon));
  });
}

jrc_status jrc_throughput_at(const jrc_scenario* s, int exact_geometry, jrc_throughput* out) {
  return guarded([&] {
    require(out, "out");
    const auto& v = scenario(s);
    v.validate();
    const auto geo = exact_geometry ? jrc::UsersGeometry::exact : jrc::UsersGeometry::approximate;
    const auto r =
        jrc::network_throughput(v.system, v.target, v.clutter, v.kappa, v.epsilon, geo);
    *out = {r.upsilon, r.eta, to_c(r.coverage)};
  });
}

jrc_status jrc_solve_duty(double decay_a, double amplitude_A0, jrc_duty_solution* out) {
  return guarded([&] {
    require(out, "out");
    *out = to_c(jrc::solve_duty_cycle(decay_a, amplitude_A0));
  });
}

jrc_status jrc_optimal_duty(const jrc_scenario* s, jrc_duty_solution* out) {
  return guarded([&] {
    require(out, "out");
    const auto& v = scenario(s);
    v.validate();
    *out = to_c(jrc::optimal_duty_cycle(v.system, v.target, v.clutter, v.kappa));
  });
}

jrc_status jrc_optimal_bandwidth(const jrc_scenario* s, jrc_bandwidth_solution* out) {
  return guarded([&] {
    require(out, "out");
    const auto& v = scenario(s);
    v.validate();
    const auto r = jrc::optimal_bandwidth(v.system, v.target, v.clutter, v.kappa, v.epsilon);
    *out = {r.closed_form, r.coverage_argmax, r.throughput_argmax};
  });
}

jrc_status jrc_optimal_pri(const jrc_scenario* s, jrc_pri_solution* out) {
  return guarded([&] {
    require(out, "out");
    const auto& v = scenario(s);
    v.validate();
    const auto r = jrc::optimal_pri(v.system, v.target, v.clutter, v.epsilon);
    *out = {r.closed_form, r.numeric_argmax, r.upsilon_at_optimum};
  });
}

jrc_status jrc_throughput_vs_pri(const jrc_scenario* s, double t_pri, double* out) {
  return guarded([&] {
    require(out, "out");
    const auto& v = scenario(s);
    v.validate();
    *out = jrc::throughput_vs_pri(v.system, v.target, v.clutter, v.epsilon, t_pri);
  });
}

jrc_status jrc_coverage_at_max_range(const jrc_scenario* s, jrc_coverage* out) {
  return guarded([&] {
    require(out, "out");
    const auto& v = scenario(s);
    v.validate();
    *out = to_c(jrc::coverage_at_max_range(v.system, v.target, v.clutter, v.epsilon,
                                           v.system.t_pri));
  });
}

jrc_status jrc_estimate_pdc(const jrc_scenario* s, int64_t n_trials, uint64_t seed,
                            int threads, jrc_estimate* out) {
  return guarded([&] {
    require(out, "out");
    const auto& v = scenario(s);
    v.validate();
    *out = to_c(jrc::estimate_pdc(v.system, v.target, v.clutter, {v.half_extent}, v.kappa,
                                  v.epsilon, mc_options(n_trials, seed, threads)));
  });
}

jrc_status jrc_estimate_throughput(const jrc_scenario* s, int64_t n_trials, uint64_t seed,
                                   int threads, jrc_estimate* out) {
  return guarded([&] {
    require(out, "out");
    const auto& v = scenario(s);
    v.validate();
    *out = to_c(jrc::estimate_throughput(v.system, v.target, v.clutter, {v.half_extent},
                                         v.kappa, v.epsilon,
                                         mc_options(n_trials, seed, threads)));
  });
}

jrc_status jrc_metadist(const jrc_scenario* s, jrc_branch branch, const double* z, size_t n,
                        int threads, double* F_out, jrc_curve_info* info) {
  return guarded([&] {
    require(z, "z");
    require(F_out, "F_out");
    const auto& v = scenario(s);
    v.validate();
    if (branch != JRC_BRANCH_APPROX && branch != JRC_BRANCH_EXACT) {
      throw jrc::Error(jrc::ErrorCode::invalid_argument, "unknown meta-distribution branch");
    }
    const auto b = branch == JRC_BRANCH_EXACT ? jrc::MomentBranch::exact_cell_integral
                                              : jrc::MomentBranch::path_loss_approx;
    const auto curve = jrc::meta_distribution(v.system, v.target, v.clutter, v.kappa, v.epsilon,
                                              b, {z, n}, threads);
    std::copy(curve.ccdf_values.begin(), curve.ccdf_values.end(), F_out);
    if (info != nullptr) {
      *info = {curve.u_max, curve.tapered ? 1 : 0, curve.max_adjustment,
               curve.moment_evaluations};
    }
  });
}

jrc_status jrc_metadist_empirical(const jrc_scenario* s, const double* z, size_t n,
                                  int64_t n_samples, uint64_t seed, int threads,
                                  double* F_out) {
  return guarded([&] {
    require(z, "z");
    require(F_out, "F_out");
    const auto& v = scenario(s);
    v.validate();
    const auto samples = jrc::sample_conditional_pdc(v.system, v.target, v.clutter,
                                                     {v.half_extent}, v.kappa, v.epsilon,
                                                     n_samples, seed, threads);
    const auto curve = jrc::empirical_ccdf(samples, {z, n}, v.system.gamma);
    std::copy(curve.ccdf_values.begin(), curve.ccdf_values.end(), F_out);
  });
}

double jrc_reliability_ceiling(const double* z, const double* F, size_t n) {
  if (z == nullptr || F == nullptr) return 0.0;
  jrc::MetaDistCurve curve;
  curve.z_grid.assign(z, z + n);
  curve.ccdf_values.assign(F, F + n);
  return jrc::reliability_ceiling(curve);
}

}  // extern "C"
