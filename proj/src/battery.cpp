#include "dyna/battery.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dyna {

void DegradationParams::validate() const {
  if (!(q_max > 0.0)) throw std::invalid_argument("DegradationParams: q_max must be > 0");
  if (!(r0 >= 0.0)) throw std::invalid_argument("DegradationParams: r0 must be >= 0");
}

int SimConfig::inner_steps_per_sample() const {
  return static_cast<int>(std::llround(sampling_period / inner_step));
}

void SimConfig::validate() const {
  if (!(inner_step > 0.0) || !(sampling_period > 0.0))
    throw std::invalid_argument("SimConfig: steps must be positive");
  const int n = inner_steps_per_sample();
  if (n < 1 || std::abs(static_cast<double>(n) * inner_step - sampling_period) > 1e-9)
    throw std::invalid_argument("SimConfig: inner_step must divide sampling_period");
  if (!(v_cutoff < v_full))
    throw std::invalid_argument("SimConfig: v_cutoff must be below v_full");
  if (!(surr.f_surface > 0.0 && surr.f_surface < 1.0))
    throw std::invalid_argument("SimConfig: f_surface must be in (0, 1)");
  if (!(surr.x_clip > 0.0 && surr.x_clip <= 0.01))
    throw std::invalid_argument("SimConfig: x_clip must be in (0, 0.01]");
  if (!(max_duration > 0.0))
    throw std::invalid_argument("SimConfig: max_duration must be positive");
}

double ocv(double x, const SimConfig& cfg) {
  if (!std::isfinite(x)) throw std::domain_error("ocv: non-finite state of charge");
  const SurrogateConstants& s = cfg.surr;
  // Clamp keeps ln(x) finite below and stays clear of the saturation-term
  // singularity at 1 + 2*x_clip; full charge (x = 1) evaluates unclamped.
  const double xc = std::clamp(x, s.x_clip, 1.0);
  return s.u0 + s.a_lin * xc + s.a_log * std::log(xc) -
         s.a_sat * std::log(1.0 + 2.0 * s.x_clip - xc);
}

BatteryState initial_state(const DegradationParams& params, const SimConfig& cfg) {
  params.validate();
  BatteryState st;
  st.q_surface = cfg.surr.f_surface * params.q_max;
  st.q_bulk = (1.0 - cfg.surr.f_surface) * params.q_max;
  st.v_lag = 0.0;
  st.t = 0.0;
  return st;
}

BatteryState step(const BatteryState& state, double i_load, double dt,
                  [[maybe_unused]] const DegradationParams& params, const SimConfig& cfg) {
  const SurrogateConstants& s = cfg.surr;
  const double flux = s.d_diff * (state.q_bulk / (1.0 - s.f_surface) -
                                  state.q_surface / s.f_surface);
  const double transfer = dt * flux;
  const double drain = dt * i_load;

  BatteryState next;
  next.q_surface = std::max(0.0, state.q_surface - drain + transfer);
  next.q_bulk = std::max(0.0, state.q_bulk - transfer);
  next.v_lag = state.v_lag + dt * (i_load * s.r_lag - state.v_lag) / s.tau_lag;
  next.t = state.t + dt;
  return next;
}

double terminal_voltage(const BatteryState& state, double i_load,
                        const DegradationParams& params, const SimConfig& cfg) {
  const double x = state.q_surface / (cfg.surr.f_surface * params.q_max);
  return ocv(x, cfg) - i_load * params.r0 - state.v_lag;
}

VoltageCurve simulate(const CurrentProfile& profile, const DegradationParams& params,
                      const SimConfig& cfg) {
  profile.validate();
  params.validate();
  cfg.validate();
  if (!(profile.horizon() > 0.0))
    throw std::invalid_argument("simulate: profile horizon must be positive");

  const double t_end = std::min(profile.horizon(), cfg.max_duration);
  const auto n_samples = static_cast<std::size_t>(
      std::floor(t_end / cfg.sampling_period + 1e-9));
  const int inner = cfg.inner_steps_per_sample();

  VoltageCurve curve;
  curve.t0 = 0.0;
  curve.sampling_period = cfg.sampling_period;
  curve.v.reserve(n_samples + 1);

  BatteryState state = initial_state(params, cfg);
  double v = terminal_voltage(state, current_at(profile, 0.0), params, cfg);
  curve.v.push_back(v);
  if (v <= cfg.v_cutoff) {
    curve.eod_reached = true;
    return curve;
  }

  for (std::size_t k = 1; k <= n_samples; ++k) {
    for (int j = 0; j < inner; ++j) {
      const double i = current_at(profile, std::min(state.t, profile.horizon()));
      state = step(state, i, cfg.inner_step, params, cfg);
    }
    const double t_sample = std::min(static_cast<double>(k) * cfg.sampling_period,
                                     profile.horizon());
    v = terminal_voltage(state, current_at(profile, t_sample), params, cfg);
    curve.v.push_back(v);
    if (v <= cfg.v_cutoff) {
      curve.eod_reached = true;
      break;
    }
  }
  return curve;
}

std::optional<double> eod_time(const VoltageCurve& curve, double threshold) {
  if (curve.v.empty()) throw std::invalid_argument("eod_time: empty curve");
  for (std::size_t k = 0; k < curve.v.size(); ++k)
    if (curve.v[k] <= threshold) return curve.time_at(k);
  return std::nullopt;
}

}  // namespace dyna
