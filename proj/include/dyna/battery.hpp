#pragma once

#include <optional>
#include <vector>

#include "dyna/profile.hpp"

namespace dyna {

// Ageing state of a cell: total available charge and internal resistance.
struct DegradationParams {
  double q_max = 6000.0;  // coulombs, > 0
  double r0 = 0.1;        // ohms, >= 0

  void validate() const;
};

// Two-volume diffusion cell with an ohmic drop and a first-order voltage lag.
// The closed-form open-circuit voltage is
//   ocv(x) = u0 + a_lin*x + a_log*ln(x) + a_sat*(-ln(1 + 2*x_clip - x))
// evaluated on the surface state of charge x.
struct SurrogateConstants {
  double u0 = 3.41;       // volts
  double a_lin = 0.55;    // volts
  double a_log = 0.10;    // volts
  double a_sat = 0.06;    // volts
  double f_surface = 0.2;    // volume fraction of the surface reservoir
  double d_diff = 5e-3;      // 1/s, surface<->bulk diffusion rate
  double r_lag = 0.05;       // ohms, magnitude of the lagged drop
  double tau_lag = 100.0;    // seconds, lag time constant
  double x_clip = 0.01;      // OCV evaluation floor, in (0, 0.01]
};

struct SimConfig {
  double sampling_period = 2.0;   // seconds (0.5 Hz)
  double inner_step = 0.1;        // seconds; must divide sampling_period
  double v_full = 4.2;            // volts
  double v_cutoff = 3.0;          // volts
  double max_duration = 20000.0;  // seconds
  SurrogateConstants surr;

  int inner_steps_per_sample() const;
  void validate() const;  // throws std::invalid_argument
};

struct BatteryState {
  double q_surface = 0.0;  // coulombs
  double q_bulk = 0.0;     // coulombs
  double v_lag = 0.0;      // volts
  double t = 0.0;          // seconds
};

// Voltage samples on the uniform grid t0 + k*sampling_period. If eod_reached,
// the final sample is the first one at or below the cutoff.
struct VoltageCurve {
  double t0 = 0.0;
  double sampling_period = 2.0;
  std::vector<double> v;
  bool eod_reached = false;

  std::size_t size() const { return v.size(); }
  double time_at(std::size_t k) const { return t0 + static_cast<double>(k) * sampling_period; }
  double duration() const { return static_cast<double>(v.size() - 1) * sampling_period; }
};

// Equilibrium voltage at surface state-of-charge x (clamped to [x_clip, 1]).
// Strictly increasing on the clamped domain. Throws std::domain_error for
// non-finite x.
double ocv(double x, const SimConfig& cfg);

BatteryState initial_state(const DegradationParams& params, const SimConfig& cfg);

// One explicit-Euler step. The diffusion exchange uses a single shared
// transfer quantity so the surface/bulk updates are exactly antisymmetric;
// charges are floored at zero afterwards.
BatteryState step(const BatteryState& state, double i_load, double dt,
                  const DegradationParams& params, const SimConfig& cfg);

// ocv(q_surface / (f_surface * q_max)) - i_load * r0 - v_lag
double terminal_voltage(const BatteryState& state, double i_load,
                        const DegradationParams& params, const SimConfig& cfg);

// Integrates from full charge, sampling every sampling_period, until the
// first sample at or below v_cutoff (included) or until
// min(profile horizon, max_duration). Pure and deterministic.
VoltageCurve simulate(const CurrentProfile& profile, const DegradationParams& params,
                      const SimConfig& cfg);

// Time of the first sample with v <= threshold, if any.
std::optional<double> eod_time(const VoltageCurve& curve, double threshold);

}  // namespace dyna
