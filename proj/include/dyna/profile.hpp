#pragma once

#include <vector>

#include "dyna/rng.hpp"

namespace dyna {

// Piecewise-constant current load. Segment j holds segment_values[j] on the
// half-open interval [segment_end_times[j-1], segment_end_times[j]); the last
// end time is the horizon.
struct CurrentProfile {
  std::vector<double> segment_values;     // amps
  std::vector<double> segment_end_times;  // seconds, strictly increasing

  double horizon() const { return segment_end_times.back(); }
  int n_transitions() const { return static_cast<int>(segment_values.size()) - 1; }
  void validate() const;  // throws std::invalid_argument
};

struct ProfileSamplerConfig {
  double i_min = 0.5;   // amps
  double i_max = 3.0;   // amps
  int n_transitions_min = 0;
  int n_transitions_max = 5;
  double horizon_max = 20000.0;  // seconds

  void validate() const;
};

// Draws k ~ U{n_transitions_min..n_transitions_max} transitions at distinct
// uniform times on (0, horizon_max), and k+1 segment values ~ U[i_min, i_max].
CurrentProfile sample_profile(Rng& rng, const ProfileSamplerConfig& cfg);

// Load at time t, 0 <= t <= horizon. t == horizon returns the last value.
double current_at(const CurrentProfile& profile, double t);

// Rescales the horizon to exactly new_horizon: truncates segments past it, or
// extends the last segment at its value.
CurrentProfile crop_extend_to(const CurrentProfile& profile, double new_horizon);

// crop_extend_to(profile, factor * horizon).
CurrentProfile crop_extend(const CurrentProfile& profile, double factor);

// Uniform sampling on the grid {0, period, 2*period, ...}; length
// floor(horizon / period) + 1.
std::vector<double> to_samples(const CurrentProfile& profile, double period);

}  // namespace dyna
