#include "dyna/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dyna {

void CurrentProfile::validate() const {
  if (segment_values.empty() || segment_values.size() != segment_end_times.size())
    throw std::invalid_argument("CurrentProfile: values/end_times must be non-empty and equal length");
  double prev = 0.0;
  for (double t : segment_end_times) {
    if (!(t > prev))
      throw std::invalid_argument("CurrentProfile: end times must be strictly increasing and positive");
    prev = t;
  }
}

void ProfileSamplerConfig::validate() const {
  if (!(0.0 < i_min && i_min < i_max))
    throw std::invalid_argument("ProfileSamplerConfig: need 0 < i_min < i_max");
  if (n_transitions_min < 0 || n_transitions_min > n_transitions_max)
    throw std::invalid_argument("ProfileSamplerConfig: need 0 <= n_transitions_min <= n_transitions_max");
  if (!(horizon_max > 0.0))
    throw std::invalid_argument("ProfileSamplerConfig: horizon_max must be positive");
}

CurrentProfile sample_profile(Rng& rng, const ProfileSamplerConfig& cfg) {
  cfg.validate();
  const int k = static_cast<int>(rng.uniform_int(cfg.n_transitions_min, cfg.n_transitions_max));

  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(k) + 1);
  while (static_cast<int>(times.size()) < k) {
    double t = rng.uniform(0.0, cfg.horizon_max);
    if (t > 0.0 && t < cfg.horizon_max &&
        std::find(times.begin(), times.end(), t) == times.end())
      times.push_back(t);
  }
  std::sort(times.begin(), times.end());
  times.push_back(cfg.horizon_max);

  CurrentProfile p;
  p.segment_end_times = std::move(times);
  p.segment_values.reserve(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j)
    p.segment_values.push_back(rng.uniform(cfg.i_min, cfg.i_max));
  return p;
}

double current_at(const CurrentProfile& profile, double t) {
  const double horizon = profile.horizon();
  if (!(t >= 0.0) || t > horizon)
    throw std::out_of_range("current_at: t=" + std::to_string(t) +
                            " outside [0, " + std::to_string(horizon) + "]");
  if (t == horizon) return profile.segment_values.back();
  // First segment whose end lies strictly beyond t: [prev_end, end) owns t.
  auto it = std::upper_bound(profile.segment_end_times.begin(),
                             profile.segment_end_times.end(), t);
  const auto idx = static_cast<std::size_t>(it - profile.segment_end_times.begin());
  return profile.segment_values[std::min(idx, profile.segment_values.size() - 1)];
}

CurrentProfile crop_extend_to(const CurrentProfile& profile, double new_horizon) {
  if (!(new_horizon > 0.0))
    throw std::invalid_argument("crop_extend_to: new horizon must be positive");
  CurrentProfile out;
  if (new_horizon <= profile.horizon()) {
    for (std::size_t j = 0; j < profile.segment_values.size(); ++j) {
      out.segment_values.push_back(profile.segment_values[j]);
      if (profile.segment_end_times[j] >= new_horizon) {
        out.segment_end_times.push_back(new_horizon);
        break;
      }
      out.segment_end_times.push_back(profile.segment_end_times[j]);
    }
  } else {
    out = profile;
    out.segment_end_times.back() = new_horizon;
  }
  return out;
}

CurrentProfile crop_extend(const CurrentProfile& profile, double factor) {
  if (!(factor > 0.0))
    throw std::invalid_argument("crop_extend: factor must be positive");
  return crop_extend_to(profile, factor * profile.horizon());
}

std::vector<double> to_samples(const CurrentProfile& profile, double period) {
  if (!(period > 0.0))
    throw std::invalid_argument("to_samples: period must be positive");
  const double horizon = profile.horizon();
  // Epsilon guards the j*period==horizon boundary against division round-off.
  const auto n = static_cast<std::size_t>(std::floor(horizon / period + 1e-9));
  std::vector<double> samples(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    samples[j] = current_at(profile, std::min(static_cast<double>(j) * period, horizon));
  return samples;
}

}  // namespace dyna
