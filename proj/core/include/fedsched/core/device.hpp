#pragma once

#include <fedsched/core/rng.hpp>
#include <fedsched/core/types.hpp>

#include <vector>

namespace fedsched::core {

/// Per-device capability. Round time for a job is shift + exponential tail:
///   shift = epochs * shift_coeff * samples
///   rate  = rate_coeff / (epochs * samples)
struct DeviceProfile {
  DeviceId device = 0;
  double shift_coeff = 0.001;       // minutes per epoch-sample
  double rate_coeff = 1.0;          // capability fluctuation rate
  std::vector<int> data_sizes;      // samples held per job

  void validate(int num_jobs) const;
};

struct TimeSample {
  JobId job = 0;
  DeviceId device = 0;
  int round = 0;
  double minutes = 0.0;
};

/// Deterministic floor of the execution-time distribution.
double shift_minutes(const DeviceProfile& profile, const JobSpec& job);

/// Closed-form mean: shift + epochs * samples / rate_coeff.
double expected_time(const DeviceProfile& profile, const JobSpec& job);

/// One draw from the shifted-exponential round-time distribution.
TimeSample sample_time(const DeviceProfile& profile, const JobSpec& job, int round,
                       RngStream& rng);

struct PopulationRanges {
  double a_min = 0.001;
  double a_max = 0.01;
  double mu_min = 1.0;
  double mu_max = 10.0;
  int data_min = 200;
  int data_max = 1200;

  void validate() const;
};

/// Synthetic heterogeneous population: shift/rate coefficients log-uniform,
/// per-job data sizes uniform integers.
std::vector<DeviceProfile> generate_population(int num_devices, int num_jobs,
                                               const PopulationRanges& ranges, RngStream& rng);

}  // namespace fedsched::core
