#include <fedsched/core/device.hpp>

#include <stdexcept>
#include <string>

namespace fedsched::core {

void DeviceProfile::validate(int num_jobs) const {
  if (device < 0) {
    throw std::invalid_argument("device id must be non-negative");
  }
  if (!(shift_coeff > 0.0)) {
    throw std::invalid_argument("shift_coeff must be positive");
  }
  if (!(rate_coeff > 0.0)) {
    throw std::invalid_argument("rate_coeff must be positive");
  }
  if (static_cast<int>(data_sizes.size()) != num_jobs) {
    throw std::invalid_argument("device " + std::to_string(device) + " has " +
                                std::to_string(data_sizes.size()) + " data sizes, expected " +
                                std::to_string(num_jobs));
  }
  for (const int d : data_sizes) {
    if (d < 1) {
      throw std::invalid_argument("data sizes must be >= 1");
    }
  }
}

double shift_minutes(const DeviceProfile& profile, const JobSpec& job) {
  const double samples = profile.data_sizes.at(static_cast<std::size_t>(job.job));
  return job.local_epochs * profile.shift_coeff * samples;
}

double expected_time(const DeviceProfile& profile, const JobSpec& job) {
  const double samples = profile.data_sizes.at(static_cast<std::size_t>(job.job));
  return shift_minutes(profile, job) + job.local_epochs * samples / profile.rate_coeff;
}

TimeSample sample_time(const DeviceProfile& profile, const JobSpec& job, int round,
                       RngStream& rng) {
  const double samples = profile.data_sizes.at(static_cast<std::size_t>(job.job));
  const double rate = profile.rate_coeff / (job.local_epochs * samples);
  const double minutes = shift_minutes(profile, job) + rng.exponential(rate);
  return TimeSample{job.job, profile.device, round, minutes};
}

void PopulationRanges::validate() const {
  if (!(a_min > 0.0) || a_max < a_min) {
    throw std::invalid_argument("a_range must satisfy 0 < a_min <= a_max");
  }
  if (!(mu_min > 0.0) || mu_max < mu_min) {
    throw std::invalid_argument("mu_range must satisfy 0 < mu_min <= mu_max");
  }
  if (data_min < 1 || data_max < data_min) {
    throw std::invalid_argument("data_range must satisfy 1 <= data_min <= data_max");
  }
}

std::vector<DeviceProfile> generate_population(int num_devices, int num_jobs,
                                               const PopulationRanges& ranges, RngStream& rng) {
  ranges.validate();
  if (num_devices < 1 || num_jobs < 1) {
    throw std::invalid_argument("population needs at least one device and one job");
  }
  std::vector<DeviceProfile> population;
  population.reserve(static_cast<std::size_t>(num_devices));
  for (DeviceId k = 0; k < num_devices; ++k) {
    DeviceProfile p;
    p.device = k;
    p.shift_coeff = rng.log_uniform(ranges.a_min, ranges.a_max);
    p.rate_coeff = rng.log_uniform(ranges.mu_min, ranges.mu_max);
    p.data_sizes.resize(static_cast<std::size_t>(num_jobs));
    for (int m = 0; m < num_jobs; ++m) {
      p.data_sizes[static_cast<std::size_t>(m)] =
          static_cast<int>(rng.uniform_int(ranges.data_min, ranges.data_max));
    }
    population.push_back(std::move(p));
  }
  return population;
}

}  // namespace fedsched::core
