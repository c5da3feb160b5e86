#include <fedsched/core/types.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fedsched::core {

int JobSpec::plan_size(int device_count) const {
  const auto n = static_cast<int>(std::llround(participation * device_count));
  return std::max(1, n);
}

void JobSpec::validate(int device_count) const {
  if (job < 0) {
    throw std::invalid_argument("job id must be non-negative");
  }
  if (local_epochs < 1) {
    throw std::invalid_argument("local_epochs must be >= 1");
  }
  if (!(participation > 0.0) || participation > 1.0) {
    throw std::invalid_argument("participation must be in (0, 1]");
  }
  if (!(target_loss > 0.0)) {
    throw std::invalid_argument("target_loss must be positive");
  }
  if (!(curve.b0 > 0.0) || curve.b1 < 0.0 || curve.b2 < 0.0) {
    throw std::invalid_argument("curve coefficients must satisfy b0 > 0, b1 >= 0, b2 >= 0");
  }
  if (max_rounds < 1) {
    throw std::invalid_argument("max_rounds must be >= 1");
  }
  if (device_count > 0 && plan_size(device_count) > device_count) {
    throw std::invalid_argument("plan size exceeds device count");
  }
}

SchedulingPlan make_plan(JobId job, int round, std::vector<DeviceId> devices) {
  std::sort(devices.begin(), devices.end());
  if (std::adjacent_find(devices.begin(), devices.end()) != devices.end()) {
    throw std::invalid_argument("plan contains duplicate devices");
  }
  if (!devices.empty() && devices.front() < 0) {
    throw std::invalid_argument("plan contains negative device id");
  }
  return SchedulingPlan{job, round, std::move(devices)};
}

void validate_plan(const SchedulingPlan& plan, int device_count, int expected_size) {
  if (plan.devices.empty()) {
    throw std::invalid_argument("plan is empty");
  }
  if (expected_size >= 0 && static_cast<int>(plan.devices.size()) != expected_size) {
    throw std::invalid_argument("plan has " + std::to_string(plan.devices.size()) +
                                " devices, expected " + std::to_string(expected_size));
  }
  DeviceId prev = -1;
  for (const DeviceId d : plan.devices) {
    if (d < 0 || d >= device_count) {
      throw std::out_of_range("device id " + std::to_string(d) + " outside [0, " +
                              std::to_string(device_count) + ")");
    }
    if (d <= prev) {
      throw std::invalid_argument("plan devices must be strictly ascending");
    }
    prev = d;
  }
}

FrequencyMatrix::FrequencyMatrix(int num_jobs, int num_devices)
    : jobs_(num_jobs), devices_(num_devices),
      counts_(static_cast<std::size_t>(num_jobs) * static_cast<std::size_t>(num_devices), 0) {
  if (num_jobs < 1 || num_devices < 1) {
    throw std::invalid_argument("FrequencyMatrix dimensions must be positive");
  }
}

std::int64_t FrequencyMatrix::count(JobId job, DeviceId device) const {
  return counts_.at(static_cast<std::size_t>(job) * devices_ + static_cast<std::size_t>(device));
}

std::span<const std::int64_t> FrequencyMatrix::row(JobId job) const {
  if (job < 0 || job >= jobs_) {
    throw std::out_of_range("job id outside frequency matrix");
  }
  return {counts_.data() + static_cast<std::size_t>(job) * devices_,
          static_cast<std::size_t>(devices_)};
}

FrequencyMatrix update_frequency(const FrequencyMatrix& freq, const SchedulingPlan& plan) {
  validate_plan(plan, freq.devices_);
  if (plan.job < 0 || plan.job >= freq.jobs_) {
    throw std::out_of_range("plan job outside frequency matrix");
  }
  FrequencyMatrix next = freq;
  for (const DeviceId d : plan.devices) {
    ++next.counts_[static_cast<std::size_t>(plan.job) * freq.devices_ + static_cast<std::size_t>(d)];
  }
  return next;
}

int PlanEncoding::popcount() const {
  int ones = 0;
  for (const auto b : bits) {
    ones += (b != 0);
  }
  return ones;
}

PlanEncoding encode_plan(const SchedulingPlan& plan, int device_count) {
  validate_plan(plan, device_count);
  PlanEncoding enc;
  enc.bits.assign(static_cast<std::size_t>(device_count), 0);
  for (const DeviceId d : plan.devices) {
    enc.bits[static_cast<std::size_t>(d)] = 1;
  }
  return enc;
}

SchedulingPlan decode_plan(const PlanEncoding& enc, JobId job, int round) {
  std::vector<DeviceId> devices;
  for (std::size_t k = 0; k < enc.bits.size(); ++k) {
    if (enc.bits[k] != 0) {
      devices.push_back(static_cast<DeviceId>(k));
    }
  }
  return SchedulingPlan{job, round, std::move(devices)};
}

}  // namespace fedsched::core
