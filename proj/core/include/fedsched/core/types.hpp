#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fedsched::core {

using DeviceId = std::int32_t;
using JobId = std::int32_t;

/// Coefficients of the 1/(b0*r + b1) + b2 convergence curve of a job.
struct CurveCoeffs {
  double b0 = 0.1;
  double b1 = 1.0;
  double b2 = 0.0;
};

struct JobSpec {
  JobId job = 0;
  int local_epochs = 1;        // epochs per round on each device
  double participation = 0.1;  // fraction of the device pool per round, (0, 1]
  double target_loss = 0.1;
  CurveCoeffs curve;
  int max_rounds = 1;

  /// Devices scheduled per round: round(participation * device_count), at least 1.
  int plan_size(int device_count) const;

  /// Throws std::invalid_argument on any broken invariant.
  void validate(int device_count) const;
};

/// The set of devices assigned to one job for one round.
/// Canonical form keeps `devices` sorted ascending with no duplicates.
struct SchedulingPlan {
  JobId job = 0;
  int round = 0;
  std::vector<DeviceId> devices;
};

/// Canonicalizes (sorts) and rejects duplicates or negative ids.
SchedulingPlan make_plan(JobId job, int round, std::vector<DeviceId> devices);

/// Checks canonical form, device range, and (if expected_size >= 0) plan size.
void validate_plan(const SchedulingPlan& plan, int device_count, int expected_size = -1);

/// Per-(job, device) scheduling counts. Entries only ever grow.
class FrequencyMatrix {
 public:
  FrequencyMatrix() = default;
  FrequencyMatrix(int num_jobs, int num_devices);

  int num_jobs() const { return jobs_; }
  int num_devices() const { return devices_; }

  std::int64_t count(JobId job, DeviceId device) const;
  std::span<const std::int64_t> row(JobId job) const;

 private:
  friend FrequencyMatrix update_frequency(const FrequencyMatrix&, const SchedulingPlan&);
  int jobs_ = 0;
  int devices_ = 0;
  std::vector<std::int64_t> counts_;
};

/// Returns a copy of `freq` with every device in `plan` incremented by one.
FrequencyMatrix update_frequency(const FrequencyMatrix& freq, const SchedulingPlan& plan);

/// Dense 0/1 view of a plan over a fixed device pool; GP kernel input.
struct PlanEncoding {
  std::vector<std::uint8_t> bits;

  int popcount() const;
  bool operator==(const PlanEncoding&) const = default;
};

PlanEncoding encode_plan(const SchedulingPlan& plan, int device_count);
SchedulingPlan decode_plan(const PlanEncoding& enc, JobId job, int round);

}  // namespace fedsched::core
