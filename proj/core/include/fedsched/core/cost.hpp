#pragma once

#include <fedsched/core/device.hpp>
#include <fedsched/core/types.hpp>

#include <span>

namespace fedsched::core {

struct CostWeights {
  double alpha = 1.0;      // weight of (normalized) time cost
  double beta = 1.0;       // weight of fairness cost
  double time_norm = 1.0;  // divisor bringing time cost to O(1)

  void validate() const;
};

struct RoundCost {
  JobId job = 0;
  int round = -1;  // -1: no round executed yet
  double time_cost = 0.0;
  double fairness_cost = 0.0;
  double combined = 0.0;
};

/// Round execution time: the slowest scheduled device.
/// `samples` must cover exactly the plan's devices.
double time_cost(const SchedulingPlan& plan, std::span<const TimeSample> samples);

/// Population variance of per-device scheduling counts for `job`, with the
/// prospective plan counted as if already executed. Exact for integer counts.
double fairness_cost(const FrequencyMatrix& freq, JobId job, const SchedulingPlan& prospective);

/// Variance of `counts` after adding one to each index in `extra`.
double fairness_from_counts(std::span<const std::int64_t> counts, std::span<const DeviceId> extra);

RoundCost round_cost(const SchedulingPlan& plan, std::span<const TimeSample> samples,
                     const FrequencyMatrix& freq, const CostWeights& weights);

/// Sum of the latest combined costs across all jobs; `latest[m].job` must equal m.
double total_cost(std::span<const RoundCost> latest, int num_jobs);

}  // namespace fedsched::core
