#include <fedsched/core/cost.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fedsched::core {

void CostWeights::validate() const {
  if (alpha < 0.0 || beta < 0.0 || !(alpha + beta > 0.0)) {
    throw std::invalid_argument("cost weights must be non-negative with alpha + beta > 0");
  }
  if (!(time_norm > 0.0)) {
    throw std::invalid_argument("time_norm must be positive");
  }
}

double time_cost(const SchedulingPlan& plan, std::span<const TimeSample> samples) {
  if (plan.devices.empty()) {
    throw std::invalid_argument("time_cost of an empty plan");
  }
  double worst = -1.0;
  for (const DeviceId d : plan.devices) {
    bool found = false;
    for (const TimeSample& s : samples) {
      if (s.device == d && s.job == plan.job) {
        worst = std::max(worst, s.minutes);
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::runtime_error("incomplete round: no time sample for device " +
                               std::to_string(d));
    }
  }
  return worst;
}

double fairness_from_counts(std::span<const std::int64_t> counts,
                            std::span<const DeviceId> extra) {
  const auto k = static_cast<std::int64_t>(counts.size());
  if (k == 0) {
    throw std::invalid_argument("fairness over an empty device set");
  }
  // Integer sums keep K*sum_sq - sum^2 exact; the only rounding is the
  // final division.
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  for (const std::int64_t s : counts) {
    sum += s;
    sum_sq += s * s;
  }
  for (const DeviceId d : extra) {
    const std::int64_t s = counts[static_cast<std::size_t>(d)];
    sum += 1;
    sum_sq += 2 * s + 1;
  }
  const double numer = static_cast<double>(k * sum_sq - sum * sum);
  return numer / (static_cast<double>(k) * static_cast<double>(k));
}

double fairness_cost(const FrequencyMatrix& freq, JobId job, const SchedulingPlan& prospective) {
  validate_plan(prospective, freq.num_devices());
  return fairness_from_counts(freq.row(job), prospective.devices);
}

RoundCost round_cost(const SchedulingPlan& plan, std::span<const TimeSample> samples,
                     const FrequencyMatrix& freq, const CostWeights& weights) {
  weights.validate();
  RoundCost cost;
  cost.job = plan.job;
  cost.round = plan.round;
  cost.time_cost = time_cost(plan, samples);
  cost.fairness_cost = fairness_cost(freq, plan.job, plan);
  cost.combined = weights.alpha * (cost.time_cost / weights.time_norm) +
                  weights.beta * cost.fairness_cost;
  return cost;
}

double total_cost(std::span<const RoundCost> latest, int num_jobs) {
  if (static_cast<int>(latest.size()) != num_jobs) {
    throw std::invalid_argument("total_cost needs exactly one entry per job");
  }
  double total = 0.0;
  for (int m = 0; m < num_jobs; ++m) {
    if (latest[static_cast<std::size_t>(m)].job != m) {
      throw std::invalid_argument("total_cost entries must be indexed by job id");
    }
    total += latest[static_cast<std::size_t>(m)].combined;
  }
  return total;
}

}  // namespace fedsched::core
