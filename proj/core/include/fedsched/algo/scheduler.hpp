#pragma once

#include <fedsched/core/cost.hpp>
#include <fedsched/core/device.hpp>
#include <fedsched/core/rng.hpp>
#include <fedsched/core/types.hpp>

#include <memory>
#include <span>
#include <string_view>

namespace fedsched::algo {

/// Everything a scheduler may look at when choosing devices for one round.
/// `available` is sorted ascending and excludes devices occupied by other
/// jobs; the engine guarantees |available| >= plan_size >= 1.
struct SchedulerContext {
  const core::JobSpec& job;
  int round = 0;
  int plan_size = 1;
  std::span<const core::DeviceId> available;
  const core::FrequencyMatrix& freq;
  std::span<const core::DeviceProfile> profiles;
  core::CostWeights weights;                       // current job's weights
  std::span<const core::RoundCost> latest_costs;   // one per job, indexed by job id
  core::RngStream& rng;
};

/// Expected round time of a candidate device set: max of per-device means.
double estimated_time_cost(const SchedulerContext& ctx, std::span<const core::DeviceId> devices);

/// alpha * (expected time / norm) + beta * prospective fairness variance.
double estimated_round_cost(const SchedulerContext& ctx, std::span<const core::DeviceId> devices);

/// Candidate's round cost plus the latest combined costs of all other jobs.
double estimated_total_cost(const SchedulerContext& ctx, std::span<const core::DeviceId> devices);

class Scheduler {
 public:
  virtual ~Scheduler() = default;

  virtual std::string_view name() const = 0;

  /// Pick exactly ctx.plan_size devices from ctx.available.
  virtual core::SchedulingPlan schedule(const SchedulerContext& ctx) = 0;

  /// Realized total cost of an executed plan, reported by the engine after
  /// the round completes. Called exactly once per schedule(), in order.
  virtual void observe(const core::SchedulingPlan& plan, double realized_total_cost) {
    (void)plan;
    (void)realized_total_cost;
  }
};

}  // namespace fedsched::algo
