#pragma once

#include <fedsched/algo/scheduler.hpp>

#include <unordered_map>
#include <vector>

namespace fedsched::algo {

/// Uniform sample of plan_size devices without replacement.
core::SchedulingPlan random_schedule(const SchedulerContext& ctx);

/// The plan_size available devices with the smallest expected time,
/// ties broken by lower device id.
core::SchedulingPlan greedy_schedule(const SchedulerContext& ctx);

struct GeneticParams {
  int population = 20;
  int generations = 10;
  int tournament = 3;
  double mutation_rate = 0.05;
  int elites = 1;
};

/// Genetic search over plan encodings; fitness is the negated estimated
/// total cost. `seed_population` (optional) fills the first population
/// slots, e.g. to carry over a known-good plan.
core::SchedulingPlan genetic_schedule(const SchedulerContext& ctx, const GeneticParams& params,
                                      std::span<const core::SchedulingPlan> seed_population = {});

struct FedcsParams {
  /// Random plans drawn once per job to locate the deadline at the median
  /// expected round time. Odd count so the median is an observed value.
  int deadline_samples = 101;
};

/// Random candidate pool of size min(2 * plan_size, |available|), filled
/// fastest-first subject to a per-job round deadline; falls back to the
/// fastest pool devices when the deadline cannot be met.
core::SchedulingPlan fedcs_schedule(const SchedulerContext& ctx, double deadline);

/// Median expected round time over random plans; FedCS's per-job deadline.
double fedcs_deadline(const SchedulerContext& ctx, int samples);

class RandomScheduler final : public Scheduler {
 public:
  std::string_view name() const override { return "random"; }
  core::SchedulingPlan schedule(const SchedulerContext& ctx) override;
};

class GreedyScheduler final : public Scheduler {
 public:
  std::string_view name() const override { return "greedy"; }
  core::SchedulingPlan schedule(const SchedulerContext& ctx) override;
};

class GeneticScheduler final : public Scheduler {
 public:
  explicit GeneticScheduler(GeneticParams params = {}) : params_(params) {}
  std::string_view name() const override { return "genetic"; }
  core::SchedulingPlan schedule(const SchedulerContext& ctx) override;

 private:
  GeneticParams params_;
};

class FedcsScheduler final : public Scheduler {
 public:
  explicit FedcsScheduler(FedcsParams params = {}) : params_(params) {}
  std::string_view name() const override { return "fedcs"; }
  core::SchedulingPlan schedule(const SchedulerContext& ctx) override;

 private:
  FedcsParams params_;
  std::unordered_map<core::JobId, double> deadlines_;
};

}  // namespace fedsched::algo
