#include <fedsched/algo/scheduler.hpp>

#include <algorithm>

namespace fedsched::algo {

double estimated_time_cost(const SchedulerContext& ctx, std::span<const core::DeviceId> devices) {
  double worst = 0.0;
  for (const core::DeviceId d : devices) {
    worst = std::max(worst,
                     core::expected_time(ctx.profiles[static_cast<std::size_t>(d)], ctx.job));
  }
  return worst;
}

double estimated_round_cost(const SchedulerContext& ctx, std::span<const core::DeviceId> devices) {
  const double t = estimated_time_cost(ctx, devices);
  const double f = core::fairness_from_counts(ctx.freq.row(ctx.job.job), devices);
  return ctx.weights.alpha * (t / ctx.weights.time_norm) + ctx.weights.beta * f;
}

double estimated_total_cost(const SchedulerContext& ctx, std::span<const core::DeviceId> devices) {
  double total = estimated_round_cost(ctx, devices);
  for (const core::RoundCost& c : ctx.latest_costs) {
    if (c.job != ctx.job.job) {
      total += c.combined;
    }
  }
  return total;
}

}  // namespace fedsched::algo
