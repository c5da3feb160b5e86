#include <fedsched/algo/baselines.hpp>

#include <algorithm>
#include <stdexcept>

namespace fedsched::algo {

namespace {

void check_context(const SchedulerContext& ctx) {
  if (ctx.plan_size < 1 ||
      static_cast<int>(ctx.available.size()) < ctx.plan_size) {
    throw std::invalid_argument("scheduler context: not enough available devices");
  }
}

double device_expected_time(const SchedulerContext& ctx, core::DeviceId d) {
  return core::expected_time(ctx.profiles[static_cast<std::size_t>(d)], ctx.job);
}

/// Available devices sorted by (expected time, id) ascending.
std::vector<core::DeviceId> fastest_first(const SchedulerContext& ctx,
                                          std::span<const core::DeviceId> pool) {
  std::vector<core::DeviceId> order(pool.begin(), pool.end());
  std::sort(order.begin(), order.end(), [&](core::DeviceId a, core::DeviceId b) {
    const double ta = device_expected_time(ctx, a);
    const double tb = device_expected_time(ctx, b);
    if (ta != tb) {
      return ta < tb;
    }
    return a < b;
  });
  return order;
}

}  // namespace

core::SchedulingPlan random_schedule(const SchedulerContext& ctx) {
  check_context(ctx);
  auto picked = ctx.rng.sample_without_replacement(ctx.available, ctx.plan_size);
  return core::make_plan(ctx.job.job, ctx.round, std::move(picked));
}

core::SchedulingPlan greedy_schedule(const SchedulerContext& ctx) {
  check_context(ctx);
  auto order = fastest_first(ctx, ctx.available);
  order.resize(static_cast<std::size_t>(ctx.plan_size));
  return core::make_plan(ctx.job.job, ctx.round, std::move(order));
}

// --- Genetic ---

namespace {

using Bits = std::vector<std::uint8_t>;

Bits to_bits(std::span<const core::DeviceId> devices, int device_count) {
  Bits bits(static_cast<std::size_t>(device_count), 0);
  for (const core::DeviceId d : devices) {
    bits[static_cast<std::size_t>(d)] = 1;
  }
  return bits;
}

std::vector<core::DeviceId> to_devices(const Bits& bits) {
  std::vector<core::DeviceId> devices;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != 0) {
      devices.push_back(static_cast<core::DeviceId>(k));
    }
  }
  return devices;
}

/// Enforce exactly plan_size set bits, all on available devices.
void repair(Bits& bits, const SchedulerContext& ctx, const Bits& available_mask) {
  std::vector<std::size_t> ones;
  std::vector<std::size_t> addable;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != 0 && available_mask[k] == 0) {
      bits[k] = 0;  // never keep an occupied device
    }
    if (bits[k] != 0) {
      ones.push_back(k);
    } else if (available_mask[k] != 0) {
      addable.push_back(k);
    }
  }
  const auto target = static_cast<std::size_t>(ctx.plan_size);
  while (ones.size() > target) {
    const auto i = static_cast<std::size_t>(
        ctx.rng.uniform_int(0, static_cast<std::int64_t>(ones.size()) - 1));
    bits[ones[i]] = 0;
    addable.push_back(ones[i]);
    ones[i] = ones.back();
    ones.pop_back();
  }
  while (ones.size() < target) {
    const auto i = static_cast<std::size_t>(
        ctx.rng.uniform_int(0, static_cast<std::int64_t>(addable.size()) - 1));
    bits[addable[i]] = 1;
    ones.push_back(addable[i]);
    addable[i] = addable.back();
    addable.pop_back();
  }
}

}  // namespace

core::SchedulingPlan genetic_schedule(const SchedulerContext& ctx, const GeneticParams& params,
                                      std::span<const core::SchedulingPlan> seed_population) {
  check_context(ctx);
  const int device_count = ctx.freq.num_devices();
  const Bits available_mask = to_bits(ctx.available, device_count);

  std::vector<Bits> population;
  population.reserve(static_cast<std::size_t>(params.population));
  for (const core::SchedulingPlan& seed : seed_population) {
    if (static_cast<int>(population.size()) >= params.population) {
      break;
    }
    core::validate_plan(seed, device_count, ctx.plan_size);
    population.push_back(to_bits(seed.devices, device_count));
  }
  while (static_cast<int>(population.size()) < params.population) {
    auto picked = ctx.rng.sample_without_replacement(ctx.available, ctx.plan_size);
    population.push_back(to_bits(picked, device_count));
  }

  auto fitness = [&](const Bits& bits) {
    return -estimated_total_cost(ctx, to_devices(bits));
  };

  std::vector<double> scores(population.size());
  for (std::size_t i = 0; i < population.size(); ++i) {
    scores[i] = fitness(population[i]);
  }

  auto best_index = [&]() {
    std::size_t best = 0;
    for (std::size_t i = 1; i < population.size(); ++i) {
      if (scores[i] > scores[best]) {
        best = i;
      }
    }
    return best;
  };

  Bits best_ever = population[best_index()];
  double best_ever_score = scores[best_index()];

  for (int gen = 0; gen < params.generations; ++gen) {
    std::vector<Bits> next;
    next.reserve(population.size());
    for (int e = 0; e < params.elites && e < static_cast<int>(population.size()); ++e) {
      next.push_back(best_ever);
    }
    auto tournament_pick = [&]() -> const Bits& {
      std::size_t winner = static_cast<std::size_t>(
          ctx.rng.uniform_int(0, static_cast<std::int64_t>(population.size()) - 1));
      for (int t = 1; t < params.tournament; ++t) {
        const auto challenger = static_cast<std::size_t>(
            ctx.rng.uniform_int(0, static_cast<std::int64_t>(population.size()) - 1));
        if (scores[challenger] > scores[winner]) {
          winner = challenger;
        }
      }
      return population[winner];
    };
    while (next.size() < population.size()) {
      const Bits& pa = tournament_pick();
      const Bits& pb = tournament_pick();
      Bits child(pa.size());
      for (std::size_t k = 0; k < child.size(); ++k) {
        child[k] = ctx.rng.bernoulli(0.5) ? pa[k] : pb[k];
      }
      for (std::size_t k = 0; k < child.size(); ++k) {
        if (available_mask[k] != 0 && ctx.rng.bernoulli(params.mutation_rate)) {
          child[k] = static_cast<std::uint8_t>(1 - child[k]);
        }
      }
      repair(child, ctx, available_mask);
      next.push_back(std::move(child));
    }
    population = std::move(next);
    for (std::size_t i = 0; i < population.size(); ++i) {
      scores[i] = fitness(population[i]);
      if (scores[i] > best_ever_score) {
        best_ever_score = scores[i];
        best_ever = population[i];
      }
    }
  }

  return core::make_plan(ctx.job.job, ctx.round, to_devices(best_ever));
}

// --- FedCS ---

double fedcs_deadline(const SchedulerContext& ctx, int samples) {
  check_context(ctx);
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const auto plan = ctx.rng.sample_without_replacement(ctx.available, ctx.plan_size);
    times.push_back(estimated_time_cost(ctx, plan));
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

core::SchedulingPlan fedcs_schedule(const SchedulerContext& ctx, double deadline) {
  check_context(ctx);
  const int pool_size =
      std::min(2 * ctx.plan_size, static_cast<int>(ctx.available.size()));
  auto pool = ctx.rng.sample_without_replacement(ctx.available, pool_size);
  const auto order = fastest_first(ctx, pool);

  // Fastest-first keeps the running round estimate equal to the last added
  // device's expected time.
  std::vector<core::DeviceId> chosen;
  chosen.reserve(static_cast<std::size_t>(ctx.plan_size));
  for (const core::DeviceId d : order) {
    if (static_cast<int>(chosen.size()) == ctx.plan_size) {
      break;
    }
    if (device_expected_time(ctx, d) <= deadline) {
      chosen.push_back(d);
    }
  }
  for (const core::DeviceId d : order) {
    if (static_cast<int>(chosen.size()) == ctx.plan_size) {
      break;
    }
    if (std::find(chosen.begin(), chosen.end(), d) == chosen.end()) {
      chosen.push_back(d);
    }
  }
  return core::make_plan(ctx.job.job, ctx.round, std::move(chosen));
}

core::SchedulingPlan RandomScheduler::schedule(const SchedulerContext& ctx) {
  return random_schedule(ctx);
}

core::SchedulingPlan GreedyScheduler::schedule(const SchedulerContext& ctx) {
  return greedy_schedule(ctx);
}

core::SchedulingPlan GeneticScheduler::schedule(const SchedulerContext& ctx) {
  return genetic_schedule(ctx, params_);
}

core::SchedulingPlan FedcsScheduler::schedule(const SchedulerContext& ctx) {
  auto [it, inserted] = deadlines_.try_emplace(ctx.job.job, 0.0);
  if (inserted) {
    it->second = fedcs_deadline(ctx, params_.deadline_samples);
  }
  return fedcs_schedule(ctx, it->second);
}

}  // namespace fedsched::algo
