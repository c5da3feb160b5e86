#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace fedsched::core {

/// Deterministic random stream. Wraps mt19937_64 but draws all
/// distributions through explicit inverse-transform code, so two runs
/// with the same seed produce identical sequences regardless of the
/// standard library's distribution internals.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double canonical() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

  /// Uniform integer in [lo, hi], inclusive. Rejection sampling: unbiased.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Log-uniform draw over [lo, hi]; both bounds must be positive.
  double log_uniform(double lo, double hi);

  /// Exponential with the given rate, via inverse CDF.
  double exponential(double rate);

  bool bernoulli(double p) { return canonical() < p; }

  /// Sample `count` distinct elements from `pool`, order not preserved.
  template <typename T>
  std::vector<T> sample_without_replacement(std::span<const T> pool, int count) {
    std::vector<T> scratch(pool.begin(), pool.end());
    const auto n = static_cast<std::int64_t>(scratch.size());
    for (std::int64_t i = 0; i < count; ++i) {
      const auto j = uniform_int(i, n - 1);
      std::swap(scratch[static_cast<std::size_t>(i)], scratch[static_cast<std::size_t>(j)]);
    }
    scratch.resize(static_cast<std::size_t>(count));
    return scratch;
  }

 private:
  std::mt19937_64 gen_;
};

/// Substream purposes; each (purpose, job, round) triple gets an
/// independent stream so concurrent jobs cannot perturb each other's draws.
enum class StreamPurpose : std::uint64_t {
  Population = 1,
  DeviceTimes = 2,
  Scheduler = 3,
  Pretrain = 4,
  PolicyInit = 5,
};

/// Derive a substream seed by SplitMix64-style mixing.
std::uint64_t derive_seed(std::uint64_t master, StreamPurpose purpose,
                          std::uint64_t a = 0, std::uint64_t b = 0);

inline RngStream substream(std::uint64_t master, StreamPurpose purpose,
                           std::uint64_t a = 0, std::uint64_t b = 0) {
  return RngStream(derive_seed(master, purpose, a, b));
}

}  // namespace fedsched::core
