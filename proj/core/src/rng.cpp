#include <fedsched/core/rng.hpp>

#include <cmath>
#include <stdexcept>

namespace fedsched::core {

std::int64_t RngStream::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw std::invalid_argument("uniform_int: empty range");
  }
  const auto span = static_cast<std::uint64_t>(hi - lo);
  if (span == 0) {
    return lo;
  }
  // Power-of-two mask rejection.
  std::uint64_t mask = span;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  std::uint64_t draw;
  do {
    draw = gen_() & mask;
  } while (draw > span);
  return lo + static_cast<std::int64_t>(draw);
}

double RngStream::log_uniform(double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw std::invalid_argument("log_uniform: bounds must satisfy 0 < lo <= hi");
  }
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

double RngStream::exponential(double rate) {
  if (!(rate > 0.0)) {
    throw std::invalid_argument("exponential: rate must be positive");
  }
  // canonical() < 1, so log1p(-u) is finite.
  return -std::log1p(-canonical()) / rate;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, StreamPurpose purpose,
                          std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = splitmix64(master);
  s = splitmix64(s ^ static_cast<std::uint64_t>(purpose));
  s = splitmix64(s ^ a);
  s = splitmix64(s ^ b);
  return s;
}

}  // namespace fedsched::core
