#include <fedsched/core/surrogate.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fedsched::core {

double curve_loss(const CurveCoeffs& curve, double effective_rounds) {
  return 1.0 / (curve.b0 * effective_rounds + curve.b1) + curve.b2;
}

JobProgress init_progress(const JobSpec& spec) {
  JobProgress p;
  p.job = spec.job;
  p.effective_rounds = 0.0;
  p.current_loss = curve_loss(spec.curve, 0.0);
  p.completed_rounds = 0;
  p.done = p.current_loss <= spec.target_loss;
  return p;
}

int ideal_rounds_to_target(const JobSpec& spec) {
  const CurveCoeffs& c = spec.curve;
  if (spec.target_loss <= c.b2) {
    throw std::domain_error("target loss at or below the curve asymptote is unreachable");
  }
  const double r = (1.0 / (spec.target_loss - c.b2) - c.b1) / c.b0;
  return std::max(0, static_cast<int>(std::ceil(r)));
}

int estimate_rounds(const JobSpec& spec) {
  const int ideal = ideal_rounds_to_target(spec);
  return std::max(1, static_cast<int>(std::ceil(1.3 * ideal)));
}

JobProgress advance(const JobProgress& progress, const JobSpec& spec, double fairness,
                    double lambda) {
  if (progress.done) {
    throw std::logic_error("advance on a finished job");
  }
  if (fairness < 0.0 || lambda < 0.0) {
    throw std::invalid_argument("fairness and lambda must be non-negative");
  }
  JobProgress next = progress;
  next.effective_rounds += 1.0 / (1.0 + lambda * fairness);
  next.completed_rounds += 1;
  next.current_loss = curve_loss(spec.curve, next.effective_rounds);
  next.done = next.current_loss <= spec.target_loss || next.completed_rounds >= spec.max_rounds;
  return next;
}

}  // namespace fedsched::core
