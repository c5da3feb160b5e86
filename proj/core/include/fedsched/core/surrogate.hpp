#pragma once

#include <fedsched/core/types.hpp>

namespace fedsched::core {

/// Training progress driven by the convergence curve instead of real model
/// updates. `effective_rounds` advances by less than one whenever the round's
/// fairness variance is nonzero, which is what couples scheduling quality to
/// convergence speed in this simulator.
struct JobProgress {
  JobId job = 0;
  double effective_rounds = 0.0;
  double current_loss = 0.0;
  int completed_rounds = 0;
  bool done = false;
};

double curve_loss(const CurveCoeffs& curve, double effective_rounds);

JobProgress init_progress(const JobSpec& spec);

/// Round budget from inverting the curve at the target loss, inflated by 30%
/// to absorb the gap between the estimate and actual convergence. At least 1.
/// Throws std::domain_error when the target lies at or below the curve's
/// asymptote b2.
int estimate_rounds(const JobSpec& spec);

/// Rounds needed to hit the target under ideal (zero-variance) progress.
int ideal_rounds_to_target(const JobSpec& spec);

/// One completed round: progress increment 1 / (1 + lambda * fairness).
/// Throws std::logic_error if the job is already done.
JobProgress advance(const JobProgress& progress, const JobSpec& spec, double fairness,
                    double lambda);

}  // namespace fedsched::core
