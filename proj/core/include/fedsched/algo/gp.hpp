#pragma once

#include <fedsched/core/types.hpp>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <vector>

namespace fedsched::algo {

struct GpConfig {
  int candidates = 256;        // plans sampled per acquisition round
  int init_points = 10;        // size of the initial observation set
  double length_scale = 0.0;   // 0: auto, sqrt(2 * plan_size)
  double signal_variance = 1.0;
  double jitter = 1e-6;
  int max_observations = 300;  // oldest observations evicted beyond this
  bool refit = false;          // marginal-likelihood grid refit every 10 points
};

struct GpPosterior {
  double mean = 0.0;
  double variance = 0.0;
};

/// Gaussian-process regression over plan encodings with a Matern-5/2 kernel
/// on the Euclidean distance between bit vectors. Costs are standardized
/// internally; posterior and expected improvement work in standardized space
/// (scale-equivariant, so argmax decisions are unaffected).
class GaussianProcess {
 public:
  explicit GaussianProcess(GpConfig config, double length_scale);

  /// Appends an observation; evicts the oldest beyond max_observations.
  /// Does not refit — call fit() once after a batch of adds.
  void add(core::PlanEncoding encoding, double cost);

  /// Standardize costs and factorize the Gram matrix. Escalates jitter up to
  /// three times (x100 each step); throws std::runtime_error if the matrix
  /// is still not positive definite.
  void fit();

  GpPosterior posterior(const core::PlanEncoding& x) const;

  /// EI of a candidate against the best (lowest) observed cost:
  ///   z = (best - mean) / sigma,  EI = (best - mean) * Phi(z) + sigma * phi(z)
  /// and max(0, best - mean) when sigma is zero. Never negative.
  double expected_improvement(const core::PlanEncoding& x) const;

  int size() const { return static_cast<int>(encodings_.size()); }
  bool fitted() const { return fitted_; }
  double best_cost() const;               // raw units
  double best_standardized_cost() const;
  const core::PlanEncoding& best_encoding() const;
  double length_scale() const { return length_scale_; }

  /// Log marginal likelihood of the current fit (standardized space).
  double log_marginal_likelihood() const;

  /// Grid search over length-scale multipliers, keeping the best LML fit.
  void refit_length_scale();

 private:
  double kernel(const core::PlanEncoding& a, const core::PlanEncoding& b) const;
  void factorize();

  GpConfig config_;
  double length_scale_;
  std::vector<core::PlanEncoding> encodings_;
  std::vector<double> costs_;

  double cost_mean_ = 0.0;
  double cost_std_ = 1.0;
  bool fitted_ = false;
  Eigen::VectorXd standardized_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::VectorXd alpha_;  // K^-1 y in standardized space
  double lml_ = 0.0;
};

double standard_normal_cdf(double z);
double standard_normal_pdf(double z);

}  // namespace fedsched::algo
