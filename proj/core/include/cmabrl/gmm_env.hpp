#pragma once

#include <vector>

#include "cmabrl/contracts.hpp"
#include "cmabrl/oracle.hpp"

namespace cmabrl {

// One bivariate Gaussian component over (relevant context, relevant arm).
struct Gaussian2D {
  double mean_context = 0.0;
  double mean_arm = 0.0;
  double var_context = 1.0;   // covariance (1,1)
  double cov = 0.0;           // covariance (1,2)
  double var_arm = 1.0;       // covariance (2,2)
};

struct GmmEnvConfig {
  int context_dim = 5;
  int arm_dim = 5;
  double scale = 0.25;
  std::vector<double> weights;
  std::vector<Gaussian2D> components;
  int relevant_context_dim = 0;
  int relevant_arm_dim = 0;
  OracleConfig oracle;

  void validate() const;
  // The synthetic two-component mixture used throughout the test suite:
  // scale 0.25, equal weights, means (0.25, 0.75) and (0.5, 0.5),
  // covariances [[0.05, 0.03], [0.03, 0.025]] and
  // [[0.025, -0.03], [-0.03, 0.05]].
  static GmmEnvConfig synthetic_defaults();
};

// Bernoulli-reward environment whose success probability is a scaled
// two-dimensional Gaussian mixture density of the single relevant context
// and arm coordinates, clamped at one. Contexts arrive uniformly on the
// context box.
class GmmEnvironment final : public Environment {
 public:
  explicit GmmEnvironment(GmmEnvConfig config);

  int context_dim() const override { return config_.context_dim; }
  int arm_dim() const override { return config_.arm_dim; }
  ContextVector sample_context(RngStream& rng) const override;
  double expected_reward(const ContextVector& context,
                         const ArmVector& arm) const override;
  double sample_reward(const ContextVector& context, const ArmVector& arm,
                       RngStream& rng) const override;
  double oracle_best(const ContextVector& context) const override;

  const GmmEnvConfig& config() const { return config_; }
  double mean_at(double context_value, double arm_value) const;

 private:
  struct PreparedComponent {
    double mean_context, mean_arm;
    double inv_cc, inv_ca, inv_aa;  // inverse covariance entries
    double norm;                    // weight / (2 pi sqrt(det))
  };

  GmmEnvConfig config_;
  std::vector<PreparedComponent> prepared_;
};

}  // namespace cmabrl
