#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "ad/model_kalman.hpp"

// Adaptive selection of the process/measurement noise covariances V1, V2 by
// residual-variance matching (Proposition 1 of the covariance-matching
// construction).

namespace ad {

struct AdaptConfig {
  double etaL = 0.0;
  double etaU = 1.0;
  double beta = 0.5;
  int gridSize = 50;
};

// Streaming mean / sum-of-squared-deviations over all residuals so far.
// The sample variance uses divisor (count - 1), i.e. divisor k at step k
// with k + 1 samples seen.
struct ResidualStats {
  long long count = 0;
  double runningMean = 0.0;
  double runningM2 = 0.0;

  void update(double z) {
    ++count;
    const double d = z - runningMean;
    runningMean += d / count;
    runningM2 += d * (z - runningMean);
  }
  bool ready() const { return count >= 2; }
  double variance() const {
    if (!ready()) throw std::logic_error("ResidualStats: variance needs >= 2 samples");
    return runningM2 / (count - 1);
  }
};

inline double jf(double Shat, const Eigen::MatrixXd& PdaPrev, const LtiModel& m,
                 const Eigen::MatrixXd& V1) {
  return Shat - (m.C * (m.A * PdaPrev * m.A.transpose() + V1) * m.C.transpose()).value();
}

struct Adapted {
  Eigen::MatrixXd V1;
  double V2 = 0.0;
  double etaK = 0.0;
};

std::vector<double> adapt_grid(const AdaptConfig& cfg);

Adapted adapt_covariances(const ResidualStats& stats,
                          const Eigen::MatrixXd& PdaPrev, const LtiModel& m,
                          const AdaptConfig& cfg);

}  // namespace ad
