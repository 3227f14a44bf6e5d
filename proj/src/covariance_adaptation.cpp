#include "ad/covariance_adaptation.hpp"

#include <cmath>
#include <limits>

namespace ad {

std::vector<double> adapt_grid(const AdaptConfig& cfg) {
  if (cfg.gridSize < 2) throw std::domain_error("adapt_grid: gridSize must be >= 2");
  if (!(cfg.etaU > cfg.etaL) || cfg.etaL < 0.0) {
    throw std::domain_error("adapt_grid: need 0 <= etaL < etaU");
  }
  std::vector<double> grid(cfg.gridSize);
  if (cfg.etaL > 0.0) {
    const double lo = std::log10(cfg.etaL);
    const double hi = std::log10(cfg.etaU);
    for (int i = 0; i < cfg.gridSize; ++i) {
      grid[i] = std::pow(10.0, lo + (hi - lo) * i / (cfg.gridSize - 1));
    }
  } else {
    for (int i = 0; i < cfg.gridSize; ++i) {
      grid[i] = cfg.etaL + (cfg.etaU - cfg.etaL) * i / (cfg.gridSize - 1);
    }
  }
  return grid;
}

Adapted adapt_covariances(const ResidualStats& stats,
                          const Eigen::MatrixXd& PdaPrev, const LtiModel& m,
                          const AdaptConfig& cfg) {
  if (!stats.ready()) throw std::logic_error("adapt_covariances: stats not ready");
  if (cfg.beta < 0.0 || cfg.beta > 1.0) {
    throw std::domain_error("adapt_covariances: beta must lie in [0,1]");
  }
  const double Shat = stats.variance();
  const std::vector<double> grid = adapt_grid(cfg);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(m.n, m.n);

  std::vector<double> J(grid.size());
  double posMin = std::numeric_limits<double>::infinity();
  double posMax = -std::numeric_limits<double>::infinity();
  bool anyPos = false;
  for (size_t i = 0; i < grid.size(); ++i) {
    J[i] = jf(Shat, PdaPrev, m, grid[i] * I);
    if (J[i] > 0.0) {
      anyPos = true;
      posMin = std::min(posMin, J[i]);
      posMax = std::max(posMax, J[i]);
    }
  }

  size_t best = 0;
  double target = 0.0;
  if (anyPos) target = cfg.beta * posMin + (1.0 - cfg.beta) * posMax;
  double bestDist = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < grid.size(); ++i) {
    const double dist = std::fabs(J[i] - target);
    if (dist < bestDist) {
      bestDist = dist;
      best = i;
    }
  }

  Adapted out;
  out.etaK = grid[best];
  out.V1 = grid[best] * I;
  out.V2 = anyPos ? J[best] : 0.0;
  return out;
}

}  // namespace ad
