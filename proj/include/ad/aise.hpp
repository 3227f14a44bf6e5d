#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "ad/covariance_adaptation.hpp"
#include "ad/input_estimation.hpp"
#include "ad/model_kalman.hpp"
#include "ad/rls_forgetting.hpp"

// Facade running one full AISE step per sample:
// forecast -> residual -> covariance adaptation -> assimilation ->
// Markov/filter update -> input estimate -> RLS (classic or VRF-ER) update.

namespace ad {

struct AiseConfig {
  LtiModel model;
  IeConfig ie;
  AdaptConfig adapt;
  // Engaged -> AISE/VRF-ER; empty -> classic AISE.
  std::optional<std::pair<VrfConfig, ErConfig>> forgetting;
};

struct StepDiagnostics {
  double dHat = 0.0;
  double z = 0.0;
  double lambda = 1.0;
  double eigMaxP = 0.0;
  Eigen::VectorXd theta;
  double v1Eta = 0.0;
  double v2 = 0.0;
};

class Aise {
 public:
  explicit Aise(const AiseConfig& cfg);
  StepDiagnostics step(double y);
  const RlsState& rls() const { return rls_; }

 private:
  AiseConfig cfg_;
  RlsState rls_;
  IeBuffers buf_;
  ResidualStats stats_;
  ForgettingWindow window_;
  VrfConstants vrfK_;
  double fQuantile_ = 0.0;

  Eigen::VectorXd xFc_;
  Eigen::MatrixXd Pf_;
  Eigen::MatrixXd PdaPrev_;
};

std::vector<StepDiagnostics> run(const AiseConfig& cfg,
                                 const std::vector<double>& signal);

}  // namespace ad
