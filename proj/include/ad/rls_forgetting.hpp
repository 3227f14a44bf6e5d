#pragma once

#include <Eigen/Dense>
#include <deque>
#include <optional>
#include <stdexcept>
#include <utility>

// RLS parameter/covariance updates (classic and VRF-ER), windowed residual
// statistics, the F-test statistic g_k and the forgetting factor lambda_k.

namespace ad {

struct RlsState {
  Eigen::VectorXd theta;
  Eigen::MatrixXd Pcov;
};

struct VrfConfig {
  double eta = 0.0;   // forgetting gain
  int tauN = 1;       // short window
  int tauD = 2;       // long window
  double alpha = 0.0; // significance level
};

struct ErConfig {
  Eigen::MatrixXd Rinf;  // resetting matrix, positive definite
};

struct VrfConstants {
  double a = 0.0, b = 0.0, c = 0.0;
};

VrfConstants vrf_constants(int tauN, int tauD);

// Ring buffer of 2-dimensional residual errors with windowed statistics.
class ForgettingWindow {
 public:
  explicit ForgettingWindow(int capacity);
  void push(const Eigen::Vector2d& eps);
  bool ready(int tau) const { return static_cast<int>(buf_.size()) >= tau; }
  long long count() const { return count_; }
  // Mean and covariance over the most recent tau entries, divisor tau.
  std::pair<Eigen::Vector2d, Eigen::Matrix2d> stats(int tau) const;

 private:
  int capacity_;
  long long count_ = 0;
  std::deque<Eigen::Vector2d> buf_;
};

inline Eigen::Vector2d residual_error(const Eigen::Vector2d& zTilde,
                                      const Eigen::Matrix<double, 2, Eigen::Dynamic>& PhiTilde,
                                      const Eigen::VectorXd& theta) {
  return zTilde + PhiTilde * theta;
}

// g_k. Returns nullopt when SigmaD is effectively singular (condition number
// above 1e12): no evidence of change, caller keeps lambda = 1.
std::optional<double> vrf_statistic(const Eigen::Matrix2d& SigmaN,
                                    const Eigen::Matrix2d& SigmaD,
                                    const VrfConfig& cfg);

// Same, with the constants and F-quantile precomputed (they depend only on
// the configuration, so per-step recomputation is wasted work).
std::optional<double> vrf_statistic(const Eigen::Matrix2d& SigmaN,
                                    const Eigen::Matrix2d& SigmaD,
                                    const VrfConfig& cfg,
                                    const VrfConstants& k, double fQuantile);

double forgetting_factor(double g, double eta);

// P'^{-1} = P^{-1} + PhiTilde' Rtilde PhiTilde, realized as a rank-2
// correction of P; theta' = theta - P' PhiTilde' Rtilde (zTilde + PhiTilde theta).
void rls_update_classic(RlsState& state,
                        const Eigen::Matrix<double, 2, Eigen::Dynamic>& PhiTilde,
                        const Eigen::Vector2d& zTilde,
                        const Eigen::Vector2d& RtildeDiag);

// P'^{-1} = lambda P^{-1} + (1 - lambda) Rinf + PhiTilde' Rtilde PhiTilde.
void rls_update_vrf_er(RlsState& state,
                       const Eigen::Matrix<double, 2, Eigen::Dynamic>& PhiTilde,
                       const Eigen::Vector2d& zTilde,
                       const Eigen::Vector2d& RtildeDiag,
                       double lambda, const ErConfig& er);

}  // namespace ad
