#pragma once

#include <Eigen/Dense>
#include <deque>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ad/model_kalman.hpp"

// Input-estimation subsystem: regressor assembly, time-varying Markov
// coefficients H_{i,k}, filtered regressor/estimate, and the stacked
// quantities fed to RLS.

namespace ad {

struct IeConfig {
  int nE = 1;
  int nF = 1;
  double Rz = 1.0;
  double Rd = 1.0;
  Eigen::MatrixXd Rtheta;  // ltheta x ltheta, positive definite
  int ltheta() const { return 2 * nE + 1; }
};

// History buffers; entries prior to k = 0 are zero.
struct IeBuffers {
  std::deque<double> dHatHist;                 // d_{k-1}, d_{k-2}, ...
  std::deque<double> zHist;                    // z_{k-1}, z_{k-2}, ...
  std::deque<Eigen::RowVectorXd> phiHist;      // Phi_{k-1}, ...
  std::deque<Eigen::MatrixXd> abarHist;        // Abar_{k-1}, ...
  long long k = 0;

  IeBuffers(const IeConfig& cfg, int n);
  void shift(double dHat, double z, const Eigen::RowVectorXd& phi,
             const Eigen::MatrixXd& abar);
};

Eigen::RowVectorXd build_regressor(const IeBuffers& buf, double zK, int nE);

inline double estimate_input(const Eigen::RowVectorXd& Phi,
                             const Eigen::VectorXd& theta) {
  return Phi.dot(theta);
}

// H_1 = C B; H_i = C Abar_{k-1} ... Abar_{k-(i-1)} B for 2 <= i <= min(k, nF);
// H_i = 0 for i > k.
Eigen::VectorXd update_markov_coefficients(const LtiModel& model,
                                           const IeBuffers& buf, int nF);

std::pair<Eigen::RowVectorXd, double> filter_signals(const Eigen::VectorXd& H,
                                                     const IeBuffers& buf,
                                                     int ltheta);

struct Stacked {
  Eigen::Matrix<double, 2, Eigen::Dynamic> PhiTilde;
  Eigen::Vector2d zTilde;
  Eigen::Vector2d RtildeDiag;
};

Stacked assemble_stacked(const Eigen::RowVectorXd& Phi,
                         const Eigen::RowVectorXd& PhiF, double z,
                         double dHatF, double Rz, double Rd);

}  // namespace ad
