#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <utility>

// Discrete-time SISO model and the Kalman forecast / data-assimilation /
// covariance-propagation steps. All acceptance paths instantiate n = 1
// (the sampled integrator), but the operations are written for generic n.

namespace ad {

inline constexpr double kInnovationFloor = 1e-12;

struct LtiModel {
  Eigen::MatrixXd A;
  Eigen::VectorXd B;
  Eigen::RowVectorXd C;
  double Ts = 0.0;
  int n = 0;
};

struct Assimilated {
  Eigen::VectorXd Kda;
  Eigen::VectorXd xDa;
  Eigen::MatrixXd Pda;
};

inline LtiModel make_differentiator_model(double Ts) {
  if (Ts <= 0.0) throw std::domain_error("make_differentiator_model: Ts must be positive");
  LtiModel m;
  m.n = 1;
  m.A = Eigen::MatrixXd::Ones(1, 1);
  m.B = Eigen::VectorXd::Constant(1, Ts);
  m.C = Eigen::RowVectorXd::Ones(1);
  m.Ts = Ts;
  return m;
}

inline std::pair<Eigen::VectorXd, double> forecast(const LtiModel& m,
                                                   const Eigen::VectorXd& xDa,
                                                   double dHat) {
  Eigen::VectorXd xFc = m.A * xDa + m.B * dHat;
  return {xFc, (m.C * xFc).value()};
}

inline double residual(double yFc, double y) { return yFc - y; }

inline Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& X) {
  return 0.5 * (X + X.transpose());
}

inline Assimilated assimilate(const LtiModel& m, const Eigen::VectorXd& xFc,
                              const Eigen::MatrixXd& Pf, double z, double V2) {
  double innov = (m.C * Pf * m.C.transpose()).value() + V2;
  if (innov < kInnovationFloor) innov = kInnovationFloor;
  Assimilated out;
  out.Kda = -(Pf * m.C.transpose()) / innov;
  out.xDa = xFc + out.Kda * z;
  out.Pda = symmetrize((Eigen::MatrixXd::Identity(m.n, m.n) + out.Kda * m.C) * Pf);
  return out;
}

inline Eigen::MatrixXd propagate_covariance(const LtiModel& m,
                                            const Eigen::MatrixXd& Pda,
                                            const Eigen::MatrixXd& V1) {
  return symmetrize(m.A * Pda * m.A.transpose() + V1);
}

inline Eigen::MatrixXd closed_loop_state_map(const LtiModel& m,
                                             const Eigen::VectorXd& Kda) {
  return m.A * (Eigen::MatrixXd::Identity(m.n, m.n) + Kda * m.C);
}

}  // namespace ad
