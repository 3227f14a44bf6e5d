#include "ad/rls_forgetting.hpp"

#include <cmath>

#include "ad/special_functions.hpp"

namespace ad {

VrfConstants vrf_constants(int tauN, int tauD) {
  if (tauN < 1) throw std::domain_error("vrf_constants: tauN must be >= 1");
  if (tauD < 6) throw std::domain_error("vrf_constants: tauD must be >= 6");
  if (tauD <= tauN) throw std::domain_error("vrf_constants: tauD must exceed tauN");
  VrfConstants k;
  k.a = static_cast<double>(tauN + tauD - 3) * (tauD - 1) /
        (static_cast<double>(tauD - 5) * (tauD - 2));
  if (k.a == 1.0) throw std::domain_error("vrf_constants: a = 1 makes b undefined");
  k.b = 4.0 + 2.0 * (tauN + 1) / (k.a - 1.0);
  k.c = 2.0 * tauN * (k.b - 2.0) / (k.b * (tauD - 3));
  return k;
}

ForgettingWindow::ForgettingWindow(int capacity) : capacity_(capacity) {
  if (capacity < 1) throw std::domain_error("ForgettingWindow: capacity must be >= 1");
}

void ForgettingWindow::push(const Eigen::Vector2d& eps) {
  buf_.push_back(eps);
  if (static_cast<int>(buf_.size()) > capacity_) buf_.pop_front();
  ++count_;
}

std::pair<Eigen::Vector2d, Eigen::Matrix2d> ForgettingWindow::stats(int tau) const {
  if (!ready(tau)) throw std::logic_error("ForgettingWindow::stats: fewer than tau samples");
  const int n = static_cast<int>(buf_.size());
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  for (int i = n - tau; i < n; ++i) mean += buf_[i];
  mean /= tau;
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  for (int i = n - tau; i < n; ++i) {
    const Eigen::Vector2d d = buf_[i] - mean;
    cov += d * d.transpose();
  }
  cov /= tau;
  return {mean, cov};
}

std::optional<double> vrf_statistic(const Eigen::Matrix2d& SigmaN,
                                    const Eigen::Matrix2d& SigmaD,
                                    const VrfConfig& cfg) {
  const VrfConstants k = vrf_constants(cfg.tauN, cfg.tauD);
  const double fq = f_quantile(2.0 * cfg.tauN, k.b, 1.0 - cfg.alpha);
  return vrf_statistic(SigmaN, SigmaD, cfg, k, fq);
}

std::optional<double> vrf_statistic(const Eigen::Matrix2d& SigmaN,
                                    const Eigen::Matrix2d& SigmaD,
                                    const VrfConfig& cfg,
                                    const VrfConstants& k, double fQuantile) {
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(SigmaD);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(1);
  if (smin <= 0.0 || smax / smin > 1e12) return std::nullopt;
  const double tr = (SigmaN * SigmaD.inverse()).trace();
  const double ratio = static_cast<double>(cfg.tauN) / cfg.tauD;
  return std::sqrt(ratio * tr / k.c) - std::sqrt(fQuantile);
}

double forgetting_factor(double g, double eta) {
  if (g > 0.0) return 1.0 / (1.0 + eta * g);
  return 1.0;
}

namespace {

// Shared tail: given the pre-measurement covariance M (P for classic,
// the resetting blend for VRF-ER), apply the rank-2 correction and the
// theta update.
void rank2_update(RlsState& state, const Eigen::MatrixXd& M,
                  const Eigen::Matrix<double, 2, Eigen::Dynamic>& PhiTilde,
                  const Eigen::Vector2d& zTilde,
                  const Eigen::Vector2d& RtildeDiag) {
  const Eigen::MatrixXd MPt = M * PhiTilde.transpose();          // l x 2
  Eigen::Matrix2d S = PhiTilde * MPt;
  S(0, 0) += 1.0 / RtildeDiag(0);
  S(1, 1) += 1.0 / RtildeDiag(1);
  const Eigen::Matrix2d Sinv = S.inverse();
  const Eigen::MatrixXd Praw = M - MPt * Sinv * MPt.transpose();
  Eigen::MatrixXd Pnew = 0.5 * (Praw + Praw.transpose());
  const Eigen::Vector2d eps = zTilde + PhiTilde * state.theta;
  state.theta -= Pnew * (PhiTilde.transpose() * RtildeDiag.asDiagonal() * eps);
  state.Pcov = std::move(Pnew);
}

}  // namespace

void rls_update_classic(RlsState& state,
                        const Eigen::Matrix<double, 2, Eigen::Dynamic>& PhiTilde,
                        const Eigen::Vector2d& zTilde,
                        const Eigen::Vector2d& RtildeDiag) {
  if (RtildeDiag(0) <= 0.0 || RtildeDiag(1) <= 0.0) {
    throw std::domain_error("rls_update_classic: Rtilde entries must be positive");
  }
  rank2_update(state, state.Pcov, PhiTilde, zTilde, RtildeDiag);
}

void rls_update_vrf_er(RlsState& state,
                       const Eigen::Matrix<double, 2, Eigen::Dynamic>& PhiTilde,
                       const Eigen::Vector2d& zTilde,
                       const Eigen::Vector2d& RtildeDiag,
                       double lambda, const ErConfig& er) {
  if (RtildeDiag(0) <= 0.0 || RtildeDiag(1) <= 0.0) {
    throw std::domain_error("rls_update_vrf_er: Rtilde entries must be positive");
  }
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw std::domain_error("rls_update_vrf_er: lambda must lie in (0,1]");
  }
  if (lambda == 1.0) {
    rank2_update(state, state.Pcov, PhiTilde, zTilde, RtildeDiag);
    return;
  }
  const long n = state.Pcov.rows();
  // M = (lambda P^{-1} + (1-lambda) Rinf)^{-1} = P (lambda I + (1-lambda) Rinf P)^{-1}
  const Eigen::MatrixXd lhs = lambda * Eigen::MatrixXd::Identity(n, n) +
                              (1.0 - lambda) * er.Rinf * state.Pcov;
  const Eigen::MatrixXd Mraw =
      lhs.transpose().partialPivLu().solve(state.Pcov.transpose()).transpose();
  const Eigen::MatrixXd M = 0.5 * (Mraw + Mraw.transpose());
  rank2_update(state, M, PhiTilde, zTilde, RtildeDiag);
}

}  // namespace ad
