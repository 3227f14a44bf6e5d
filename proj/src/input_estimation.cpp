#include "ad/input_estimation.hpp"

#include <algorithm>

namespace ad {

IeBuffers::IeBuffers(const IeConfig& cfg, int n) {
  if (cfg.nE < 1 || cfg.nF < 1) {
    throw std::domain_error("IeBuffers: nE and nF must be >= 1");
  }
  dHatHist.assign(std::max(cfg.nE, cfg.nF), 0.0);
  zHist.assign(cfg.nE + cfg.nF + 1, 0.0);
  phiHist.assign(cfg.nF, Eigen::RowVectorXd::Zero(cfg.ltheta()));
  const int na = std::max(cfg.nF - 1, 1);
  abarHist.assign(na, Eigen::MatrixXd::Zero(n, n));
}

void IeBuffers::shift(double dHat, double z, const Eigen::RowVectorXd& phi,
                      const Eigen::MatrixXd& abar) {
  dHatHist.push_front(dHat);
  dHatHist.pop_back();
  zHist.push_front(z);
  zHist.pop_back();
  phiHist.push_front(phi);
  phiHist.pop_back();
  abarHist.push_front(abar);
  abarHist.pop_back();
  ++k;
}

Eigen::RowVectorXd build_regressor(const IeBuffers& buf, double zK, int nE) {
  Eigen::RowVectorXd phi(2 * nE + 1);
  for (int i = 0; i < nE; ++i) phi(i) = buf.dHatHist[i];
  phi(nE) = zK;
  for (int i = 0; i < nE; ++i) phi(nE + 1 + i) = buf.zHist[i];
  return phi;
}

Eigen::VectorXd update_markov_coefficients(const LtiModel& model,
                                           const IeBuffers& buf, int nF) {
  Eigen::VectorXd H = Eigen::VectorXd::Zero(nF);
  if (buf.k >= 1) {
    H(0) = (model.C * model.B).value();
    Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(model.n, model.n);
    const long long imax = std::min<long long>(buf.k, nF);
    for (long long i = 2; i <= imax; ++i) {
      prod *= buf.abarHist[static_cast<size_t>(i - 2)];
      H(i - 1) = (model.C * prod * model.B).value();
    }
  }
  return H;
}

std::pair<Eigen::RowVectorXd, double> filter_signals(const Eigen::VectorXd& H,
                                                     const IeBuffers& buf,
                                                     int ltheta) {
  Eigen::RowVectorXd phiF = Eigen::RowVectorXd::Zero(ltheta);
  double dHatF = 0.0;
  const int nF = static_cast<int>(H.size());
  for (int i = 0; i < nF; ++i) {
    phiF += H(i) * buf.phiHist[i];
    dHatF += H(i) * buf.dHatHist[i];
  }
  return {phiF, dHatF};
}

Stacked assemble_stacked(const Eigen::RowVectorXd& Phi,
                         const Eigen::RowVectorXd& PhiF, double z,
                         double dHatF, double Rz, double Rd) {
  Stacked s;
  s.PhiTilde.resize(2, Phi.size());
  s.PhiTilde.row(0) = PhiF;
  s.PhiTilde.row(1) = Phi;
  s.zTilde << z - dHatF, 0.0;
  s.RtildeDiag << Rz, Rd;
  return s;
}

}  // namespace ad
