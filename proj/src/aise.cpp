#include "ad/aise.hpp"

#include "ad/special_functions.hpp"

namespace ad {

Aise::Aise(const AiseConfig& cfg)
    : cfg_(cfg),
      buf_(cfg.ie, cfg.model.n),
      window_(cfg.forgetting ? cfg.forgetting->first.tauD : 1) {
  const int l = cfg_.ie.ltheta();
  if (cfg_.ie.Rtheta.rows() != l || cfg_.ie.Rtheta.cols() != l) {
    throw std::domain_error("Aise: Rtheta must be ltheta x ltheta");
  }
  rls_.theta = Eigen::VectorXd::Zero(l);
  rls_.Pcov = cfg_.ie.Rtheta.inverse();
  xFc_ = Eigen::VectorXd::Zero(cfg_.model.n);
  Pf_ = Eigen::MatrixXd::Zero(cfg_.model.n, cfg_.model.n);
  PdaPrev_ = Eigen::MatrixXd::Zero(cfg_.model.n, cfg_.model.n);
  if (cfg_.forgetting) {
    const VrfConfig& v = cfg_.forgetting->first;
    vrfK_ = vrf_constants(v.tauN, v.tauD);
    fQuantile_ = f_quantile(2.0 * v.tauN, vrfK_.b, 1.0 - v.alpha);
  }
}

StepDiagnostics Aise::step(double y) {
  const LtiModel& m = cfg_.model;

  // 1. forecast output and residual
  const double yFc = (m.C * xFc_).value();
  const double z = residual(yFc, y);

  // 2. residual statistics
  stats_.update(z);

  // 3. covariance adaptation (defaults before two residuals are available)
  Eigen::MatrixXd V1;
  double V2 = 0.0;
  double etaK = cfg_.adapt.etaL;
  if (stats_.ready()) {
    const Adapted a = adapt_covariances(stats_, PdaPrev_, m, cfg_.adapt);
    V1 = a.V1;
    V2 = a.V2;
    etaK = a.etaK;
  } else {
    V1 = cfg_.adapt.etaL * Eigen::MatrixXd::Identity(m.n, m.n);
  }

  // 4. assimilation
  const Assimilated as = assimilate(m, xFc_, Pf_, z, V2);

  // 5. Markov coefficients from past Abar values, then record the current one
  const Eigen::VectorXd H = update_markov_coefficients(m, buf_, cfg_.ie.nF);
  const Eigen::MatrixXd abar = closed_loop_state_map(m, as.Kda);

  // 6. regressor, filtered signals, stacked quantities
  const Eigen::RowVectorXd Phi = build_regressor(buf_, z, cfg_.ie.nE);
  const auto [PhiF, dHatF] = filter_signals(H, buf_, cfg_.ie.ltheta());
  const Stacked st = assemble_stacked(Phi, PhiF, z, dHatF, cfg_.ie.Rz, cfg_.ie.Rd);

  // 7. input estimate with the pre-update theta
  const double dHat = estimate_input(Phi, rls_.theta);

  // 8. forgetting factor and RLS update
  double lambda = 1.0;
  if (cfg_.forgetting) {
    const VrfConfig& v = cfg_.forgetting->first;
    window_.push(residual_error(st.zTilde, st.PhiTilde, rls_.theta));
    if (window_.ready(v.tauD)) {
      const auto [mn, SigmaN] = window_.stats(v.tauN);
      const auto [md, SigmaD] = window_.stats(v.tauD);
      if (const auto g = vrf_statistic(SigmaN, SigmaD, v, vrfK_, fQuantile_)) {
        lambda = forgetting_factor(*g, v.eta);
      }
    }
    rls_update_vrf_er(rls_, st.PhiTilde, st.zTilde, st.RtildeDiag, lambda,
                      cfg_.forgetting->second);
  } else {
    rls_update_classic(rls_, st.PhiTilde, st.zTilde, st.RtildeDiag);
  }

  // 9. covariance propagation
  PdaPrev_ = as.Pda;
  Pf_ = propagate_covariance(m, as.Pda, V1);

  // 10. state forecast for the next step
  xFc_ = forecast(m, as.xDa, dHat).first;

  buf_.shift(dHat, z, Phi, abar);

  StepDiagnostics diag;
  diag.dHat = dHat;
  diag.z = z;
  diag.lambda = lambda;
  diag.eigMaxP = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
                     rls_.Pcov, Eigen::EigenvaluesOnly)
                     .eigenvalues()
                     .maxCoeff();
  diag.theta = rls_.theta;
  diag.v1Eta = etaK;
  diag.v2 = V2;
  return diag;
}

std::vector<StepDiagnostics> run(const AiseConfig& cfg,
                                 const std::vector<double>& signal) {
  if (signal.empty()) throw std::domain_error("run: signal must be nonempty");
  Aise est(cfg);
  std::vector<StepDiagnostics> out;
  out.reserve(signal.size());
  for (double y : signal) out.push_back(est.step(y));
  return out;
}

}  // namespace ad
