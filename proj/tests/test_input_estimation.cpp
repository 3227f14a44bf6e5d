#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ad/input_estimation.hpp"

namespace {

ad::IeConfig small_cfg() {
  ad::IeConfig cfg;
  cfg.nE = 2;
  cfg.nF = 3;
  cfg.Rz = 1.0;
  cfg.Rd = 1e-7;
  cfg.Rtheta = Eigen::MatrixXd::Identity(cfg.ltheta(), cfg.ltheta());
  return cfg;
}

}  // namespace

TEST_CASE("IeBuffers: zero-initialized history of the contracted lengths") {
  const ad::IeConfig cfg = small_cfg();
  ad::IeBuffers buf(cfg, 1);
  CHECK(buf.dHatHist.size() == 3);  // max(nE, nF)
  CHECK(buf.zHist.size() == 6);     // nE + nF + 1
  CHECK(buf.phiHist.size() == 3);   // nF
  CHECK(buf.abarHist.size() == 2);  // nF - 1
  CHECK(buf.k == 0);
  for (double v : buf.dHatHist) CHECK(v == 0.0);
  for (double v : buf.zHist) CHECK(v == 0.0);
  ad::IeConfig bad = cfg;
  bad.nE = 0;
  CHECK_THROWS_AS(ad::IeBuffers(bad, 1), std::domain_error);
}

TEST_CASE("IeBuffers::shift: newest-first ordering, fixed length") {
  const ad::IeConfig cfg = small_cfg();
  ad::IeBuffers buf(cfg, 1);
  const Eigen::RowVectorXd phi0 = Eigen::RowVectorXd::Zero(cfg.ltheta());
  const Eigen::MatrixXd ab = Eigen::MatrixXd::Constant(1, 1, 0.5);
  for (int k = 1; k <= 5; ++k) {
    buf.shift(10.0 * k, 0.1 * k, phi0, ab);
  }
  CHECK(buf.k == 5);
  CHECK(buf.dHatHist.size() == 3);
  CHECK(buf.dHatHist[0] == 50.0);  // d_{k-1}
  CHECK(buf.dHatHist[1] == 40.0);
  CHECK(buf.dHatHist[2] == 30.0);
  CHECK(buf.zHist[0] == doctest::Approx(0.5));
  CHECK(buf.zHist[4] == doctest::Approx(0.1));
  CHECK(buf.zHist[5] == 0.0);  // pre-history padding survives until displaced
}

TEST_CASE("build_regressor: [dhat lags | z_k | z lags] layout") {
  const ad::IeConfig cfg = small_cfg();
  ad::IeBuffers buf(cfg, 1);
  const Eigen::RowVectorXd phi0 = Eigen::RowVectorXd::Zero(cfg.ltheta());
  const Eigen::MatrixXd ab = Eigen::MatrixXd::Zero(1, 1);
  buf.shift(1.0, -1.0, phi0, ab);  // k-2 after the next shift
  buf.shift(2.0, -2.0, phi0, ab);  // k-1
  const Eigen::RowVectorXd phi = ad::build_regressor(buf, 9.0, cfg.nE);
  REQUIRE(phi.size() == 5);
  CHECK(phi(0) == 2.0);   // dhat_{k-1}
  CHECK(phi(1) == 1.0);   // dhat_{k-2}
  CHECK(phi(2) == 9.0);   // z_k
  CHECK(phi(3) == -2.0);  // z_{k-1}
  CHECK(phi(4) == -1.0);  // z_{k-2}
}

TEST_CASE("estimate_input: inner product with theta") {
  Eigen::RowVectorXd phi(3);
  phi << 1.0, 2.0, 3.0;
  Eigen::VectorXd theta(3);
  theta << 0.5, -1.0, 2.0;
  CHECK(ad::estimate_input(phi, theta) == doctest::Approx(4.5));
}

TEST_CASE("update_markov_coefficients: H_1 = C B and products of past Abar") {
  const ad::LtiModel m = ad::make_differentiator_model(0.01);
  ad::IeConfig cfg = small_cfg();
  cfg.nF = 4;
  ad::IeBuffers buf(cfg, 1);

  // k = 0: no coefficients yet
  Eigen::VectorXd H = ad::update_markov_coefficients(m, buf, cfg.nF);
  CHECK(H.norm() == 0.0);

  const Eigen::RowVectorXd phi0 = Eigen::RowVectorXd::Zero(cfg.ltheta());
  // record Abar_1 = 0.5, Abar_2 = 0.25, Abar_3 = -0.1 (newest first in hist)
  buf.shift(0.0, 0.0, phi0, Eigen::MatrixXd::Constant(1, 1, 0.5));
  H = ad::update_markov_coefficients(m, buf, cfg.nF);
  CHECK(H(0) == doctest::Approx(0.01));  // C B = Ts
  CHECK(H(1) == 0.0);                    // i > k truncation

  buf.shift(0.0, 0.0, phi0, Eigen::MatrixXd::Constant(1, 1, 0.25));
  buf.shift(0.0, 0.0, phi0, Eigen::MatrixXd::Constant(1, 1, -0.1));
  H = ad::update_markov_coefficients(m, buf, cfg.nF);
  // k = 3: H_2 = C Abar_{k-1} B, H_3 = C Abar_{k-1} Abar_{k-2} B, H_4 = 0
  CHECK(H(0) == doctest::Approx(0.01));
  CHECK(H(1) == doctest::Approx(-0.1 * 0.01));
  CHECK(H(2) == doctest::Approx(-0.1 * 0.25 * 0.01));
  CHECK(H(3) == 0.0);

  buf.shift(0.0, 0.0, phi0, Eigen::MatrixXd::Constant(1, 1, 2.0));
  H = ad::update_markov_coefficients(m, buf, cfg.nF);
  CHECK(H(3) == doctest::Approx(2.0 * (-0.1) * 0.25 * 0.01));
}

TEST_CASE("filter_signals: convolution of H with the histories") {
  const ad::IeConfig cfg = small_cfg();
  ad::IeBuffers buf(cfg, 1);
  Eigen::RowVectorXd p1(cfg.ltheta()), p2(cfg.ltheta()), p3(cfg.ltheta());
  p1 << 1, 0, 0, 0, 0;
  p2 << 0, 1, 0, 0, 0;
  p3 << 0, 0, 1, 0, 0;
  const Eigen::MatrixXd ab = Eigen::MatrixXd::Zero(1, 1);
  buf.shift(7.0, 0.0, p3, ab);  // oldest
  buf.shift(8.0, 0.0, p2, ab);
  buf.shift(9.0, 0.0, p1, ab);  // newest
  Eigen::VectorXd H(3);
  H << 0.5, 0.25, 0.125;
  const auto [phiF, dHatF] = ad::filter_signals(H, buf, cfg.ltheta());
  CHECK(phiF(0) == doctest::Approx(0.5));    // H_1 Phi_{k-1}
  CHECK(phiF(1) == doctest::Approx(0.25));   // H_2 Phi_{k-2}
  CHECK(phiF(2) == doctest::Approx(0.125));  // H_3 Phi_{k-3}
  CHECK(dHatF == doctest::Approx(0.5 * 9.0 + 0.25 * 8.0 + 0.125 * 7.0));
}

TEST_CASE("assemble_stacked: rows, targets and weights") {
  Eigen::RowVectorXd phi(3), phiF(3);
  phi << 1, 2, 3;
  phiF << 4, 5, 6;
  const ad::Stacked s = ad::assemble_stacked(phi, phiF, 0.9, 0.2, 1.0, 1e-7);
  REQUIRE(s.PhiTilde.cols() == 3);
  CHECK((s.PhiTilde.row(0).transpose() - phiF.transpose()).norm() == 0.0);
  CHECK((s.PhiTilde.row(1).transpose() - phi.transpose()).norm() == 0.0);
  CHECK(s.zTilde(0) == doctest::Approx(0.7));
  CHECK(s.zTilde(1) == 0.0);
  CHECK(s.RtildeDiag(0) == 1.0);
  CHECK(s.RtildeDiag(1) == 1e-7);
}
