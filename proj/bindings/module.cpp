#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ad/aise.hpp"
#include "ad/baselines.hpp"
#include "ad/control_sim.hpp"
#include "ad/special_functions.hpp"
#include "ad/synth.hpp"

namespace py = pybind11;

namespace {

ad::AiseConfig build_config(double Ts, int nE, int nF, double Rz, double Rd,
                            double RthetaScale, double etaL, double etaU,
                            double beta, int gridSize,
                            std::optional<py::dict> vrf) {
  ad::AiseConfig cfg;
  cfg.model = ad::make_differentiator_model(Ts);
  cfg.ie.nE = nE;
  cfg.ie.nF = nF;
  cfg.ie.Rz = Rz;
  cfg.ie.Rd = Rd;
  cfg.ie.Rtheta =
      RthetaScale * Eigen::MatrixXd::Identity(cfg.ie.ltheta(), cfg.ie.ltheta());
  cfg.adapt.etaL = etaL;
  cfg.adapt.etaU = etaU;
  cfg.adapt.beta = beta;
  cfg.adapt.gridSize = gridSize;
  if (vrf) {
    ad::VrfConfig v;
    v.eta = vrf->operator[]("eta").cast<double>();
    v.tauN = vrf->operator[]("tauN").cast<int>();
    v.tauD = vrf->operator[]("tauD").cast<int>();
    v.alpha = vrf->operator[]("alpha").cast<double>();
    ad::ErConfig er;
    er.Rinf = vrf->operator[]("Rinf").cast<double>() *
              Eigen::MatrixXd::Identity(cfg.ie.ltheta(), cfg.ie.ltheta());
    cfg.forgetting = {v, er};
  }
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "adaptive numerical differentiation core";

  m.def("f_quantile", &ad::f_quantile, py::arg("d1"), py::arg("d2"), py::arg("p"));
  m.def("f_cdf", &ad::f_cdf, py::arg("d1"), py::arg("d2"), py::arg("x"));
  m.def(
      "vrf_constants",
      [](int tauN, int tauD) {
        const ad::VrfConstants k = ad::vrf_constants(tauN, tauD);
        return py::make_tuple(k.a, k.b, k.c);
      },
      py::arg("tauN"), py::arg("tauD"));
  m.def("forgetting_factor", &ad::forgetting_factor, py::arg("g"), py::arg("eta"));
  m.def("backward_difference", &ad::backward_difference, py::arg("e"),
        py::arg("e_prev"), py::arg("Ts"));
  m.def("rmse", &ad::rmse, py::arg("y"), py::arg("y_bar"));

  m.def(
      "run_aise",
      [](const std::vector<double>& signal, double Ts, int nE, int nF, double Rz,
         double Rd, double RthetaScale, double etaL, double etaU, double beta,
         int gridSize, std::optional<py::dict> vrf) {
        const ad::AiseConfig cfg = build_config(Ts, nE, nF, Rz, Rd, RthetaScale,
                                                etaL, etaU, beta, gridSize, vrf);
        const auto diags = ad::run(cfg, signal);
        std::vector<double> dhat, lambda, eigmax;
        dhat.reserve(diags.size());
        for (const auto& d : diags) {
          dhat.push_back(d.dHat);
          lambda.push_back(d.lambda);
          eigmax.push_back(d.eigMaxP);
        }
        py::dict out;
        out["dhat"] = dhat;
        out["lambda"] = lambda;
        out["eigmax_p"] = eigmax;
        return out;
      },
      py::arg("signal"), py::arg("Ts"), py::arg("nE") = 12, py::arg("nF") = 20,
      py::arg("Rz") = 1.0, py::arg("Rd") = 1e-7, py::arg("Rtheta_scale") = 0.7943282347242815,
      py::arg("etaL") = 1e-6, py::arg("etaU") = 1e-2, py::arg("beta") = 0.55,
      py::arg("grid_size") = 50, py::arg("vrf") = std::nullopt);

  m.def(
      "synth_trajectory",
      [](const std::string& kind, long long N, double Ts, std::uint64_t seed) {
        const ad::Trajectory tr =
            ad::synth_trajectory(ad::parse_trajectory_kind(kind), N, Ts, seed);
        py::dict out;
        out["t"] = tr.t;
        out["y"] = tr.y;
        out["d_true"] = tr.dTrue;
        return out;
      },
      py::arg("kind"), py::arg("N"), py::arg("Ts"), py::arg("seed") = 0);
}
