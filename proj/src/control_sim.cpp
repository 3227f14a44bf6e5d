#include "ad/control_sim.hpp"

#include <cmath>
#include <random>

namespace ad {

std::string method_name(Method m) {
  switch (m) {
    case Method::bd: return "bd";
    case Method::bdMa: return "bd-ma";
    case Method::bdBw: return "bd-bw";
    case Method::aise: return "aise";
    case Method::aiseVrfEr: return "aise-vrf-er";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "bd") return Method::bd;
  if (name == "bd-ma") return Method::bdMa;
  if (name == "bd-bw") return Method::bdBw;
  if (name == "aise") return Method::aise;
  if (name == "aise-vrf-er") return Method::aiseVrfEr;
  return std::nullopt;
}

DiscretePlant::DiscretePlant(const PlantConfig& cfg) {
  if (cfg.Kdc <= 0.0 || cfg.tauC <= 0.0 || cfg.Ts <= 0.0 || cfg.deadTime < 0.0) {
    throw std::domain_error("DiscretePlant: invalid plant parameters");
  }
  const double ndReal = cfg.deadTime / cfg.Ts;
  nd_ = static_cast<int>(std::llround(ndReal));
  if (std::fabs(ndReal - nd_) > 1e-9 * std::max(1.0, ndReal)) {
    throw std::domain_error("DiscretePlant: deadTime must be an integer multiple of Ts");
  }
  gamma_ = std::exp(-cfg.Ts / cfg.tauC);
  gain_ = cfg.Kdc * (1.0 - gamma_);
  delay_.assign(nd_ > 0 ? nd_ : 0, 0.0);
}

double DiscretePlant::step(double u) {
  double uDelayed = u;
  if (nd_ > 0) {
    uDelayed = delay_[head_];
    delay_[head_] = u;
    head_ = (head_ + 1) % nd_;
  }
  lag_ = gamma_ * lag_ + gain_ * uDelayed;
  return lag_;
}

PidOutput pid_step(PidState& st, const PidConfig& cfg, double e, double dEst) {
  PidOutput out;
  out.up = cfg.Kp * e;
  out.ui = st.ui;
  out.ud = cfg.Kd * dEst;
  out.u = out.up + out.ui + out.ud;
  st.ui += cfg.Ki * cfg.Ts * e;
  return out;
}

std::vector<double> generate_noise(const NoiseModel& model, long long N) {
  std::vector<double> sigma(N, -1.0);
  for (const NoiseSegment& s : model.segments) {
    if (s.D2 < 0.0) throw std::domain_error("generate_noise: negative D2");
    for (long long k = std::max<long long>(s.kStart, 0); k <= s.kEnd && k < N; ++k) {
      if (sigma[k] >= 0.0) throw std::domain_error("generate_noise: overlapping segments");
      sigma[k] = s.D2;
    }
  }
  for (long long k = 0; k < N; ++k) {
    if (sigma[k] < 0.0) {
      throw std::domain_error("generate_noise: segments do not cover step " +
                              std::to_string(k));
    }
  }
  std::mt19937_64 rng(model.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> out(N);
  for (long long k = 0; k < N; ++k) out[k] = sigma[k] * gauss(rng);
  return out;
}

ClosedLoopTrace simulate_closed_loop(const LoopSetup& setup,
                                     const std::vector<double>& noise,
                                     const std::vector<double>& rSeq) {
  const size_t N = rSeq.size();
  if (noise.size() != N) {
    throw std::invalid_argument("simulate_closed_loop: noise/command length mismatch");
  }
  DiscretePlant plant(setup.plant);
  PidState pid;

  std::optional<MovingAverage> ma;
  std::optional<IirFilter> bw;
  std::optional<Aise> aise;
  switch (setup.method) {
    case Method::bdMa: ma.emplace(setup.maWindow); break;
    case Method::bdBw: bw.emplace(butterworth_design(setup.bwOrder, setup.bwCutoff)); break;
    case Method::aise:
    case Method::aiseVrfEr: aise.emplace(setup.aise); break;
    case Method::bd: break;
  }

  ClosedLoopTrace tr;
  tr.method = setup.method;
  tr.t.reserve(N);
  double y = 0.0;
  double ePrev = 0.0;
  bool first = true;
  for (size_t k = 0; k < N; ++k) {
    const double ym = y + noise[k];
    const double e = rSeq[k] - ym;
    if (first) {
      ePrev = e;  // no derivative kick from the command step
      first = false;
    }
    double dEst = 0.0;
    double lambda = 1.0;
    double eigMaxP = 0.0;
    switch (setup.method) {
      case Method::bd:
        dEst = backward_difference(e, ePrev, setup.pid.Ts);
        break;
      case Method::bdMa:
        dEst = ma->step(backward_difference(e, ePrev, setup.pid.Ts));
        break;
      case Method::bdBw:
        dEst = bw->step(backward_difference(e, ePrev, setup.pid.Ts));
        break;
      case Method::aise:
      case Method::aiseVrfEr: {
        StepDiagnostics d = aise->step(e);
        dEst = d.dHat;
        lambda = d.lambda;
        eigMaxP = d.eigMaxP;
        tr.theta.push_back(std::move(d.theta));
        break;
      }
    }
    ePrev = e;
    const PidOutput u = pid_step(pid, setup.pid, e, dEst);
    tr.t.push_back(k * setup.pid.Ts);
    tr.r.push_back(rSeq[k]);
    tr.y.push_back(y);
    tr.ym.push_back(ym);
    tr.e.push_back(e);
    tr.u.push_back(u.u);
    tr.up.push_back(u.up);
    tr.ui.push_back(u.ui);
    tr.ud.push_back(u.ud);
    tr.lambda.push_back(lambda);
    tr.eigMaxP.push_back(eigMaxP);
    y = plant.step(u.u);
  }
  return tr;
}

double rmse(const std::vector<double>& y, const std::vector<double>& yBar) {
  if (y.size() != yBar.size() || y.empty()) {
    throw std::invalid_argument("rmse: sequences must be nonempty and equal length");
  }
  double acc = 0.0;
  for (size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - yBar[i];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(y.size()));
}

}  // namespace ad
