#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ad/aise.hpp"
#include "ad/baselines.hpp"

// ZOH-discretized first-order-lag-plus-dead-time plant, digital PID with a
// pluggable derivative source, nonstationary measurement noise, and the
// closed-loop simulation with RMSE scoring.

namespace ad {

enum class Method { bd, bdMa, bdBw, aise, aiseVrfEr };

std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

struct PlantConfig {
  double Kdc = 1.0;
  double tauC = 1.0;
  double deadTime = 0.0;
  double Ts = 1.0;
};

class DiscretePlant {
 public:
  explicit DiscretePlant(const PlantConfig& cfg);  // exact ZOH discretization
  // One sample: the lag state is driven by the input nd+1 steps old
  // (one step from z(z - gamma), nd from the dead time).
  double step(double u);
  double gamma() const { return gamma_; }
  double gain() const { return gain_; }
  int nd() const { return nd_; }

 private:
  double gamma_ = 0.0;
  double gain_ = 0.0;
  int nd_ = 0;
  double lag_ = 0.0;
  std::vector<double> delay_;
  int head_ = 0;
};

struct PidConfig {
  double Kp = 0.0;
  double Ki = 0.0;
  double Kd = 0.0;
  double Ts = 1.0;
};

struct PidState {
  double ui = 0.0;
};

struct PidOutput {
  double u = 0.0, up = 0.0, ui = 0.0, ud = 0.0;
};

// up = Kp e; ud = Kd dEst; u = up + ui + ud; then ui accumulates Ki Ts e.
PidOutput pid_step(PidState& st, const PidConfig& cfg, double e, double dEst);

struct NoiseSegment {
  long long kStart = 0;
  long long kEnd = 0;  // inclusive
  double D2 = 0.0;     // standard deviation
};

struct NoiseModel {
  std::vector<NoiseSegment> segments;
  std::uint64_t seed = 0;
};

// Seeded Gaussian sequence; sample k has standard deviation D2(k).
// Segments must be contiguous, non-overlapping and cover [0, N).
std::vector<double> generate_noise(const NoiseModel& model, long long N);

struct ClosedLoopTrace {
  std::vector<double> t, r, y, ym, e, u, up, ui, ud;
  std::vector<double> lambda, eigMaxP;       // populated for AISE variants
  std::vector<Eigen::VectorXd> theta;        // idem, theta_{k+1} snapshots
  std::uint64_t seed = 0;
  Method method = Method::bd;
};

struct LoopSetup {
  PlantConfig plant;
  PidConfig pid;
  Method method = Method::bd;
  int maWindow = 10;
  int bwOrder = 5;
  double bwCutoff = 0.5;  // rad/sample
  AiseConfig aise;        // used by the AISE variants
};

ClosedLoopTrace simulate_closed_loop(const LoopSetup& setup,
                                     const std::vector<double>& noise,
                                     const std::vector<double>& rSeq);

double rmse(const std::vector<double>& y, const std::vector<double>& yBar);

}  // namespace ad
