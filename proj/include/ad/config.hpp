#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ad/aise.hpp"
#include "ad/control_sim.hpp"

// Flat key = value configuration with '#' comments, grouped by dotted
// prefixes. Unknown keys are rejected with the offending name.

namespace ad {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  // plant.*
  std::optional<double> plantK, plantTauC, plantDeadTime, plantTs;
  // pid.*
  std::optional<double> pidKp, pidKi, pidKd;
  // sim.*
  std::optional<long long> simN;
  std::optional<double> simR;
  // noise.segments
  std::vector<NoiseSegment> noiseSegments;
  // ma.* / bw.*
  int maWindow = 10;
  int bwOrder = 5;
  std::optional<double> bwCutoff;
  // aise.*
  std::optional<int> aiseNe, aiseNf;
  std::optional<double> aiseRz, aiseRd, aiseRtheta;
  // adapt.*
  std::optional<double> adaptEtaL, adaptEtaU, adaptBeta;
  int adaptGridSize = 50;
  // vrf.*
  std::optional<double> vrfEta, vrfAlpha;
  std::optional<int> vrfTauN, vrfTauD;
  // er.*
  std::optional<double> erRinf;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Assembled pieces, validated for the requested use. Missing keys raise
// ConfigError naming the key.
AiseConfig make_aise_config(const ExperimentConfig& c, double Ts, Method method);
LoopSetup make_loop_setup(const ExperimentConfig& c, Method method);

}  // namespace ad
