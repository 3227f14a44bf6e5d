#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Synthetic smooth trajectories with closed-form derivatives, used for the
// open-loop differentiation experiments, plus the SNR diagnostic.

namespace ad {

enum class TrajectoryKind { sigmoidLateral, sinusoid, polynomial };

TrajectoryKind parse_trajectory_kind(const std::string& name);

struct Trajectory {
  std::vector<double> t;
  std::vector<double> y;
  std::vector<double> dTrue;  // analytic derivative
};

// sigmoidLateral: a late, gentle lane-change maneuver 2/(1+exp(-(t-30)/2)).
// sinusoid: sin(2 pi t). polynomial: t^2.
// The seed is accepted for interface uniformity; the trajectories are
// deterministic.
Trajectory synth_trajectory(TrajectoryKind kind, long long N, double Ts,
                            std::uint64_t seed);

double snr_db(const std::vector<double>& signal, const std::vector<double>& noise);

}  // namespace ad
