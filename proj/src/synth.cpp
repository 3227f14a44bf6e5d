#include "ad/synth.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ad {

TrajectoryKind parse_trajectory_kind(const std::string& name) {
  if (name == "sigmoidLateral") return TrajectoryKind::sigmoidLateral;
  if (name == "sinusoid") return TrajectoryKind::sinusoid;
  if (name == "polynomial") return TrajectoryKind::polynomial;
  throw std::domain_error("unknown trajectory kind '" + name + "'");
}

Trajectory synth_trajectory(TrajectoryKind kind, long long N, double Ts,
                            std::uint64_t /*seed*/) {
  if (N < 1 || Ts <= 0.0) throw std::domain_error("synth_trajectory: need N >= 1, Ts > 0");
  Trajectory tr;
  tr.t.resize(N);
  tr.y.resize(N);
  tr.dTrue.resize(N);
  for (long long k = 0; k < N; ++k) {
    const double t = k * Ts;
    tr.t[k] = t;
    switch (kind) {
      case TrajectoryKind::sigmoidLateral: {
        const double amp = 2.0, t0 = 30.0, w = 2.0;
        const double ex = std::exp(-(t - t0) / w);
        const double s = 1.0 / (1.0 + ex);
        tr.y[k] = amp * s;
        tr.dTrue[k] = amp * ex * s * s / w;
        break;
      }
      case TrajectoryKind::sinusoid: {
        const double w = 2.0 * std::numbers::pi;
        tr.y[k] = std::sin(w * t);
        tr.dTrue[k] = w * std::cos(w * t);
        break;
      }
      case TrajectoryKind::polynomial:
        tr.y[k] = t * t;
        tr.dTrue[k] = 2.0 * t;
        break;
    }
  }
  return tr;
}

double snr_db(const std::vector<double>& signal, const std::vector<double>& noise) {
  if (signal.size() != noise.size()) {
    throw std::invalid_argument("snr_db: length mismatch");
  }
  double ps = 0.0, pn = 0.0;
  for (size_t i = 0; i < signal.size(); ++i) {
    ps += signal[i] * signal[i];
    pn += noise[i] * noise[i];
  }
  if (pn == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(ps / pn);
}

}  // namespace ad
