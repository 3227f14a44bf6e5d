#pragma once

#include <deque>
#include <stdexcept>
#include <vector>

// Baseline causal differentiators: backward difference, moving-average
// smoothing, and a discrete Butterworth low-pass (cascaded biquads).

namespace ad {

inline double backward_difference(double eK, double ePrev, double Ts) {
  if (Ts <= 0.0) throw std::domain_error("backward_difference: Ts must be positive");
  return (eK - ePrev) / Ts;
}

class MovingAverage {
 public:
  explicit MovingAverage(int window);
  // Mean of the most recent min(k+1, W) inputs (partial-window startup).
  double step(double u);

 private:
  int window_;
  double sum_ = 0.0;
  std::deque<double> buf_;
};

struct Biquad {
  double b0 = 0.0, b1 = 0.0, b2 = 0.0;  // numerator
  double a1 = 0.0, a2 = 0.0;            // denominator (a0 = 1)
  double s1 = 0.0, s2 = 0.0;            // DF2T state
};

class IirFilter {
 public:
  explicit IirFilter(std::vector<Biquad> sections) : sections_(std::move(sections)) {}
  double step(double u);
  const std::vector<Biquad>& sections() const { return sections_; }
  void reset();

 private:
  std::vector<Biquad> sections_;
};

// Discrete low-pass from the analog Butterworth prototype via prewarped
// bilinear transform; unity DC gain, magnitude 1/sqrt(2) at the cutoff.
// cutoff is in rad/sample, within (0, pi).
IirFilter butterworth_design(int order, double cutoff);

}  // namespace ad
