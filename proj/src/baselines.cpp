#include "ad/baselines.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace ad {

MovingAverage::MovingAverage(int window) : window_(window) {
  if (window < 1) throw std::domain_error("MovingAverage: window must be >= 1");
}

double MovingAverage::step(double u) {
  buf_.push_back(u);
  sum_ += u;
  if (static_cast<int>(buf_.size()) > window_) {
    sum_ -= buf_.front();
    buf_.pop_front();
  }
  return sum_ / static_cast<double>(buf_.size());
}

double IirFilter::step(double u) {
  double x = u;
  for (Biquad& s : sections_) {
    const double y = s.b0 * x + s.s1;
    s.s1 = s.b1 * x - s.a1 * y + s.s2;
    s.s2 = s.b2 * x - s.a2 * y;
    x = y;
  }
  return x;
}

void IirFilter::reset() {
  for (Biquad& s : sections_) s.s1 = s.s2 = 0.0;
}

IirFilter butterworth_design(int order, double cutoff) {
  if (order < 1) throw std::domain_error("butterworth_design: order must be >= 1");
  if (!(cutoff > 0.0 && cutoff < std::numbers::pi)) {
    throw std::domain_error("butterworth_design: cutoff must lie in (0, pi)");
  }
  // Prewarped analog cutoff for the bilinear transform with T = 2.
  const double wc = std::tan(0.5 * cutoff);

  std::vector<Biquad> sections;
  // Analog prototype poles on the unit circle, scaled by wc; conjugate pairs
  // map to biquads, a real pole (odd order) to a degenerate first-order section.
  const int npairs = order / 2;
  for (int i = 0; i < npairs; ++i) {
    const double theta = std::numbers::pi * (2.0 * i + 1.0 + order) / (2.0 * order);
    const std::complex<double> p = wc * std::polar(1.0, theta);
    const std::complex<double> zp = (1.0 + p) / (1.0 - p);  // bilinear map
    Biquad s;
    s.a1 = -2.0 * zp.real();
    s.a2 = std::norm(zp);
    const double k = (1.0 + s.a1 + s.a2) / 4.0;  // unity gain at z = 1
    s.b0 = k;
    s.b1 = 2.0 * k;
    s.b2 = k;
    sections.push_back(s);
  }
  if (order % 2 == 1) {
    const double p = -wc;  // real prototype pole
    const double zp = (1.0 + p) / (1.0 - p);
    Biquad s;
    s.a1 = -zp;
    s.a2 = 0.0;
    const double k = (1.0 + s.a1) / 2.0;
    s.b0 = k;
    s.b1 = k;
    s.b2 = 0.0;
    sections.push_back(s);
  }
  return IirFilter(std::move(sections));
}

}  // namespace ad
