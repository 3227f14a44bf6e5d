#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ad/baselines.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Transfer-function magnitude of the cascaded sections at frequency w
// (rad/sample).
double magnitude(const ad::IirFilter& f, double w) {
  const std::complex<double> z = std::exp(std::complex<double>(0.0, -w));
  std::complex<double> h(1.0, 0.0);
  for (const auto& s : f.sections()) {
    h *= (s.b0 + s.b1 * z + s.b2 * z * z) / (1.0 + s.a1 * z + s.a2 * z * z);
  }
  return std::abs(h);
}

std::vector<std::complex<double>> poles(const ad::IirFilter& f) {
  std::vector<std::complex<double>> out;
  for (const auto& s : f.sections()) {
    if (s.a2 == 0.0) {
      out.emplace_back(-s.a1, 0.0);
      continue;
    }
    const std::complex<double> disc =
        std::sqrt(std::complex<double>(s.a1 * s.a1 - 4.0 * s.a2, 0.0));
    out.push_back((-s.a1 + disc) / 2.0);
    out.push_back((-s.a1 - disc) / 2.0);
  }
  return out;
}

}  // namespace

TEST_CASE("backward_difference: exact slope, Ts validation") {
  CHECK(ad::backward_difference(0.3, 0.1, 0.01) == doctest::Approx(20.0));
  CHECK(ad::backward_difference(1.0, 1.0, 0.5) == 0.0);
  CHECK_THROWS_AS(ad::backward_difference(1.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("MovingAverage: partial-window startup, rolling mean afterwards") {
  ad::MovingAverage ma(3);
  CHECK(ma.step(3.0) == doctest::Approx(3.0));
  CHECK(ma.step(6.0) == doctest::Approx(4.5));
  CHECK(ma.step(9.0) == doctest::Approx(6.0));
  CHECK(ma.step(0.0) == doctest::Approx(5.0));   // (6+9+0)/3
  CHECK(ma.step(-3.0) == doctest::Approx(2.0));  // (9+0-3)/3
  CHECK_THROWS_AS(ad::MovingAverage(0), std::domain_error);
}

TEST_CASE("MovingAverage: matches a direct windowed mean on random data") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> nd;
  ad::MovingAverage ma(10);
  std::vector<double> xs;
  for (int k = 0; k < 200; ++k) {
    xs.push_back(nd(rng));
    const double got = ma.step(xs.back());
    const int W = std::min<int>(10, xs.size());
    double mean = 0.0;
    for (int i = 0; i < W; ++i) mean += xs[xs.size() - 1 - i];
    mean /= W;
    CHECK(got == doctest::Approx(mean).epsilon(1e-12));
  }
}

TEST_CASE("IirFilter: single-biquad recursion by hand") {
  // y_k = 0.5 u_k + 0.25 u_{k-1} - (-0.1) y_{k-1}, DF2T realization
  ad::IirFilter f({ad::Biquad{0.5, 0.25, 0.0, -0.1, 0.0, 0.0, 0.0}});
  std::vector<double> u = {1.0, 0.0, 0.0, 2.0};
  std::vector<double> expected;
  double y1 = 0.0, u1 = 0.0;
  for (double uk : u) {
    const double yk = 0.5 * uk + 0.25 * u1 + 0.1 * y1;
    expected.push_back(yk);
    u1 = uk;
    y1 = yk;
  }
  for (size_t k = 0; k < u.size(); ++k) {
    CHECK(f.step(u[k]) == doctest::Approx(expected[k]).epsilon(1e-14));
  }
  f.reset();
  CHECK(f.step(u[0]) == doctest::Approx(expected[0]).epsilon(1e-14));
}

TEST_CASE("butterworth_design: gain contract at DC and cutoff") {
  for (double wc : {0.6 * kPi, 0.02 * kPi, 0.3 * kPi}) {
    for (int order : {2, 3, 5}) {
      const ad::IirFilter f = ad::butterworth_design(order, wc);
      CHECK(magnitude(f, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(magnitude(f, wc) ==
            doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
      for (const auto& p : poles(f)) CHECK(std::abs(p) < 1.0);
    }
  }
}

TEST_CASE("butterworth_design: magnitude response matches the frozen oracle") {
  // Reference magnitudes from an independent filter-design package.
  const ad::IirFilter f5 = ad::butterworth_design(5, 0.6 * kPi);
  CHECK(magnitude(f5, 0.05 * kPi) ==
        doctest::Approx(0.9999999999998133).epsilon(1e-10));
  CHECK(magnitude(f5, 0.2 * kPi) ==
        doctest::Approx(0.9999997312548586).epsilon(1e-10));
  CHECK(magnitude(f5, 0.9 * kPi) ==
        doctest::Approx(0.0004923311507284136).epsilon(1e-7));

  const ad::IirFilter fLow = ad::butterworth_design(5, 0.02 * kPi);
  CHECK(magnitude(fLow, 0.05 * kPi) ==
        doctest::Approx(0.010151279378057751).epsilon(1e-7));
  CHECK(magnitude(fLow, 0.2 * kPi) ==
        doctest::Approx(8.464157208358145e-06).epsilon(1e-6));
}

TEST_CASE("butterworth_design: pole locations match the frozen oracle") {
  const ad::IirFilter f5 = ad::butterworth_design(5, 0.6 * kPi);
  // Sorted by modulus: real pole, inner pair, outer pair.
  std::vector<std::complex<double>> got = poles(f5);
  std::sort(got.begin(), got.end(), [](auto a, auto b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a.imag() < b.imag();
  });
  REQUIRE(got.size() == 5);
  CHECK(got[0].real() == doctest::Approx(-0.15838444032453608).epsilon(1e-9));
  CHECK(got[0].imag() == doctest::Approx(0.0));
  CHECK(got[1].real() == doctest::Approx(-0.17464301293034484).epsilon(1e-9));
  CHECK(std::abs(got[1].imag()) ==
        doctest::Approx(0.3159321783398381).epsilon(1e-9));
  CHECK(got[3].real() == doctest::Approx(-0.2388273865470066).epsilon(1e-9));
  CHECK(std::abs(got[3].imag()) ==
        doctest::Approx(0.6990599365895502).epsilon(1e-9));
}

TEST_CASE("butterworth_design: argument validation") {
  CHECK_THROWS_AS(ad::butterworth_design(0, 0.5), std::domain_error);
  CHECK_THROWS_AS(ad::butterworth_design(5, 0.0), std::domain_error);
  CHECK_THROWS_AS(ad::butterworth_design(5, kPi), std::domain_error);
}
