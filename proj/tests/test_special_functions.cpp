#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ad/special_functions.hpp"

// Reference values frozen from an independent statistical library
// (continued-fraction-free quadrature cross-checked).
namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("beta_inc_reg: closed forms and boundary values") {
  // I_x(1,1) = x
  for (double x : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0}) {
    CHECK(ad::beta_inc_reg(1.0, 1.0, x) == doctest::Approx(x).epsilon(1e-14));
  }
  // I_x(1,b) = 1 - (1-x)^b
  CHECK(ad::beta_inc_reg(1.0, 3.0, 0.2) ==
        doctest::Approx(1.0 - std::pow(0.8, 3.0)).epsilon(1e-13));
  // I_x(a,1) = x^a
  CHECK(ad::beta_inc_reg(4.0, 1.0, 0.7) ==
        doctest::Approx(std::pow(0.7, 4.0)).epsilon(1e-13));
  CHECK(ad::beta_inc_reg(2.5, 3.5, 0.0) == 0.0);
  CHECK(ad::beta_inc_reg(2.5, 3.5, 1.0) == 1.0);
}

TEST_CASE("beta_inc_reg: reflection symmetry I_x(a,b) = 1 - I_{1-x}(b,a)") {
  const double as[] = {0.5, 1.0, 2.5, 20.0};
  const double bs[] = {0.7, 3.0, 69.76};
  for (double a : as) {
    for (double b : bs) {
      for (double x : {0.05, 0.3, 0.5, 0.77, 0.95}) {
        const double lhs = ad::beta_inc_reg(a, b, x);
        const double rhs = 1.0 - ad::beta_inc_reg(b, a, 1.0 - x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("f_cdf: frozen oracle values") {
  CHECK(ad::f_cdf(3.0, 8.0, 2.5) ==
        doctest::Approx(0.8665154649784221).epsilon(1e-12));
  CHECK(ad::f_cdf(40.0, 139.52, 1.5) ==
        doctest::Approx(0.955229107890522).epsilon(1e-12));
  CHECK(ad::f_cdf(5.0, 7.0, 0.0) == 0.0);
  // monotone increasing in x
  double prev = 0.0;
  for (double x = 0.1; x < 6.0; x += 0.1) {
    const double c = ad::f_cdf(5.0, 7.0, x);
    CHECK(c > prev);
    prev = c;
  }
}

TEST_CASE("f_quantile: median of symmetric-dof F is 1") {
  for (double d : {1.0, 5.0, 40.0}) {
    CHECK(ad::f_quantile(d, d, 0.5) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("f_quantile: F(1,1) closed form tan^2(pi p / 2)") {
  for (double p = 0.1; p < 0.95; p += 0.1) {
    const double expected = std::pow(std::tan(kPi * p / 2.0), 2.0);
    CHECK(ad::f_quantile(1.0, 1.0, p) ==
          doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("f_quantile: frozen oracle values, including non-integer dof") {
  CHECK(ad::f_quantile(40.0, 139.52, 0.92) ==
        doctest::Approx(1.3986570807407965).epsilon(1e-9));
  CHECK(ad::f_quantile(2.0, 10.0, 0.95) ==
        doctest::Approx(4.1028210151304005).epsilon(1e-9));
  CHECK(ad::f_quantile(5.0, 7.0, 0.3) ==
        doctest::Approx(0.6050766341882887).epsilon(1e-9));
}

TEST_CASE("f_quantile: CDF round trip") {
  for (double p : {0.01, 0.2, 0.5, 0.8, 0.92, 0.99}) {
    const double q = ad::f_quantile(40.0, 139.52, p);
    CHECK(ad::f_cdf(40.0, 139.52, q) == doctest::Approx(p).epsilon(1e-9));
  }
  CHECK(ad::f_quantile(3.0, 9.0, 0.0) == 0.0);
}

TEST_CASE("f_quantile: invalid arguments throw") {
  CHECK_THROWS_AS(ad::f_quantile(0.0, 5.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(ad::f_quantile(5.0, -1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(ad::f_quantile(5.0, 5.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ad::f_quantile(5.0, 5.0, -0.1), std::domain_error);
}
