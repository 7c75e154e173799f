#include <doctest.h>

#include <stdexcept>

#include "mmwprop/geometry.hpp"
#include "mmwprop/units.hpp"

using namespace mmwprop;

TEST_CASE("derive_d3d basic values") {
  CHECK(derive_d3d(0.0, 10.0, 1.5) == doctest::Approx(8.5).epsilon(1e-12));
  CHECK(derive_d3d(100.0, 10.0, 1.5) == doctest::Approx(100.360599839).epsilon(1e-10));
  CHECK(derive_d3d(100.0, 1.5, 1.5) == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("derive_d3d rejects bad inputs") {
  CHECK_THROWS_AS(derive_d3d(-1.0, 10.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(derive_d3d(10.0, 0.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(derive_d3d(10.0, 10.0, -2.0), std::domain_error);
}

TEST_CASE("derive_d3d is monotone in each argument") {
  double prev = 0.0;
  for (double d = 0.0; d <= 1000.0; d += 37.0) {
    const double v = derive_d3d(d, 10.0, 1.5);
    CHECK(v >= prev);
    prev = v;
  }
  prev = 0.0;
  for (double h = 2.0; h <= 100.0; h += 7.0) {
    const double v = derive_d3d(50.0, h, 1.5);
    if (h > 1.5) CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("LinkGeometry factories keep d3d and d2d consistent") {
  const auto a = LinkGeometry::from_d2d(100.0, 10.0, 1.5);
  CHECK(a.d3d_m == doctest::Approx(100.360599839).epsilon(1e-10));
  CHECK_NOTHROW(a.validate());

  const auto b = LinkGeometry::from_d3d(100.0, 25.0, 1.5);
  CHECK(b.d2d_m == doctest::Approx(97.22057909).epsilon(1e-8));
  CHECK_NOTHROW(b.validate());

  CHECK_THROWS_AS(LinkGeometry::from_d3d(10.0, 25.0, 1.5), std::domain_error);
}

TEST_CASE("indoor split must add up") {
  const auto g = LinkGeometry::from_d2d(100.0, 10.0, 1.5);
  const auto split = g.with_indoor_split(90.0, 10.0);
  CHECK(split.d2d_out_m.value() == 90.0);
  CHECK(split.d2d_in_m.value() == 10.0);
  CHECK_THROWS_AS(g.with_indoor_split(80.0, 10.0), std::domain_error);
  CHECK_THROWS_AS(g.with_indoor_split(110.0, -10.0), std::domain_error);
}

TEST_CASE("frequency must be positive and finite") {
  CHECK(Frequency(28.0).ghz() == 28.0);
  CHECK_THROWS_AS(Frequency(0.0), std::domain_error);
  CHECK_THROWS_AS(Frequency(-5.0), std::domain_error);
  CHECK_THROWS_AS(Frequency(std::numeric_limits<double>::infinity()), std::domain_error);
  CHECK_THROWS_AS(Frequency(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}
