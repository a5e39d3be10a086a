#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "diskchaos/coords.hpp"
#include "doctest.h"

using namespace diskchaos;

namespace {

double u01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

}  // namespace

TEST_CASE("logit_radius: pinned values and domain") {
  CHECK(logit_radius(0.5) == 0.0);
  // 60-digit reference: ln 9 = 2.19722457733621938279...
  CHECK(logit_radius(0.9) == doctest::Approx(2.1972245773362194).epsilon(1e-15));
  CHECK_THROWS_AS(logit_radius(0.0), std::domain_error);
  CHECK_THROWS_AS(logit_radius(1.0), std::domain_error);
  CHECK_THROWS_AS(logit_radius(-0.1), std::domain_error);
  CHECK_THROWS_AS(logit_radius(1.1), std::domain_error);
}

TEST_CASE("logistic_radius: pinned values, no premature underflow") {
  CHECK(logistic_radius(0.0) == 0.5);
  // e/(1+e) = 0.73105857863000487925...
  CHECK(logistic_radius(1.0) == doctest::Approx(0.7310585786300049).epsilon(1e-15));
  // e^-60/(1+e^-60) = 8.75651076269652033825e-27
  CHECK(logistic_radius(-60.0) == doctest::Approx(8.7565107626965203e-27).epsilon(1e-13));
  CHECK(logistic_radius(-60.0) > 0.0);
  CHECK(logistic_radius(-800.0) == 0.0);  // below binary64 range; the limit value
  CHECK(logistic_radius(40.0) == 1.0);    // saturates one ulp under 37
  CHECK_THROWS_AS(logistic_radius(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("logit and logistic invert each other") {
  for (double s = -30.0; s <= 30.0; s += 0.37) {
    // rho stores s only to within its own ulp, so the recoverable
    // resolution degrades like e^s * 2^-53 as rho approaches 1
    double tol = 1e-13 * (1.0 + std::abs(s)) + std::exp(s) * 0x1.0p-51;
    CHECK(std::abs(logit_radius(logistic_radius(s)) - s) <= tol);
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    double rho = 1e-6 + (1.0 - 2e-6) * u01(rng);
    CHECK(logistic_radius(logit_radius(rho)) == doctest::Approx(rho).epsilon(1e-12));
  }
}

TEST_CASE("DiskPoint canonicalization and validation") {
  DiskPoint z(0.5, 1.25);
  CHECK(z.theta == 0.25);
  CHECK(DiskPoint(0.0, 0.7).theta == 0.0);  // origin has a single representative
  CHECK(DiskPoint(0.4, -0.25).theta == 0.75);
  CHECK(DiskPoint(0.4, 1.0).theta == 0.0);
  CHECK_THROWS_AS(DiskPoint(-0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(DiskPoint(1.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(DiskPoint(0.5, std::nan("")), std::domain_error);
}

TEST_CASE("to_logpolar / to_disk round trip") {
  CHECK(to_logpolar(DiskPoint{}).tag == PointClass::Origin);
  CHECK(to_logpolar(DiskPoint(1.0, 0.3)).tag == PointClass::Boundary);
  LogPolar mid = to_logpolar(DiskPoint(0.5, 0.25));
  CHECK(mid.s == 0.0);
  CHECK(mid.theta == 0.25);
  CHECK(to_disk(LogPolar::origin()) == DiskPoint{});
  CHECK(to_disk(LogPolar::boundary(0.3)) == DiskPoint(1.0, 0.3));

  std::mt19937_64 rng(101);
  for (int i = 0; i < 10'000; ++i) {
    double rho = 1e-6 + (1.0 - 2e-6) * u01(rng);
    DiskPoint z(rho, u01(rng));
    DiskPoint back = to_disk(to_logpolar(z));
    CHECK(std::abs(back.rho - z.rho) < 1e-12);
    CHECK(std::abs(back.theta - z.theta) < 1e-12);
  }
}

TEST_CASE("plane bridges realize the conjugacy change of variables") {
  PlanePoint w = h_to_plane(DiskPoint(0.9, 0.25));
  CHECK(w.r == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(w.theta == 0.25);
  CHECK(h_from_plane(PlanePoint(9.0, 0.25)).rho == 0.9);
  CHECK(h_to_plane(DiskPoint{}) == PlanePoint{});
  CHECK(h_from_plane(PlanePoint{}) == DiskPoint{});
  CHECK_THROWS_AS(h_to_plane(DiskPoint(1.0, 0.0)), std::domain_error);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    double rho = 1e-3 + (1.0 - 2e-3) * u01(rng);
    DiskPoint z(rho, u01(rng));
    DiskPoint back = h_from_plane(h_to_plane(z));
    CHECK(std::abs(back.rho - z.rho) < 1e-15);
    CHECK(back.theta == z.theta);
  }

  // log-polar view of the same plane point
  LogPolar p = from_plane(PlanePoint(9.0, 0.1));
  CHECK(p.s == doctest::Approx(std::log(9.0)).epsilon(1e-15));
  CHECK(to_plane(p).r == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(from_plane(PlanePoint{}).tag == PointClass::Origin);
  CHECK(to_plane(LogPolar::origin()) == PlanePoint{});
  CHECK_THROWS_AS(to_plane(LogPolar::boundary(0.0)), std::domain_error);
  CHECK_THROWS_AS(to_plane(LogPolar::interior(800.0, 0.0)), std::overflow_error);
}

TEST_CASE("disk_distance: pinned values and metric axioms") {
  DiskPoint a(1.0, 0.0);
  CHECK(disk_distance(a, a) == 0.0);
  CHECK(disk_distance(a, DiskPoint(1.0, 0.5)) == 2.0);  // antipodal boundary points
  CHECK(disk_distance(a, DiskPoint(1.0, 0.25)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(disk_distance(DiskPoint{}, a) == 1.0);
  CHECK(disk_distance(DiskPoint(0.3, 0.2), DiskPoint(0.7, 0.2)) ==
        doctest::Approx(0.4).epsilon(1e-15));

  std::mt19937_64 rng(42);
  auto sample = [&] { return DiskPoint(u01(rng), u01(rng)); };
  for (int i = 0; i < 2000; ++i) {
    DiskPoint x = sample(), y = sample(), z = sample();
    double dxy = disk_distance(x, y);
    CHECK(dxy == disk_distance(y, x));
    CHECK(dxy >= 0.0);
    CHECK(dxy <= 2.0);
    CHECK(dxy <= disk_distance(x, z) + disk_distance(z, y) + 1e-12);
  }
}

TEST_CASE("disk_distance is stable for nearly equal radii") {
  // same radius, tiny angle: distance = 2 rho sin(pi dtheta), no cancellation
  DiskPoint a(0.75, 0.0), b(0.75, 1e-12);
  double expected = 2.0 * 0.75 * std::sin(std::numbers::pi * 1e-12);
  CHECK(disk_distance(a, b) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("logpolar_distance agrees with disk_distance on representable points") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 5000; ++i) {
    double sa = -30.0 + 60.0 * u01(rng);
    double sb = -30.0 + 60.0 * u01(rng);
    LogPolar a = LogPolar::interior(sa, u01(rng));
    LogPolar b = LogPolar::interior(sb, u01(rng));
    CHECK(std::abs(logpolar_distance(a, b) - disk_distance(to_disk(a), to_disk(b))) < 1e-12);
  }
}

TEST_CASE("logpolar_distance: sentinels and the deep-interior asymptote") {
  CHECK(logpolar_distance(LogPolar::origin(), LogPolar::origin()) == 0.0);
  CHECK(logpolar_distance(LogPolar::origin(), LogPolar::boundary(0.3)) == 1.0);
  CHECK(logpolar_distance(LogPolar::origin(), LogPolar::interior(0.0, 0.9)) == 0.5);
  CHECK(logpolar_distance(LogPolar::boundary(0.0), LogPolar::boundary(0.5)) == 2.0);
  // both far out: the chord depends on the angles alone
  CHECK(logpolar_distance(LogPolar::interior(100.0, 0.0), LogPolar::interior(100.0, 0.5)) == 2.0);
  CHECK(logpolar_distance(LogPolar::interior(44.0, 0.2), LogPolar::boundary(0.2)) == 0.0);
  // continuity across the s = 40 switch
  double below = logpolar_distance(LogPolar::interior(39.999, 0.0), LogPolar::interior(5.0, 0.25));
  double above = logpolar_distance(LogPolar::interior(40.001, 0.0), LogPolar::interior(5.0, 0.25));
  CHECK(std::abs(below - above) < 1e-12);
}
