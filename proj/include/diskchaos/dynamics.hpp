#pragma once

#include <cstdint>
#include <vector>

#include "diskchaos/coords.hpp"
#include "diskchaos/xi.hpp"

namespace diskchaos {

enum class Direction { Forward, Backward };

// Single step of the plane map g(w) = e^2 w e^(2 pi i xi(|w|)) in log-polar
// coordinates: s' = s + 2 (one rounding, exact for |s| < 2^51), theta' =
// theta + xi(s) mod 1. Backward inverts exactly in exact arithmetic:
// theta' = theta - xi(s - 2). Origin and Boundary are fixed.
LogPolar g_step(const LogPolar& p, Direction dir);

// Conjugated disk map f = h^-1 g h via the log-polar route. The origin and
// boundary points are fixed (f extends to them as the identity on rho in
// {0, 1} up to the boundary rotation, which the log route realizes too).
DiskPoint f_step(const DiskPoint& z, Direction dir);

// Forward f on an interior point straight from the disk formula
//   |f(z)| = e^2 rho / (e^2 rho - rho + 1),  arg += 2 pi xi(rho/(1-rho)),
// with no log-polar intermediate. Independent of f_step up to rounding;
// rho in {0, 1} is fixed.
DiskPoint f_step_explicit(const DiskPoint& z);

struct OrbitSample {
  std::int64_t time = 0;
  LogPolar point;
  DiskPoint disk_point;
};

inline constexpr std::int64_t kIterateCap = 10'000'000;
inline constexpr int kDyadicExponentCap = 1000;
inline constexpr std::int64_t kFastForwardCap = std::int64_t{1} << 62;

// Stepwise orbit of length `steps` (recording every stride-th sample plus
// the endpoints). Capped at kIterateCap steps; longer horizons belong to
// fast_forward.
std::vector<OrbitSample> iterate(const LogPolar& start, std::int64_t steps, Direction dir,
                                 std::int64_t stride = 1);

// g^steps in one shot: s' = s + 2n with one rounding and the phase advanced
// by phase_sum(s, n) in head/tail form. O(log n) for n up to 2^62.
LogPolar fast_forward(const LogPolar& p, std::int64_t steps);

// Orbit position at time 2^exponent - 1 for a start on the positive axis
// segment s0 in (0, 1) (theta0 turns): the phase sum collapses to exactly
// exponent * s0, evaluated with an error-free product. Valid for exponents
// up to kDyadicExponentCap, far past where time itself is representable.
LogPolar dyadic_fast_forward(double s0, double theta0, int exponent);

// |f^-n(z)| for an interior point, via the exact log-coordinate s - 2n.
// Decreases to 0 as n grows: the backward orbit of every interior point
// falls into the origin.
double backward_orbit_modulus(const DiskPoint& z, std::int64_t n);

}  // namespace diskchaos
