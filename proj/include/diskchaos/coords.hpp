#pragma once

#include "diskchaos/numeric.hpp"

namespace diskchaos {

enum class PointClass { Interior, Origin, Boundary };

// Point of the closed unit disk in polar form. rho in [0, 1], theta in turns
// reduced to [0, 1). The origin is canonicalized to theta = 0.
struct DiskPoint {
  double rho = 0.0;
  double theta = 0.0;

  DiskPoint() = default;
  DiskPoint(double rho_in, double theta_turns);

  bool operator==(const DiskPoint&) const = default;
};

// Interior point in log-polar coordinates of the conjugate plane:
// s = ln|w| where w = h(z) = z/(1-|z|), theta in turns. The origin and the
// boundary circle have no finite s and are carried as tagged sentinels.
struct LogPolar {
  PointClass tag = PointClass::Origin;
  double s = 0.0;      // meaningful for Interior only
  double theta = 0.0;  // meaningful for Interior and Boundary, in [0, 1)

  static LogPolar origin();
  static LogPolar boundary(double theta_turns);
  static LogPolar interior(double s, double theta_turns);

  bool is_interior() const { return tag == PointClass::Interior; }

  bool operator==(const LogPolar&) const = default;
};

// Point of the conjugate plane in polar form, r >= 0.
struct PlanePoint {
  double r = 0.0;
  double theta = 0.0;

  PlanePoint() = default;
  PlanePoint(double r_in, double theta_turns);

  bool operator==(const PlanePoint&) const = default;
};

// ln(rho/(1-rho)), the log-modulus of h. Strictly increasing on (0, 1);
// throws std::domain_error outside the open interval.
double logit_radius(double rho);

// Inverse of logit_radius: rho = e^s/(1+e^s), evaluated without overflow for
// any finite s. Rounds to 0 below s ~ -745 and to 1 above s ~ 36.7.
double logistic_radius(double s);

LogPolar to_logpolar(const DiskPoint& z);
DiskPoint to_disk(const LogPolar& p);

// Conjugacy h(z) = z/(1-|z|) and its inverse, on polar representatives.
// h rejects boundary points (no finite image); h_from_plane never throws.
PlanePoint h_to_plane(const DiskPoint& z);
DiskPoint h_from_plane(const PlanePoint& w);

// Plane bridges for LogPolar. to_plane rejects Boundary and throws
// std::overflow_error when e^s overflows; from_plane maps r = 0 to Origin.
PlanePoint to_plane(const LogPolar& p);
LogPolar from_plane(const PlanePoint& w);

// Euclidean chord distance between disk points, in [0, 2]. Computed in the
// half-angle form (rho_a - rho_b)^2 + 4 rho_a rho_b sin^2(pi dtheta), which
// loses no precision when the radii nearly coincide.
double disk_distance(const DiskPoint& a, const DiskPoint& b);

// disk_distance of the images under h^-1, evaluated directly from log-polar
// data. Deep interior points (s > 40 on both sides) use the boundary
// asymptote 2|sin(pi dtheta)|; the switch commits an error below 1e-17.
double logpolar_distance(const LogPolar& a, const LogPolar& b);

}  // namespace diskchaos
