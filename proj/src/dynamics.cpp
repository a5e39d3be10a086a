#include "diskchaos/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace diskchaos {

LogPolar g_step(const LogPolar& p, Direction dir) {
  if (!p.is_interior()) return p;
  if (dir == Direction::Forward) {
    return LogPolar::interior(p.s + 2.0, wrap_unit(p.theta + xi_of_s(p.s)));
  }
  return LogPolar::interior(p.s - 2.0, wrap_unit(p.theta - xi_of_s(p.s - 2.0)));
}

DiskPoint f_step(const DiskPoint& z, Direction dir) {
  if (z.rho == 0.0 || z.rho == 1.0) return z;
  return to_disk(g_step(to_logpolar(z), dir));
}

DiskPoint f_step_explicit(const DiskPoint& z) {
  if (z.rho == 0.0 || z.rho == 1.0) return z;
  static const double e2 = std::exp(2.0);
  double rho = e2 * z.rho / ((e2 - 1.0) * z.rho + 1.0);
  double phase = xi_of_r(z.rho / (1.0 - z.rho));
  return DiskPoint(rho < 1.0 ? rho : 1.0, wrap_unit(z.theta + phase));
}

std::vector<OrbitSample> iterate(const LogPolar& start, std::int64_t steps, Direction dir,
                                 std::int64_t stride) {
  if (steps < 0 || steps > kIterateCap) {
    throw std::domain_error("iterate: steps must lie in [0, 1e7]; use fast_forward beyond");
  }
  if (stride < 1) throw std::domain_error("iterate: stride must be positive");
  std::vector<OrbitSample> out;
  out.reserve(std::size_t(steps / stride) + 2);
  LogPolar cur = start;
  out.push_back({0, cur, to_disk(cur)});
  for (std::int64_t t = 1; t <= steps; ++t) {
    cur = g_step(cur, dir);
    if (t % stride == 0 || t == steps) out.push_back({t, cur, to_disk(cur)});
  }
  return out;
}

LogPolar fast_forward(const LogPolar& p, std::int64_t steps) {
  if (steps < 0 || steps > kFastForwardCap) {
    throw std::domain_error("fast_forward: steps must lie in [0, 2^62]");
  }
  if (!p.is_interior()) return p;
  double s = p.s + 2.0 * double(steps);
  if (!std::isfinite(s)) {
    throw std::overflow_error("fast_forward: s overflows; use dyadic_fast_forward");
  }
  return LogPolar::interior(s, reduce_phase(p.theta, phase_sum_parts(p.s, steps)));
}

LogPolar dyadic_fast_forward(double s0, double theta0, int exponent) {
  if (!(s0 > 0.0 && s0 < 1.0)) {
    throw std::domain_error("dyadic_fast_forward: s0 must lie in (0, 1)");
  }
  if (exponent < 0) throw std::domain_error("dyadic_fast_forward: exponent must be nonnegative");
  if (exponent > kDyadicExponentCap) {
    throw std::overflow_error("dyadic_fast_forward: exponent exceeds cap 1000");
  }
  if (exponent == 0) return LogPolar::interior(s0, wrap_unit(theta0));
  // For s0 in (0, 1) every orbit point up to time 2^n - 1 sits on a rising
  // ramp, and the block sum over [1, 2^n - 1] is exactly n: the phase
  // advance is n * s0 on the nose.
  double s = s0 + (std::exp2(double(exponent + 1)) - 2.0);  // s0 + 2(2^n - 1)
  return LogPolar::interior(s, reduce_phase(theta0, two_product(double(exponent), s0)));
}

double backward_orbit_modulus(const DiskPoint& z, std::int64_t n) {
  if (!(z.rho > 0.0 && z.rho < 1.0)) {
    throw std::domain_error("backward_orbit_modulus: rho must lie in (0, 1)");
  }
  if (n < 0) throw std::domain_error("backward_orbit_modulus: n must be nonnegative");
  if (n == 0) return z.rho;  // identity, exactly; the log round trip wobbles an ulp
  return logistic_radius(logit_radius(z.rho) - 2.0 * double(n));
}

}  // namespace diskchaos
