#pragma once

#include <cmath>

namespace diskchaos {

// Reduce x to the unit interval [0, 1). Angles are measured in turns
// (1 turn = 2*pi radians) throughout; fractional parts of integer multiples
// stay exact in this unit.
inline double wrap_unit(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f = 0.0;  // x - floor(x) can round up to 1.0 for tiny negative x
  return f;
}

// Distance between a and b on the circle R/Z, in [0, 1/2].
inline double circle_distance(double a, double b) {
  double d = wrap_unit(a - b);
  return d <= 0.5 ? d : 1.0 - d;
}

// Unevaluated double-double sum: hi + lo represents a value to ~2^-106.
struct TwoTerm {
  double hi = 0.0;
  double lo = 0.0;
};

// Error-free transformation: hi = fl(a*b) and hi + lo == a*b exactly.
inline TwoTerm two_product(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// frac(theta0 + hi + lo) in turns. The head is reduced mod 1 before the
// compensation term is applied, so the tail survives even when hi is large.
inline double reduce_phase(double theta0, TwoTerm phase) {
  double head = phase.hi - std::floor(phase.hi);  // exact
  double x = theta0 + head;
  x += phase.lo;
  return wrap_unit(x);
}

}  // namespace diskchaos
