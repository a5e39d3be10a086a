#pragma once

#include <cstdint>
#include <vector>

#include "diskchaos/numeric.hpp"

namespace diskchaos {

// Continued fraction expansion [a0; a1, a2, ...] of a double. Quotients are
// emitted only while the remainder is still meaningful at binary64
// precision; `exact` marks expansions that terminate with remainder exactly
// zero, `truncated` ones cut short by the precision guard or depth cap.
struct ContinuedFraction {
  std::vector<std::int64_t> quotients;
  bool exact = false;
  bool truncated = false;
};

ContinuedFraction continued_fraction(double alpha, int depth = 40);

// Convergent p/q of a continued fraction; q >= 1, gcd(|p|, q) = 1, and
// consecutive convergents satisfy p_k q_(k-1) - p_(k-1) q_k = (-1)^(k-1).
struct Convergent {
  std::int64_t p = 0;
  std::int64_t q = 1;
};

struct ConvergentSeq {
  std::vector<Convergent> terms;
  bool overflow = false;  // recurrence left int64 range; tail dropped
};

ConvergentSeq convergents(const std::vector<std::int64_t>& quotients);

// A rotation angle together with its rational-approximation data.
struct RotationNumber {
  double alpha = 0.0;
  ContinuedFraction expansion;
  std::vector<Convergent> convergents;
  bool convergent_overflow = false;

  // Rational at working precision: the orbit frac(n*alpha) is periodic and
  // never equidistributes, so proximity/distality diagnostics degenerate.
  bool degenerate() const { return expansion.exact; }
};

RotationNumber analyze_rotation(double alpha, int depth = 40);

struct ReturnEntry {
  std::int64_t n = 0;
  double residual = 0.0;  // circle distance of frac(n*alpha) to the target
};

struct ReturnTimes {
  double target = 0.0;
  std::vector<ReturnEntry> entries;  // n strictly increasing
  bool complete = true;              // false: fewer entries exist than asked
};

// Times n <= cap at which frac(n*alpha) returns near 0, taken from the
// convergent denominators (the best-approximation law makes them the record
// holders, no scan needed). At most `count` entries, smallest n first;
// residuals use an error-free n*alpha product.
ReturnTimes return_times_near_zero(const RotationNumber& rn, int count, std::int64_t cap);

// Times at which frac(n*alpha) sets a new record for closeness to 1/2,
// found by a linear scan (cap <= 1e7). Each entry strictly improves the
// residual; the scan stops once `count` records are found.
ReturnTimes return_times_near_half(const RotationNumber& rn, int count, std::int64_t cap);

}  // namespace diskchaos
