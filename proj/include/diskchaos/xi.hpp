#pragma once

#include <cstdint>
#include <string>

#include "diskchaos/numeric.hpp"

namespace diskchaos {

enum class XiParity { Zero, Even, Odd };

// Branch data of the angular-speed profile at log-radius s: the parity of
// floor(s) selects the rising or falling ramp, and block_index b gives the
// amplitude 2^-b, b = floor(log2(floor(s/2) + 1)).
struct XiBranch {
  XiParity parity = XiParity::Zero;
  int block_index = 0;
};

XiBranch xi_branch(double s);

// Angular speed at log-radius s, in turns. Zero for s <= 0; on [q, q+1] with
// q = floor(s) it ramps linearly between 0 and 2^-b (up for even q, down for
// odd q), so consecutive ramps share endpoint values within one block and
// halve across block boundaries s = 2^k+1 - 1. Range [0, 1], and the value 1
// is attained only at s = 1 where it is a full turn, i.e. phase 0.
double xi_of_s(double s);

// Same profile as a function of the plane radius r = e^s; zero for r <= 1.
double xi_of_r(double r);

// Envelope 2^-b of the ramp containing s (0 for s <= 0). xi_of_s(s) <=
// xi_bound(s) <= 1 everywhere, and the bound halves past each s = 2^k+1 - 1.
double xi_bound(double s);

// Exact dyadic rational numerator / 2^exponent with exponent >= 0, kept
// canonical: numerator odd whenever exponent > 0, and zero is 0/2^0.
// The 128-bit numerator leaves room for canonical block sums over [1, 2^62],
// whose numerators need up to ~68 bits.
class DyadicRational {
 public:
  constexpr DyadicRational() = default;
  DyadicRational(std::int64_t integer) : num_(integer) {}
  DyadicRational(__int128 numerator, int exponent);

  DyadicRational operator+(const DyadicRational& other) const;
  bool operator==(const DyadicRational&) const = default;
  bool operator<(const DyadicRational& other) const;

  __int128 numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }

  double to_double() const;
  std::string to_string() const;

 private:
  __int128 num_ = 0;
  int exp_ = 0;
};

// Exact sum of 2^-floor(log2 m) for m in [first, last], 1 <= first <= last
// <= 2^62. Summing whole power-of-two blocks at once: each block [2^j,
// 2^j+1 - 1] contributes exactly 1, so the sum over [1, 2^n - 1] is exactly n.
DyadicRational dyadic_block_sum(std::int64_t first, std::int64_t last);

// Sum of xi over a forward orbit in log coordinates:
//   phase_sum(s0, n) = xi(s0) + xi(s0 + 2) + ... + xi(s0 + 2(n-1)),
// evaluated in closed form. The step +2 preserves frac(s) and the parity of
// floor(s), so every positive term is c * 2^-b(k) with the same constant
// c (the ramp value at frac(s0)); the 2^-b factors telescope into a dyadic
// block sum. Cost O(log n); agrees with direct summation to ~1e-12.
// Throws std::overflow_error when the block indices leave the exact range
// (only reachable for |s0| or n near 2^62).
double phase_sum(double s0, std::int64_t n);

// Head/tail split of phase_sum: hi = fl(c * D), lo the exact residue.
// reduce_phase(theta0, phase_sum_parts(s0, n)) advances an angle by the sum
// without losing the fractional part to the large integer head.
TwoTerm phase_sum_parts(double s0, std::int64_t n);

}  // namespace diskchaos
