#include "diskchaos/xi.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace diskchaos {

namespace {

constexpr std::int64_t kBlockDomainMax = std::int64_t{1} << 62;

__int128 shift_left_checked(__int128 v, int k) {
  constexpr __int128 kMax = ~(__int128{1} << 127);  // 2^127 - 1
  __int128 mag = v < 0 ? -v : v;
  if (k >= 127 || mag > (kMax >> k)) {
    throw std::overflow_error("DyadicRational: exact range exceeded");
  }
  return v << k;
}

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 mag = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  std::string digits;
  while (mag > 0) {
    digits.push_back(char('0' + int(mag % 10)));
    mag /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace

DyadicRational::DyadicRational(__int128 numerator, int exponent) : num_(numerator), exp_(exponent) {
  if (exp_ < 0) {  // numerator * 2^|exponent|, an integer
    num_ = shift_left_checked(num_, -exp_);
    exp_ = 0;
  }
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while ((num_ & 1) == 0 && exp_ > 0) {
    num_ >>= 1;
    --exp_;
  }
}

DyadicRational DyadicRational::operator+(const DyadicRational& other) const {
  int e = std::max(exp_, other.exp_);
  __int128 a = shift_left_checked(num_, e - exp_);
  __int128 b = shift_left_checked(other.num_, e - other.exp_);
  return DyadicRational(a + b, e);  // |a|,|b| < 2^126 so the sum cannot wrap
}

bool DyadicRational::operator<(const DyadicRational& other) const {
  int e = std::max(exp_, other.exp_);
  return shift_left_checked(num_, e - exp_) < shift_left_checked(other.num_, e - other.exp_);
}

double DyadicRational::to_double() const { return std::ldexp(double(num_), -exp_); }

std::string DyadicRational::to_string() const {
  if (exp_ == 0) return int128_to_string(num_);
  return int128_to_string(num_) + "/2^" + std::to_string(exp_);
}

DyadicRational dyadic_block_sum(std::int64_t first, std::int64_t last) {
  if (first < 1 || first > last) {
    throw std::domain_error("dyadic_block_sum: need 1 <= first <= last");
  }
  if (last > kBlockDomainMax) {
    throw std::domain_error("dyadic_block_sum: last exceeds 2^62");
  }
  DyadicRational sum;
  for (int j = std::bit_width(std::uint64_t(first)) - 1;; ++j) {
    std::int64_t lo = std::max(first, std::int64_t{1} << j);
    std::int64_t hi = std::min(last, std::int64_t((std::uint64_t{1} << (j + 1)) - 1));
    sum = sum + DyadicRational(hi - lo + 1, j);  // (count in block j) / 2^j
    if (hi == last) return sum;
  }
}

XiBranch xi_branch(double s) {
  if (!std::isfinite(s)) throw std::domain_error("xi: s must be finite");
  if (s <= 0.0) return XiBranch{};
  double m = std::floor(0.5 * s) + 1.0;
  XiBranch br;
  br.parity = std::fmod(std::floor(s), 2.0) != 0.0 ? XiParity::Odd : XiParity::Even;
  br.block_index = std::ilogb(m);
  return br;
}

double xi_of_s(double s) {
  XiBranch br = xi_branch(s);
  if (br.parity == XiParity::Zero) return 0.0;
  double t = s - std::floor(s);  // exact
  double ramp = br.parity == XiParity::Odd ? 1.0 - t : t;
  return ramp * std::ldexp(1.0, -br.block_index);
}

double xi_of_r(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::domain_error("xi_of_r: r must be finite and nonnegative");
  }
  if (r <= 1.0) return 0.0;
  return xi_of_s(std::log(r));
}

double xi_bound(double s) {
  XiBranch br = xi_branch(s);
  if (br.parity == XiParity::Zero) return 0.0;
  return std::ldexp(1.0, -br.block_index);
}

TwoTerm phase_sum_parts(double s0, std::int64_t n) {
  if (!std::isfinite(s0)) throw std::domain_error("phase_sum: s0 must be finite");
  if (n < 0 || n > kBlockDomainMax) {
    throw std::domain_error("phase_sum: n must lie in [0, 2^62]");
  }
  if (n == 0) return TwoTerm{};
  // Beyond 2^53 every double is an even integer, so each term has t = 0 on
  // the rising ramp: the sum vanishes (negative side: terms are either <= 0
  // or even integers).
  if (s0 <= -9007199254740992.0 || s0 >= 9007199254740992.0) return TwoTerm{};

  // Skip the prefix of nonpositive terms: xi(s0 + 2k) = 0 while s0 + 2k <= 0.
  std::int64_t skip = 0;
  if (s0 <= 0.0) skip = std::int64_t(std::ceil(-0.5 * s0));  // exact: |s0|/2 < 2^52
  if (skip >= n) return TwoTerm{};
  double start = std::fma(2.0, double(skip), s0);  // first abscissa past 0; s0 itself when s0 > 0

  double q = std::floor(start);
  double t = start - q;  // exact; invariant under the +2 step
  double c = std::fmod(q, 2.0) != 0.0 ? 1.0 - t : t;
  if (c == 0.0) return TwoTerm{};

  // Term k (from `start`) has amplitude 2^-floor(log2(floor((start+2k)/2)+1)),
  // which is 2^-floor(log2 m) at m = floor(start/2) + 1 + k: a dyadic block
  // sum over m.
  double base = std::floor(0.5 * start);  // 0 or 1
  std::int64_t m_first = std::int64_t(base) + 1;
  std::int64_t count = n - skip;
  if (m_first > kBlockDomainMax - count + 1) {
    throw std::overflow_error("phase_sum: block index exceeds the exact range 2^62");
  }
  DyadicRational blocks = dyadic_block_sum(m_first, m_first + count - 1);
  return two_product(c, blocks.to_double());
}

double phase_sum(double s0, std::int64_t n) {
  TwoTerm p = phase_sum_parts(s0, n);
  return p.hi + p.lo;
}

}  // namespace diskchaos
