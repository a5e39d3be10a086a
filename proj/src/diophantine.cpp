#include "diskchaos/diophantine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace diskchaos {

namespace {

// Denominators past sqrt(1/eps) approximate the *double*, not the number it
// stands for; quotients from there on are noise.
constexpr std::int64_t kDenominatorLimit = std::int64_t{1} << 26;

double frac_of_multiple(std::int64_t n, double alpha) {
  return reduce_phase(0.0, two_product(double(n), alpha));
}

}  // namespace

ContinuedFraction continued_fraction(double alpha, int depth) {
  if (!std::isfinite(alpha)) throw std::domain_error("continued_fraction: alpha must be finite");
  if (depth < 1 || depth > 64) throw std::domain_error("continued_fraction: depth must lie in [1, 64]");
  ContinuedFraction out;
  double x = alpha;
  std::int64_t q_prev = 0, q_cur = 1;  // denominator recurrence, for the guards only
  for (int k = 0; k < depth; ++k) {
    double fl = std::floor(x);
    if (std::abs(fl) > 4.0e15) {  // quotient at the edge of integer precision
      out.truncated = true;
      return out;
    }
    std::int64_t a = std::int64_t(fl);
    if (k > 0) {
      __int128 q_next = __int128(a) * q_cur + q_prev;
      if (q_next > kDenominatorLimit) {
        out.truncated = true;
        return out;
      }
      q_prev = q_cur;
      q_cur = std::int64_t(q_next);
    }
    out.quotients.push_back(a);
    double frac = x - fl;
    // The remainder at depth k carries an inherited error of order q_k^2 eps;
    // once frac sinks below that, continuing would manufacture digits.
    double floor_noise = double(q_cur) * double(q_cur) * std::numeric_limits<double>::epsilon();
    if (frac <= floor_noise) {
      if (frac == 0.0) {
        out.exact = true;
      } else {
        out.truncated = true;
      }
      return out;
    }
    x = 1.0 / frac;
  }
  out.truncated = true;  // depth cap; the expansion continues past what we report
  return out;
}

ConvergentSeq convergents(const std::vector<std::int64_t>& quotients) {
  if (quotients.empty()) throw std::domain_error("convergents: empty quotient sequence");
  ConvergentSeq out;
  out.terms.reserve(quotients.size());
  __int128 p_prev = 0, p_cur = 1;  // p_(-2), p_(-1)
  __int128 q_prev = 1, q_cur = 0;
  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t a : quotients) {
    __int128 p = __int128(a) * p_cur + p_prev;
    __int128 q = __int128(a) * q_cur + q_prev;
    if (p > kMax || p < -kMax || q > kMax) {
      out.overflow = true;
      break;
    }
    out.terms.push_back({std::int64_t(p), std::int64_t(q)});
    p_prev = p_cur;
    p_cur = p;
    q_prev = q_cur;
    q_cur = q;
  }
  return out;
}

RotationNumber analyze_rotation(double alpha, int depth) {
  RotationNumber rn;
  rn.alpha = alpha;
  rn.expansion = continued_fraction(alpha, depth);
  ConvergentSeq seq = convergents(rn.expansion.quotients);
  rn.convergents = std::move(seq.terms);
  rn.convergent_overflow = seq.overflow;
  return rn;
}

ReturnTimes return_times_near_zero(const RotationNumber& rn, int count, std::int64_t cap) {
  if (count < 1) throw std::domain_error("return_times_near_zero: count must be positive");
  if (cap < 1) throw std::domain_error("return_times_near_zero: cap must be positive");
  ReturnTimes out;
  out.target = 0.0;
  std::int64_t last = 0;
  for (const Convergent& c : rn.convergents) {
    if (int(out.entries.size()) == count) break;
    if (c.q > cap) break;
    if (c.q <= last) continue;  // q_0 = q_1 = 1 when a_1 = 1
    out.entries.push_back({c.q, circle_distance(frac_of_multiple(c.q, rn.alpha), 0.0)});
    last = c.q;
  }
  out.complete = int(out.entries.size()) == count;
  return out;
}

ReturnTimes return_times_near_half(const RotationNumber& rn, int count, std::int64_t cap) {
  if (count < 1) throw std::domain_error("return_times_near_half: count must be positive");
  if (cap < 1 || cap > 10'000'000) {
    throw std::domain_error("return_times_near_half: cap must lie in [1, 1e7]");
  }
  ReturnTimes out;
  out.target = 0.5;
  double best = std::numeric_limits<double>::infinity();
  for (std::int64_t n = 1; n <= cap && int(out.entries.size()) < count; ++n) {
    double d = circle_distance(frac_of_multiple(n, rn.alpha), 0.5);
    if (d < best) {
      best = d;
      out.entries.push_back({n, d});
      if (d == 0.0) break;  // cannot improve further
    }
  }
  out.complete = int(out.entries.size()) == count;
  return out;
}

}  // namespace diskchaos
