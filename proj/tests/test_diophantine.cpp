#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "diskchaos/diophantine.hpp"
#include "doctest.h"

using namespace diskchaos;

namespace {

double u01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

// Evaluate [a0; a1, ...] back to a real number.
double reconstruct(const std::vector<std::int64_t>& a) {
  double x = double(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) x = double(a[i]) + 1.0 / x;
  return x;
}

double norm_dist(std::int64_t n, double alpha) {
  return circle_distance(reduce_phase(0.0, two_product(double(n), alpha)), 0.0);
}

}  // namespace

TEST_CASE("continued_fraction: named expansions") {
  ContinuedFraction rt2 = continued_fraction(std::sqrt(2.0));
  REQUIRE(rt2.quotients.size() >= 15);
  CHECK(rt2.quotients[0] == 1);
  for (int k = 1; k < 15; ++k) CHECK(rt2.quotients[std::size_t(k)] == 2);
  CHECK_FALSE(rt2.exact);
  CHECK(rt2.truncated);  // the precision guard must cut the tail

  ContinuedFraction golden = continued_fraction((1.0 + std::sqrt(5.0)) / 2.0);
  REQUIRE(golden.quotients.size() >= 15);
  for (int k = 0; k < 15; ++k) CHECK(golden.quotients[std::size_t(k)] == 1);

  ContinuedFraction half = continued_fraction(0.5);
  CHECK(half.quotients == std::vector<std::int64_t>{0, 2});
  CHECK(half.exact);
  CHECK_FALSE(half.truncated);

  CHECK(continued_fraction(3.0).quotients == std::vector<std::int64_t>{3});
  CHECK(continued_fraction(3.0).exact);
  CHECK(continued_fraction(-0.5).quotients == std::vector<std::int64_t>{-1, 2});
  CHECK_THROWS_AS(continued_fraction(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(continued_fraction(0.5, 0), std::domain_error);
}

TEST_CASE("continued_fraction: reconstruction returns the input") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    double alpha = u01(rng);
    ContinuedFraction cf = continued_fraction(alpha);
    REQUIRE_FALSE(cf.quotients.empty());
    CHECK(reconstruct(cf.quotients) == doctest::Approx(alpha).epsilon(1e-12));
  }
  CHECK(reconstruct(continued_fraction(std::sqrt(2.0)).quotients) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("convergents: recurrence, determinant identity, golden denominators") {
  ConvergentSeq rt2 = convergents(continued_fraction(std::sqrt(2.0)).quotients);
  const std::vector<std::int64_t> expect_q = {1, 2, 5, 12, 29, 70, 169, 408, 985, 2378};
  REQUIRE(rt2.terms.size() >= expect_q.size());
  for (std::size_t k = 0; k < expect_q.size(); ++k) CHECK(rt2.terms[k].q == expect_q[k]);
  CHECK(rt2.terms[0].p == 1);
  CHECK(rt2.terms[1].p == 3);  // 3/2
  CHECK(rt2.terms[7].p == 577);  // 577/408

  ConvergentSeq golden = convergents({1, 1, 1, 1, 1, 1, 1});
  const std::vector<std::int64_t> fib_q = {1, 1, 2, 3, 5, 8, 13};
  const std::vector<std::int64_t> fib_p = {1, 2, 3, 5, 8, 13, 21};
  REQUIRE(golden.terms.size() == 7);
  for (std::size_t k = 0; k < 7; ++k) {
    CHECK(golden.terms[k].q == fib_q[k]);
    CHECK(golden.terms[k].p == fib_p[k]);
  }

  CHECK(convergents({0, 2}).terms.size() == 2);
  CHECK(convergents({0, 2}).terms[1].p == 1);
  CHECK(convergents({0, 2}).terms[1].q == 2);
  CHECK_THROWS_AS(convergents({}), std::domain_error);

  for (const ConvergentSeq* seq : {&rt2, &golden}) {
    for (std::size_t k = 1; k < seq->terms.size(); ++k) {
      __int128 det = __int128(seq->terms[k].p) * seq->terms[k - 1].q -
                     __int128(seq->terms[k - 1].p) * seq->terms[k].q;
      CHECK((det == 1 || det == -1));
      CHECK(det == (k % 2 == 1 ? 1 : -1));  // p_k q_(k-1) - p_(k-1) q_k = (-1)^(k-1)
    }
  }
}

TEST_CASE("convergents flag overflow instead of wrapping") {
  // huge quotients blow past int64 in two steps
  ConvergentSeq seq = convergents({1, 4'000'000'000'000'000, 4'000'000'000'000'000});
  CHECK(seq.overflow);
  CHECK(seq.terms.size() == 2);
}

TEST_CASE("analyze_rotation: degeneracy flag") {
  CHECK(analyze_rotation(0.5).degenerate());
  CHECK(analyze_rotation(0.0).degenerate());
  CHECK_FALSE(analyze_rotation(std::sqrt(2.0)).degenerate());
  RotationNumber rn = analyze_rotation(std::sqrt(2.0));
  CHECK(rn.alpha == std::sqrt(2.0));
  CHECK_FALSE(rn.convergent_overflow);
}

TEST_CASE("best-approximation law, brute force") {
  double alpha = std::sqrt(2.0);
  RotationNumber rn = analyze_rotation(alpha);
  for (const Convergent& c : rn.convergents) {
    if (c.q < 2 || c.q > 10'000) continue;
    double record = norm_dist(c.q, alpha);
    for (std::int64_t q = 1; q < c.q; ++q) CHECK(norm_dist(q, alpha) > record);
  }
}

TEST_CASE("return_times_near_zero: convergent denominators and pinned residuals") {
  RotationNumber rn = analyze_rotation(std::sqrt(2.0));
  ReturnTimes rt = return_times_near_zero(rn, 64, 500);
  const std::vector<std::int64_t> expect = {1, 2, 5, 12, 29, 70, 169, 408};
  REQUIRE(rt.entries.size() == expect.size());
  for (std::size_t k = 0; k < expect.size(); ++k) {
    CHECK(rt.entries[k].n == expect[k]);
    if (k > 0) CHECK(rt.entries[k].residual < rt.entries[k - 1].residual);
  }
  CHECK_FALSE(rt.complete);  // only 8 exist under the cap
  // 60-digit references: |29 sqrt(2) - 41| = 0.01219330881975641525,
  // |408 sqrt(2) - 577| = 8.6655177722008891e-4 < 1/985
  CHECK(rt.entries[4].residual == doctest::Approx(0.012193308819756415).epsilon(1e-10));
  CHECK(rt.entries[7].residual == doctest::Approx(8.6655177722008891e-4).epsilon(1e-9));
  CHECK(rt.entries[7].residual < 1.0 / 985.0);

  ReturnTimes first3 = return_times_near_zero(rn, 3, 500);
  REQUIRE(first3.entries.size() == 3);
  CHECK(first3.complete);
  CHECK(first3.entries[2].n == 5);
  CHECK_THROWS_AS(return_times_near_zero(rn, 0, 500), std::domain_error);
  CHECK_THROWS_AS(return_times_near_zero(rn, 3, 0), std::domain_error);
}

TEST_CASE("return_times_near_zero: rational target hits zero exactly") {
  RotationNumber rn = analyze_rotation(0.5);
  ReturnTimes rt = return_times_near_zero(rn, 8, 100);
  REQUIRE(rt.entries.size() == 2);
  CHECK(rt.entries[1].n == 2);
  CHECK(rt.entries[1].residual == 0.0);
}

TEST_CASE("return_times_near_half: record scan with pinned records") {
  RotationNumber rn = analyze_rotation(std::sqrt(2.0));
  ReturnTimes rt = return_times_near_half(rn, 64, 10);
  REQUIRE(rt.entries.size() == 2);
  CHECK(rt.entries[0].n == 1);
  CHECK(rt.entries[0].residual == doctest::Approx(0.08578643762690485).epsilon(1e-12));
  CHECK(rt.entries[1].n == 6);
  CHECK(rt.entries[1].residual == doctest::Approx(0.014718625761429707).epsilon(1e-10));
  CHECK_FALSE(rt.complete);

  ReturnTimes deep = return_times_near_half(rn, 64, 10'000);
  CHECK(deep.entries.back().residual < 1e-3);
  for (std::size_t k = 1; k < deep.entries.size(); ++k) {
    CHECK(deep.entries[k].residual < deep.entries[k - 1].residual);
    CHECK(deep.entries[k].n > deep.entries[k - 1].n);
  }

  // alpha = 1/2: n = 1 lands exactly on the target
  ReturnTimes degen = return_times_near_half(analyze_rotation(0.5), 8, 100);
  REQUIRE(degen.entries.size() == 1);
  CHECK(degen.entries[0].n == 1);
  CHECK(degen.entries[0].residual == 0.0);

  CHECK_THROWS_AS(return_times_near_half(rn, 8, 0), std::domain_error);
  CHECK_THROWS_AS(return_times_near_half(rn, 8, 10'000'001), std::domain_error);
}

TEST_CASE("return times of alpha and -alpha coincide") {
  double alpha = std::sqrt(2.0) - 1.0;
  RotationNumber pos = analyze_rotation(alpha);
  RotationNumber neg = analyze_rotation(-alpha);
  ReturnTimes pz = return_times_near_zero(pos, 64, 900);
  ReturnTimes nz = return_times_near_zero(neg, 64, 900);
  REQUIRE(pz.entries.size() == nz.entries.size());
  for (std::size_t k = 0; k < pz.entries.size(); ++k) {
    CHECK(pz.entries[k].n == nz.entries[k].n);
    CHECK(pz.entries[k].residual == nz.entries[k].residual);
  }
  ReturnTimes ph = return_times_near_half(pos, 64, 900);
  ReturnTimes nh = return_times_near_half(neg, 64, 900);
  REQUIRE(ph.entries.size() == nh.entries.size());
  for (std::size_t k = 0; k < ph.entries.size(); ++k) {
    CHECK(ph.entries[k].n == nh.entries[k].n);
    CHECK(ph.entries[k].residual == nh.entries[k].residual);
  }
}
