#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "diskchaos/coords.hpp"
#include "diskchaos/diophantine.hpp"
#include "diskchaos/dynamics.hpp"

namespace diskchaos {

enum class Verdict { Certified, NotCertified, Degenerate };

const char* to_string(Verdict v);

// A finite scrambled-set candidate: points on the positive axis whose
// log-coordinates are margin + i * gap with gap an explicit irrational
// (sqrt(2) / 2^e), so every pairwise difference is a nonzero rational
// multiple of sqrt(2) and hence irrational.
struct ScrambledSet {
  int count = 0;
  double margin = 0.0;
  double gap = 0.0;
  int gap_log2_den = 0;        // gap == sqrt(2) / 2^gap_log2_den
  std::string certificate;     // human-readable irrationality witness
  std::vector<double> logits;  // s_i, strictly increasing in (0, 1)
  std::vector<DiskPoint> points;
};

// Places `count` points with log-coordinates in [margin, 1 - margin], using
// the largest gap sqrt(2)/2^e that fits. count in [2, 1e4], margin in
// (0, 1/2); throws std::domain_error when no irrational gap fits.
ScrambledSet make_scrambled_set(int count, double margin);

enum class SampleKind { Zero, Half };

// Orbit distance sample at time 2^exponent - 1, where the phase difference
// of the two orbits is exactly exponent * alpha.
struct PairSample {
  SampleKind kind = SampleKind::Zero;
  int exponent = 0;
  double time_log2 = 0.0;  // log2(2^exponent - 1)
  double residual = 0.0;   // circle distance of exponent * alpha to 0 or 1/2
  double distance = 0.0;   // disk distance of the orbit points
};

struct PairDiagnostics {
  double s_x = 0.0;
  double s_y = 0.0;
  double alpha = 0.0;  // s_x - s_y
  RotationNumber rotation;
  ReturnTimes near_zero;
  ReturnTimes near_half;
  std::vector<PairSample> samples;
  double liminf_est = 0.0;  // min distance over the near-zero samples
  double limsup_est = 0.0;  // max distance over the near-half samples
};

// Evidence that (x, y) is a Li-Yorke pair for the disk map. Both points must
// be interior, on the positive axis (theta == 0), with log-coordinates in
// (0, 1). At time 2^n - 1 the two orbit phases differ by exactly n * alpha,
// so return times of the rotation by alpha near 0 witness proximality and
// return times near 1/2 witness distality; exponents run up to max_exponent.
PairDiagnostics pair_diagnostics(double s_x, double s_y, int max_exponent = 900, int k_terms = 64);

// Same, with the log-coordinates recovered from disk points.
PairDiagnostics pair_diagnostics(const DiskPoint& x, const DiskPoint& y, int max_exponent = 900,
                                 int k_terms = 64);

// Certified when liminf_est <= eps_prox and limsup_est >= 2 - eps_dist;
// Degenerate when alpha is rational at working precision (the sampled times
// then prove nothing either way).
Verdict certify_li_yorke(const PairDiagnostics& diag, double eps_prox = 0.01,
                         double eps_dist = 0.01);

struct PairVerdict {
  int i = 0;
  int j = 0;
  double liminf_est = 0.0;
  double limsup_est = 0.0;
  Verdict verdict = Verdict::NotCertified;
};

struct ScrambleScan {
  std::vector<PairVerdict> pairs;  // lexicographic (i, j), i < j
  bool all_certified = false;
  double worst_liminf = 0.0;  // largest liminf estimate over the pairs
  double worst_limsup = 0.0;  // smallest limsup estimate over the pairs
};

// pair_diagnostics + certify over every unordered pair of the set. Pairs are
// processed in parallel (bounded by DISKCHAOS_THREADS and the hardware);
// results are merged by index, so the output is deterministic.
ScrambleScan scan_scrambled(const ScrambledSet& set, int max_exponent = 900,
                            double eps_prox = 0.01, double eps_dist = 0.01);

struct InverseScanEntry {
  PointClass kind_x = PointClass::Origin;
  PointClass kind_y = PointClass::Origin;
  double limit_distance = 0.0;  // distance of the backward limit points
  double osc = 0.0;             // max - min of d(f^-n x, f^-n y), n in [tail, 2 tail]
  double start_modulus = 0.0;   // largest interior modulus at n = tail
};

struct InverseScanReport {
  std::int64_t tail = 0;
  std::vector<InverseScanEntry> entries;
  double max_osc = 0.0;
  double max_start_modulus = 0.0;
};

// Backward-orbit distance profile over the window [tail, 2 tail] for each
// pair, via exact log-coordinates s - 2n. Interior orbits fall into the
// origin, boundary points stand still, so every pairwise distance converges
// and the oscillation over the window collapses; no pair is proximal yet
// separated. tail >= 64 so the window starts deep in the asymptotic regime.
InverseScanReport inverse_scan(const std::vector<std::pair<DiskPoint, DiskPoint>>& pairs,
                               std::int64_t tail);

// Deterministic seeded sample of point pairs mixing origin, boundary and
// interior kinds (roughly 15/25/60), for inverse_scan sweeps.
std::vector<std::pair<DiskPoint, DiskPoint>> sample_mixed_pairs(int count, std::uint64_t seed);

}  // namespace diskchaos
