#include "diskchaos/liyorke.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace diskchaos {

namespace {

int thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  int budget = hw == 0 ? 1 : int(hw);
  if (const char* env = std::getenv("DISKCHAOS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) budget = int(std::min(v, 256L));
  }
  return budget;
}

// Apply fn(i) for i in [0, jobs) across a bounded thread pool. Each result
// lands at its own index, so the schedule cannot reorder anything.
template <typename Fn>
void parallel_for(std::size_t jobs, Fn&& fn) {
  std::size_t threads = std::min<std::size_t>(thread_budget(), jobs);
  if (threads <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < jobs; i += threads) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

double axis_logit(const DiskPoint& z, const char* which) {
  if (!(z.rho > 0.0 && z.rho < 1.0) || z.theta != 0.0) {
    throw std::domain_error(std::string("pair_diagnostics: ") + which +
                            " must be interior with theta == 0");
  }
  double s = logit_radius(z.rho);
  if (!(s > 0.0 && s < 1.0)) {
    throw std::domain_error(std::string("pair_diagnostics: ") + which +
                            " must have log-coordinate in (0, 1)");
  }
  return s;
}

double time_log2_of_exponent(int n) {
  if (n >= 54) return double(n);  // 2^-n below resolution
  return double(n) + std::log1p(-std::exp2(double(-n))) / std::numbers::ln2;
}

LogPolar backward_interior(const LogPolar& p, std::int64_t n) {
  // theta_n = theta - sum_{m=1..n} xi(s - 2m) = theta - phase_sum(s - 2n, n).
  double sn = p.s - 2.0 * double(n);
  TwoTerm ph = phase_sum_parts(sn, n);
  return LogPolar::interior(sn, reduce_phase(p.theta, TwoTerm{-ph.hi, -ph.lo}));
}

LogPolar backward_point(const LogPolar& p, std::int64_t n) {
  return p.is_interior() ? backward_interior(p, n) : p;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "certified";
    case Verdict::NotCertified:
      return "not_certified";
    default:
      return "degenerate";
  }
}

ScrambledSet make_scrambled_set(int count, double margin) {
  if (count < 2 || count > 10'000) {
    throw std::domain_error("make_scrambled_set: count must lie in [2, 1e4]");
  }
  if (!(margin > 0.0 && margin < 0.5)) {
    throw std::domain_error("make_scrambled_set: margin must lie in (0, 1/2)");
  }
  double budget = (1.0 - 2.0 * margin) / double(count - 1);
  int e = int(std::ceil(std::log2(std::numbers::sqrt2 / budget)));
  while (e <= 62 && std::ldexp(std::numbers::sqrt2, -e) > budget) ++e;  // guard the ceil rounding
  if (e > 62) {
    throw std::domain_error("make_scrambled_set: margin leaves no room for an irrational gap");
  }
  ScrambledSet set;
  set.count = count;
  set.margin = margin;
  set.gap = std::ldexp(std::numbers::sqrt2, -e);
  set.gap_log2_den = e;
  set.certificate = "gap = sqrt(2)/2^" + std::to_string(e) +
                    "; pairwise log-coordinate differences are (j-i)*sqrt(2)/2^" +
                    std::to_string(e) + ", nonzero rational multiples of sqrt(2)";
  set.logits.reserve(count);
  set.points.reserve(count);
  double prev_back = 0.0;
  for (int i = 0; i < count; ++i) {
    double s = margin + double(i) * set.gap;
    if (!(s > 0.0 && s < 1.0)) {
      throw std::domain_error("make_scrambled_set: placement left (0, 1)");
    }
    set.logits.push_back(s);
    set.points.emplace_back(logistic_radius(s), 0.0);
    // the disk points must still tell the logits apart
    double back = logit_radius(set.points.back().rho);
    if (!(back > 0.0 && back < 1.0) || (i > 0 && back <= prev_back)) {
      throw std::domain_error("make_scrambled_set: points collapse at double precision");
    }
    prev_back = back;
  }
  return set;
}

PairDiagnostics pair_diagnostics(double s_x, double s_y, int max_exponent, int k_terms) {
  if (max_exponent < 1 || max_exponent > kDyadicExponentCap) {
    throw std::domain_error("pair_diagnostics: max_exponent must lie in [1, 1000]");
  }
  if (k_terms < 1) throw std::domain_error("pair_diagnostics: k_terms must be positive");
  if (!(s_x > 0.0 && s_x < 1.0) || !(s_y > 0.0 && s_y < 1.0)) {
    throw std::domain_error("pair_diagnostics: log-coordinates must lie in (0, 1)");
  }
  PairDiagnostics d;
  d.s_x = s_x;
  d.s_y = s_y;
  d.alpha = d.s_x - d.s_y;
  d.rotation = analyze_rotation(d.alpha);
  d.near_zero = return_times_near_zero(d.rotation, k_terms, max_exponent);
  d.near_half = return_times_near_half(d.rotation, k_terms, max_exponent);

  d.liminf_est = std::numeric_limits<double>::infinity();
  d.limsup_est = 0.0;
  auto sample_at = [&](SampleKind kind, const ReturnEntry& entry) {
    int n = int(entry.n);
    LogPolar px = dyadic_fast_forward(d.s_x, 0.0, n);
    LogPolar py = dyadic_fast_forward(d.s_y, 0.0, n);
    double dist = logpolar_distance(px, py);
    d.samples.push_back({kind, n, time_log2_of_exponent(n), entry.residual, dist});
    if (kind == SampleKind::Zero) {
      d.liminf_est = std::min(d.liminf_est, dist);
    } else {
      d.limsup_est = std::max(d.limsup_est, dist);
    }
  };
  for (const ReturnEntry& entry : d.near_zero.entries) sample_at(SampleKind::Zero, entry);
  for (const ReturnEntry& entry : d.near_half.entries) sample_at(SampleKind::Half, entry);
  return d;
}

PairDiagnostics pair_diagnostics(const DiskPoint& x, const DiskPoint& y, int max_exponent,
                                 int k_terms) {
  return pair_diagnostics(axis_logit(x, "x"), axis_logit(y, "y"), max_exponent, k_terms);
}

Verdict certify_li_yorke(const PairDiagnostics& diag, double eps_prox, double eps_dist) {
  if (!(eps_prox > 0.0) || !(eps_dist > 0.0)) {
    throw std::domain_error("certify_li_yorke: tolerances must be positive");
  }
  if (diag.rotation.degenerate()) return Verdict::Degenerate;
  bool proximal = diag.liminf_est <= eps_prox;
  bool distal = diag.limsup_est >= 2.0 - eps_dist;
  return proximal && distal ? Verdict::Certified : Verdict::NotCertified;
}

ScrambleScan scan_scrambled(const ScrambledSet& set, int max_exponent, double eps_prox,
                            double eps_dist) {
  if (set.count < 2 || int(set.logits.size()) != set.count) {
    throw std::domain_error("scan_scrambled: set must hold at least two points");
  }
  std::vector<std::pair<int, int>> index;
  index.reserve(std::size_t(set.count) * (set.count - 1) / 2);
  for (int i = 0; i < set.count; ++i) {
    for (int j = i + 1; j < set.count; ++j) index.emplace_back(i, j);
  }
  ScrambleScan scan;
  scan.pairs.resize(index.size());
  parallel_for(index.size(), [&](std::size_t k) {
    auto [i, j] = index[k];
    PairDiagnostics d = pair_diagnostics(set.logits[i], set.logits[j], max_exponent);
    scan.pairs[k] = {i, j, d.liminf_est, d.limsup_est, certify_li_yorke(d, eps_prox, eps_dist)};
  });
  scan.all_certified = true;
  scan.worst_liminf = 0.0;
  scan.worst_limsup = std::numeric_limits<double>::infinity();
  for (const PairVerdict& pv : scan.pairs) {
    scan.all_certified = scan.all_certified && pv.verdict == Verdict::Certified;
    scan.worst_liminf = std::max(scan.worst_liminf, pv.liminf_est);
    scan.worst_limsup = std::min(scan.worst_limsup, pv.limsup_est);
  }
  return scan;
}

InverseScanReport inverse_scan(const std::vector<std::pair<DiskPoint, DiskPoint>>& pairs,
                               std::int64_t tail) {
  if (tail < 64 || tail > 1'000'000) {
    throw std::domain_error("inverse_scan: tail must lie in [64, 1e6]");
  }
  InverseScanReport report;
  report.tail = tail;
  report.entries.resize(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    LogPolar px = to_logpolar(pairs[k].first);
    LogPolar py = to_logpolar(pairs[k].second);
    InverseScanEntry entry;
    entry.kind_x = px.tag;
    entry.kind_y = py.tag;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::int64_t n = tail; n <= 2 * tail; ++n) {
      double dist = logpolar_distance(backward_point(px, n), backward_point(py, n));
      lo = std::min(lo, dist);
      hi = std::max(hi, dist);
    }
    entry.osc = hi - lo;
    // Backward limits: interior points fall into the origin, the rest stay.
    LogPolar lx = px.is_interior() ? LogPolar::origin() : px;
    LogPolar ly = py.is_interior() ? LogPolar::origin() : py;
    entry.limit_distance = logpolar_distance(lx, ly);
    entry.start_modulus = 0.0;
    for (const LogPolar* p : {&px, &py}) {
      if (p->is_interior()) {
        entry.start_modulus =
            std::max(entry.start_modulus, logistic_radius(p->s - 2.0 * double(tail)));
      }
    }
    report.entries[k] = entry;
  });
  report.max_osc = 0.0;
  report.max_start_modulus = 0.0;
  for (const InverseScanEntry& entry : report.entries) {
    report.max_osc = std::max(report.max_osc, entry.osc);
    report.max_start_modulus = std::max(report.max_start_modulus, entry.start_modulus);
  }
  return report;
}

std::vector<std::pair<DiskPoint, DiskPoint>> sample_mixed_pairs(int count, std::uint64_t seed) {
  if (count < 1 || count > 1'000'000) {
    throw std::domain_error("sample_mixed_pairs: count must lie in [1, 1e6]");
  }
  std::mt19937_64 rng(seed);
  // Fixed mapping to [0, 1) rather than std::uniform_real_distribution, whose
  // output is implementation-defined; pair sets must be reproducible.
  auto u01 = [&rng] { return double(rng() >> 11) * 0x1.0p-53; };
  auto sample_point = [&]() -> DiskPoint {
    double kind = u01();
    if (kind < 0.15) return DiskPoint{};
    if (kind < 0.40) return DiskPoint(1.0, u01());
    double s = -8.0 + 16.0 * u01();
    return DiskPoint(logistic_radius(s), u01());
  };
  std::vector<std::pair<DiskPoint, DiskPoint>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    DiskPoint a = sample_point();
    DiskPoint b = sample_point();
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace diskchaos
