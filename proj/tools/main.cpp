#include <cmath>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diskchaos/coords.hpp"
#include "diskchaos/diophantine.hpp"
#include "diskchaos/dynamics.hpp"
#include "diskchaos/liyorke.hpp"
#include "diskchaos/xi.hpp"
#include "output.hpp"

namespace dc = diskchaos;
using diskchaos::cli::format_double;
using diskchaos::cli::JsonWriter;
using diskchaos::cli::write_output;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitNotCertified = 3;

const char* point_class_name(dc::PointClass c) {
  switch (c) {
    case dc::PointClass::Interior:
      return "interior";
    case dc::PointClass::Origin:
      return "origin";
    default:
      return "boundary";
  }
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string row;
  for (const std::string& c : cells) {
    if (!row.empty()) row += ',';
    row += c;
  }
  row += '\n';
  return row;
}

struct CommonOpts {
  std::string format = "csv";
  std::string out;

  void attach(CLI::App* cmd, const std::string& default_format) {
    format = default_format;
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out, "Write output to this file (atomically) instead of stdout");
  }
};

// ---- xi ----------------------------------------------------------------

struct XiOpts {
  double s_min = 0.0;
  double s_max = 8.0;
  std::int64_t samples = 1000;
  CommonOpts common;
};

int run_xi(const XiOpts& o) {
  if (!(std::isfinite(o.s_min) && std::isfinite(o.s_max)) || o.s_min > o.s_max) {
    throw std::domain_error("xi: need finite --s-min <= --s-max");
  }
  if (o.samples < 1 || o.samples > 10'000'000) {
    throw std::domain_error("xi: --samples must lie in [1, 1e7]");
  }
  double span = o.s_max - o.s_min;
  auto abscissa = [&](std::int64_t i) {
    return o.samples == 1 ? o.s_min : o.s_min + span * double(i) / double(o.samples - 1);
  };
  std::string body;
  if (o.common.format == "csv") {
    body = "s,xi,xi_bound\n";
    for (std::int64_t i = 0; i < o.samples; ++i) {
      double s = abscissa(i);
      body += csv_row({format_double(s), format_double(dc::xi_of_s(s)),
                       format_double(dc::xi_bound(s))});
    }
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value("xi");
    w.key("s_min");
    w.value(o.s_min);
    w.key("s_max");
    w.value(o.s_max);
    w.key("samples");
    w.value(o.samples);
    w.key("columns");
    w.begin_array();
    w.value("s");
    w.value("xi");
    w.value("xi_bound");
    w.end_array();
    w.key("rows");
    w.begin_array();
    for (std::int64_t i = 0; i < o.samples; ++i) {
      double s = abscissa(i);
      w.begin_array();
      w.value(s);
      w.value(dc::xi_of_s(s));
      w.value(dc::xi_bound(s));
      w.end_array();
    }
    w.end_array();
    w.end_object();
    body = w.take();
    body += '\n';
  }
  write_output(o.common.out, body);
  return kExitOk;
}

// ---- orbit --------------------------------------------------------------

struct OrbitOpts {
  std::optional<double> s0;
  std::optional<double> rho0;
  double theta0 = 0.0;
  std::int64_t steps = 0;
  std::int64_t stride = 1;
  std::string direction = "forward";
  CommonOpts common;
};

dc::LogPolar orbit_start(const OrbitOpts& o) {
  if (o.s0.has_value() == o.rho0.has_value()) {
    throw std::domain_error("orbit: give exactly one of --s0 or --rho0");
  }
  if (o.s0) return dc::LogPolar::interior(*o.s0, o.theta0);
  return dc::to_logpolar(dc::DiskPoint(*o.rho0, o.theta0));
}

int run_orbit(const OrbitOpts& o) {
  dc::LogPolar start = orbit_start(o);
  dc::Direction dir =
      o.direction == "backward" ? dc::Direction::Backward : dc::Direction::Forward;
  std::vector<dc::OrbitSample> orbit = dc::iterate(start, o.steps, dir, o.stride);
  const dc::DiskPoint& origin_point = orbit.front().disk_point;
  auto row_s = [](const dc::OrbitSample& smp) {
    switch (smp.point.tag) {
      case dc::PointClass::Origin:
        return -std::numeric_limits<double>::infinity();
      case dc::PointClass::Boundary:
        return std::numeric_limits<double>::infinity();
      default:
        return smp.point.s;
    }
  };
  std::string body;
  if (o.common.format == "csv") {
    body = "time,s,theta,rho,dist_from_start\n";
    for (const dc::OrbitSample& smp : orbit) {
      body += csv_row({std::to_string(smp.time), format_double(row_s(smp)),
                       format_double(smp.disk_point.theta), format_double(smp.disk_point.rho),
                       format_double(dc::disk_distance(smp.disk_point, origin_point))});
    }
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value("orbit");
    w.key("direction");
    w.value(o.direction);
    w.key("steps");
    w.value(o.steps);
    w.key("stride");
    w.value(o.stride);
    w.key("columns");
    w.begin_array();
    w.value("time");
    w.value("s");
    w.value("theta");
    w.value("rho");
    w.value("dist_from_start");
    w.end_array();
    w.key("rows");
    w.begin_array();
    for (const dc::OrbitSample& smp : orbit) {
      w.begin_array();
      w.value(smp.time);
      w.value(row_s(smp));
      w.value(smp.disk_point.theta);
      w.value(smp.disk_point.rho);
      w.value(dc::disk_distance(smp.disk_point, origin_point));
      w.end_array();
    }
    w.end_array();
    w.end_object();
    body = w.take();
    body += '\n';
  }
  write_output(o.common.out, body);
  return kExitOk;
}

// ---- fastforward ----------------------------------------------------------

struct FastForwardOpts {
  double s0 = 0.0;
  double theta0 = 0.0;
  std::optional<std::int64_t> steps;
  std::optional<int> exponent;
  CommonOpts common;
};

int run_fastforward(const FastForwardOpts& o) {
  if (o.steps.has_value() == o.exponent.has_value()) {
    throw std::domain_error("fastforward: give exactly one of --steps or --exponent");
  }
  dc::LogPolar p;
  double time_log2;
  if (o.steps) {
    p = dc::fast_forward(dc::LogPolar::interior(o.s0, o.theta0), *o.steps);
    time_log2 = *o.steps > 0 ? std::log2(double(*o.steps)) : -std::numeric_limits<double>::infinity();
  } else {
    p = dc::dyadic_fast_forward(o.s0, o.theta0, *o.exponent);
    time_log2 = *o.exponent >= 54
                    ? double(*o.exponent)
                    : std::log2(std::exp2(double(*o.exponent)) - 1.0);
  }
  double rho = dc::logistic_radius(p.s);
  std::string body;
  if (o.common.format == "csv") {
    body = "s,theta,rho\n";
    body += csv_row({format_double(p.s), format_double(p.theta), format_double(rho)});
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value("fastforward");
    w.key("s0");
    w.value(o.s0);
    w.key("theta0");
    w.value(o.theta0);
    if (o.steps) {
      w.key("steps");
      w.value(*o.steps);
    } else {
      w.key("exponent");
      w.value(*o.exponent);
    }
    w.key("time_log2");
    w.value(time_log2);
    w.key("s");
    w.value(p.s);
    w.key("theta");
    w.value(p.theta);
    w.key("rho");
    w.value(rho);
    w.end_object();
    body = w.take();
    body += '\n';
  }
  write_output(o.common.out, body);
  return kExitOk;
}

// ---- pair -----------------------------------------------------------------

struct PairOpts {
  double sx = 0.0;
  double sy = 0.0;
  int max_exponent = 900;
  int k_terms = 64;
  double eps_prox = 0.01;
  double eps_dist = 0.01;
  CommonOpts common;
};

void emit_pair_json(JsonWriter& w, const dc::PairDiagnostics& d, dc::Verdict verdict,
                    const PairOpts& o) {
  w.begin_object();
  w.key("command");
  w.value("pair");
  w.key("s_x");
  w.value(d.s_x);
  w.key("s_y");
  w.value(d.s_y);
  w.key("alpha");
  w.value(d.alpha);
  w.key("max_exponent");
  w.value(o.max_exponent);
  w.key("k_terms");
  w.value(o.k_terms);
  w.key("eps_prox");
  w.value(o.eps_prox);
  w.key("eps_dist");
  w.value(o.eps_dist);
  w.key("continued_fraction");
  w.begin_object();
  w.key("quotients");
  w.begin_array();
  for (std::int64_t a : d.rotation.expansion.quotients) w.value(a);
  w.end_array();
  w.key("exact");
  w.value(d.rotation.expansion.exact);
  w.key("truncated");
  w.value(d.rotation.expansion.truncated);
  w.end_object();
  w.key("convergents");
  w.begin_array();
  for (const dc::Convergent& c : d.rotation.convergents) {
    w.begin_array();
    w.value(c.p);
    w.value(c.q);
    w.end_array();
  }
  w.end_array();
  w.key("samples");
  w.begin_array();
  for (const dc::PairSample& smp : d.samples) {
    w.begin_object();
    w.key("kind");
    w.value(smp.kind == dc::SampleKind::Zero ? "zero" : "half");
    w.key("exponent");
    w.value(smp.exponent);
    w.key("time_log2");
    w.value(smp.time_log2);
    w.key("residual");
    w.value(smp.residual);
    w.key("distance");
    w.value(smp.distance);
    w.end_object();
  }
  w.end_array();
  w.key("liminf_est");
  w.value(d.liminf_est);
  w.key("limsup_est");
  w.value(d.limsup_est);
  w.key("verdict");
  w.value(dc::to_string(verdict));
  w.end_object();
}

int run_pair(const PairOpts& o) {
  dc::PairDiagnostics d = dc::pair_diagnostics(o.sx, o.sy, o.max_exponent, o.k_terms);
  dc::Verdict verdict = dc::certify_li_yorke(d, o.eps_prox, o.eps_dist);
  std::string body;
  if (o.common.format == "csv") {
    body = "kind,exponent,time_log2,residual,distance\n";
    for (const dc::PairSample& smp : d.samples) {
      body += csv_row({smp.kind == dc::SampleKind::Zero ? "zero" : "half",
                       std::to_string(smp.exponent), format_double(smp.time_log2),
                       format_double(smp.residual), format_double(smp.distance)});
    }
  } else {
    JsonWriter w;
    emit_pair_json(w, d, verdict, o);
    body = w.take();
    body += '\n';
  }
  write_output(o.common.out, body);
  if (verdict == dc::Verdict::Degenerate) return kExitNumeric;
  return verdict == dc::Verdict::Certified ? kExitOk : kExitNotCertified;
}

// ---- scrambled --------------------------------------------------------------

struct ScrambledOpts {
  int k = 8;
  double margin = 0.1;
  int max_exponent = 900;
  double eps_prox = 0.01;
  double eps_dist = 0.01;
  CommonOpts common;
};

int run_scrambled(const ScrambledOpts& o) {
  dc::ScrambledSet set = dc::make_scrambled_set(o.k, o.margin);
  dc::ScrambleScan scan = dc::scan_scrambled(set, o.max_exponent, o.eps_prox, o.eps_dist);
  std::string body;
  if (o.common.format == "csv") {
    body = "i,j,liminf_est,limsup_est,verdict\n";
    for (const dc::PairVerdict& pv : scan.pairs) {
      body += csv_row({std::to_string(pv.i), std::to_string(pv.j), format_double(pv.liminf_est),
                       format_double(pv.limsup_est), dc::to_string(pv.verdict)});
    }
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value("scrambled");
    w.key("k");
    w.value(o.k);
    w.key("margin");
    w.value(o.margin);
    w.key("gap");
    w.value(set.gap);
    w.key("gap_log2_den");
    w.value(set.gap_log2_den);
    w.key("certificate");
    w.value(set.certificate);
    w.key("max_exponent");
    w.value(o.max_exponent);
    w.key("eps_prox");
    w.value(o.eps_prox);
    w.key("eps_dist");
    w.value(o.eps_dist);
    w.key("points");
    w.begin_array();
    for (int i = 0; i < set.count; ++i) {
      w.begin_object();
      w.key("s");
      w.value(set.logits[std::size_t(i)]);
      w.key("rho");
      w.value(set.points[std::size_t(i)].rho);
      w.key("theta");
      w.value(set.points[std::size_t(i)].theta);
      w.end_object();
    }
    w.end_array();
    w.key("pairs");
    w.begin_array();
    for (const dc::PairVerdict& pv : scan.pairs) {
      w.begin_object();
      w.key("i");
      w.value(pv.i);
      w.key("j");
      w.value(pv.j);
      w.key("liminf_est");
      w.value(pv.liminf_est);
      w.key("limsup_est");
      w.value(pv.limsup_est);
      w.key("verdict");
      w.value(dc::to_string(pv.verdict));
      w.end_object();
    }
    w.end_array();
    w.key("all_certified");
    w.value(scan.all_certified);
    w.key("worst_liminf");
    w.value(scan.worst_liminf);
    w.key("worst_limsup");
    w.value(scan.worst_limsup);
    w.end_object();
    body = w.take();
    body += '\n';
  }
  write_output(o.common.out, body);
  if (scan.all_certified) return kExitOk;
  for (const dc::PairVerdict& pv : scan.pairs) {
    if (pv.verdict == dc::Verdict::Degenerate) return kExitNumeric;
  }
  return kExitNotCertified;
}

// ---- inverse-scan -----------------------------------------------------------

struct InverseOpts {
  int pairs = 100;
  std::int64_t tail = 64;
  std::uint64_t seed = 7;
  CommonOpts common;
};

int run_inverse_scan(const InverseOpts& o) {
  auto pair_list = dc::sample_mixed_pairs(o.pairs, o.seed);
  dc::InverseScanReport report = dc::inverse_scan(pair_list, o.tail);
  std::string body;
  if (o.common.format == "csv") {
    body = "kind_x,kind_y,limit_distance,osc,start_modulus\n";
    for (const dc::InverseScanEntry& e : report.entries) {
      body += csv_row({point_class_name(e.kind_x), point_class_name(e.kind_y),
                       format_double(e.limit_distance), format_double(e.osc),
                       format_double(e.start_modulus)});
    }
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value("inverse_scan");
    w.key("pairs");
    w.value(o.pairs);
    w.key("tail");
    w.value(std::int64_t(report.tail));
    w.key("seed");
    w.value(std::int64_t(o.seed));
    w.key("entries");
    w.begin_array();
    for (const dc::InverseScanEntry& e : report.entries) {
      w.begin_object();
      w.key("kind_x");
      w.value(point_class_name(e.kind_x));
      w.key("kind_y");
      w.value(point_class_name(e.kind_y));
      w.key("limit_distance");
      w.value(e.limit_distance);
      w.key("osc");
      w.value(e.osc);
      w.key("start_modulus");
      w.value(e.start_modulus);
      w.end_object();
    }
    w.end_array();
    w.key("max_osc");
    w.value(report.max_osc);
    w.key("max_start_modulus");
    w.value(report.max_start_modulus);
    w.end_object();
    body = w.take();
    body += '\n';
  }
  write_output(o.common.out, body);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit chaotic disk homeomorphism: profile, orbits and certification"};
  app.require_subcommand(1);

  XiOpts xi_opts;
  CLI::App* xi_cmd = app.add_subcommand("xi", "Tabulate the angular-speed profile and its envelope");
  xi_cmd->add_option("--s-min", xi_opts.s_min, "Left end of the log-radius range")
      ->capture_default_str();
  xi_cmd->add_option("--s-max", xi_opts.s_max, "Right end of the log-radius range")
      ->capture_default_str();
  xi_cmd->add_option("--samples", xi_opts.samples, "Number of grid points")->capture_default_str();
  xi_opts.common.attach(xi_cmd, "csv");

  OrbitOpts orbit_opts;
  CLI::App* orbit_cmd = app.add_subcommand("orbit", "Iterate the map step by step");
  orbit_cmd->add_option("--s0", orbit_opts.s0, "Start log-coordinate (interior point)");
  orbit_cmd->add_option("--rho0", orbit_opts.rho0, "Start disk radius in [0, 1]");
  orbit_cmd->add_option("--theta0", orbit_opts.theta0, "Start angle in turns")
      ->capture_default_str();
  orbit_cmd->add_option("--steps", orbit_opts.steps, "Number of steps (<= 1e7)")->required();
  orbit_cmd->add_option("--stride", orbit_opts.stride, "Record every stride-th step")
      ->capture_default_str();
  orbit_cmd->add_option("--direction", orbit_opts.direction, "forward or backward")
      ->check(CLI::IsMember({"forward", "backward"}))
      ->capture_default_str();
  orbit_opts.common.attach(orbit_cmd, "csv");

  FastForwardOpts ff_opts;
  CLI::App* ff_cmd = app.add_subcommand("fastforward", "Jump the orbit ahead in closed form");
  ff_cmd->add_option("--s0", ff_opts.s0, "Start log-coordinate")->required();
  ff_cmd->add_option("--theta0", ff_opts.theta0, "Start angle in turns")->capture_default_str();
  ff_cmd->add_option("--steps", ff_opts.steps, "Target time (<= 2^62)");
  ff_cmd->add_option("--exponent", ff_opts.exponent,
                     "Target time 2^n - 1 for s0 in (0, 1) (n <= 1000)");
  ff_opts.common.attach(ff_cmd, "json");

  PairOpts pair_opts;
  CLI::App* pair_cmd =
      app.add_subcommand("pair", "Certify a Li-Yorke pair from positive-axis log-coordinates");
  pair_cmd->add_option("--sx", pair_opts.sx, "Log-coordinate of x, in (0, 1)")->required();
  pair_cmd->add_option("--sy", pair_opts.sy, "Log-coordinate of y, in (0, 1)")->required();
  pair_cmd->add_option("--max-exponent", pair_opts.max_exponent, "Largest sampled exponent")
      ->capture_default_str();
  pair_cmd->add_option("--k-terms", pair_opts.k_terms, "Return-time entries to request")
      ->capture_default_str();
  pair_cmd->add_option("--eps-prox", pair_opts.eps_prox, "Proximality threshold")
      ->capture_default_str();
  pair_cmd->add_option("--eps-dist", pair_opts.eps_dist, "Distality margin below 2")
      ->capture_default_str();
  pair_opts.common.attach(pair_cmd, "json");

  ScrambledOpts scr_opts;
  CLI::App* scr_cmd =
      app.add_subcommand("scrambled", "Build a scrambled-set candidate and certify every pair");
  scr_cmd->add_option("--k", scr_opts.k, "Number of points")->capture_default_str();
  scr_cmd->add_option("--margin", scr_opts.margin, "Distance kept from the segment ends")
      ->capture_default_str();
  scr_cmd->add_option("--max-exponent", scr_opts.max_exponent, "Largest sampled exponent")
      ->capture_default_str();
  scr_cmd->add_option("--eps-prox", scr_opts.eps_prox, "Proximality threshold")
      ->capture_default_str();
  scr_cmd->add_option("--eps-dist", scr_opts.eps_dist, "Distality margin below 2")
      ->capture_default_str();
  scr_opts.common.attach(scr_cmd, "json");

  InverseOpts inv_opts;
  CLI::App* inv_cmd = app.add_subcommand(
      "inverse-scan", "Show backward orbits converging: no Li-Yorke pairs for the inverse");
  inv_cmd->add_option("--pairs", inv_opts.pairs, "Number of sampled pairs")->capture_default_str();
  inv_cmd->add_option("--tail", inv_opts.tail, "Window start (>= 64)")->capture_default_str();
  inv_cmd->add_option("--seed", inv_opts.seed, "Sampling seed")->capture_default_str();
  inv_opts.common.attach(inv_cmd, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (xi_cmd->parsed()) return run_xi(xi_opts);
    if (orbit_cmd->parsed()) return run_orbit(orbit_opts);
    if (ff_cmd->parsed()) return run_fastforward(ff_opts);
    if (pair_cmd->parsed()) return run_pair(pair_opts);
    if (scr_cmd->parsed()) return run_scrambled(scr_opts);
    if (inv_cmd->parsed()) return run_inverse_scan(inv_opts);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }
  return kExitUsage;
}
