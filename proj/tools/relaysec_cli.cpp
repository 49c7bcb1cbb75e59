// Command-line front end: single-point evaluation, parameter sweeps,
// Monte Carlo validation of the closed forms, and policy optimization.
// Emits CSV or JSON plus a sidecar JSON echo of the resolved configuration.

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <string>
#include <vector>

#include "relaysec/montecarlo.hpp"
#include "relaysec/optimize.hpp"
#include "relaysec/policy_ps.hpp"
#include "relaysec/policy_ts.hpp"
#include "relaysec/report.hpp"
#include "relaysec/shared_metrics.hpp"
#include "relaysec/version.hpp"

using json = nlohmann::ordered_json;
using namespace relaysec;

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
bool is_set(double v) { return !std::isnan(v); }

struct Cli {
  // powers; dBm and watts forms, watts wins when both are given
  double p_dbm = 40.0;
  double p_s_dbm = kUnset, p_d_dbm = kUnset;
  double p_s_watts = kUnset, p_d_watts = kUnset;
  double n0_watts = 1e-4, n0_dbm = kUnset;
  double theta_h_dbm = -30.0, theta_h_watts = kUnset;
  double eta = 0.7;
  double r_th = 0.5;
  // geometry; direct lambda overrides win when given
  double d_sr = 5.0, d_rd = 5.0, rho = 2.7;
  double lambda_sr = kUnset, lambda_rd = kUnset;
  // policy
  std::string policy = "ps";
  double beta = 0.5;
  double alpha = 0.3;
  // sweep
  std::string sweep_var;
  double sweep_from = kUnset, sweep_to = kUnset, sweep_step = kUnset;
  double total_distance = 10.0;
  std::string inner_optimize = "none";
  // monte carlo
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::string snr_mode = "exact";
  int streams = 0;
  // optimize
  std::string objective = "min-outage";
  int grid_points = 41;
  double refine_tol = 1e-4;
  double bound_lo = 0.001, bound_hi = 0.999;
  // validate
  double grid_from = 0.1, grid_to = 0.9, grid_step = 0.1;
  double tol_outage = 0.015;
  double tol_pos = 0.01;
  double mc_eta_scale = 1.0;  // test hook: perturbs only the simulator path
  // quadrature
  double abs_tol = 1e-9, rel_tol = 1e-7;
  int max_subdivisions = 2000;
  // io
  std::string format = "csv";
  std::string output;
};

double resolve_power(double watts, double dbm, double fallback_dbm) {
  if (is_set(watts)) return watts;
  if (is_set(dbm)) return dbm_to_watts(dbm);
  return dbm_to_watts(fallback_dbm);
}

SystemParams resolve_params(const Cli& c) {
  SystemParams p;
  p.p_s = resolve_power(c.p_s_watts, c.p_s_dbm, c.p_dbm);
  p.p_d = resolve_power(c.p_d_watts, c.p_d_dbm, c.p_dbm);
  p.n0 = is_set(c.n0_dbm) ? dbm_to_watts(c.n0_dbm) : c.n0_watts;
  p.theta_h = is_set(c.theta_h_watts) ? c.theta_h_watts
                                      : dbm_to_watts(c.theta_h_dbm);
  p.eta = c.eta;
  p.r_th = c.r_th;
  if (is_set(c.lambda_sr) || is_set(c.lambda_rd)) {
    if (!is_set(c.lambda_sr) || !is_set(c.lambda_rd)) {
      throw std::invalid_argument(
          "lambda_sr/lambda_rd: give both or neither");
    }
    p.lambda_sr = c.lambda_sr;
    p.lambda_rd = c.lambda_rd;
  } else {
    const ChannelGains g = lambda_from_geometry({c.d_sr, c.d_rd, c.rho});
    p.lambda_sr = g.lambda_sr;
    p.lambda_rd = g.lambda_rd;
  }
  p.validate();
  return p;
}

PolicyParam resolve_policy(const Cli& c) {
  if (c.policy == "ps") return PolicyParam::ps(c.beta);
  if (c.policy == "ts") return PolicyParam::ts(c.alpha);
  throw std::invalid_argument("policy: must be ps or ts");
}

QuadSpec resolve_quad(const Cli& c) {
  return {c.abs_tol, c.rel_tol, c.max_subdivisions};
}

McConfig resolve_mc(const Cli& c) {
  McConfig cfg;
  cfg.n_samples = c.samples;
  cfg.seed = c.seed;
  if (c.snr_mode == "exact") {
    cfg.snr_mode = SnrMode::exact;
  } else if (c.snr_mode == "approx") {
    cfg.snr_mode = SnrMode::high_snr_approx;
  } else {
    throw std::invalid_argument("snr_mode: must be exact or approx");
  }
  cfg.n_streams = c.streams;
  return cfg;
}

OptimizeSpec resolve_opt(const Cli& c, const std::string& objective) {
  OptimizeSpec spec;
  if (objective == "min-outage") {
    spec.objective = Objective::min_secrecy_outage;
  } else if (objective == "max-ergodic") {
    spec.objective = Objective::max_ergodic_rate;
  } else {
    throw std::invalid_argument("objective: must be min-outage or "
                                "max-ergodic");
  }
  spec.coarse_grid_points = c.grid_points;
  spec.refine_tol = c.refine_tol;
  spec.lower = c.bound_lo;
  spec.upper = c.bound_hi;
  return spec;
}

std::string fmt9(double v) {
  char buf[48];
  auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
  (void)ec;
  return std::string(buf, end);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

json config_echo(const Cli& c, const std::string& command,
                 const SystemParams& p) {
  json j;
  j["tool"] = "relaysec";
  j["version"] = kVersion;
  j["command"] = command;
  j["p_s_watts"] = p.p_s;
  j["p_d_watts"] = p.p_d;
  j["n0_watts"] = p.n0;
  j["theta_h_watts"] = p.theta_h;
  j["eta"] = p.eta;
  j["r_th"] = p.r_th;
  j["lambda_sr"] = p.lambda_sr;
  j["lambda_rd"] = p.lambda_rd;
  j["d_sr"] = c.d_sr;
  j["d_rd"] = c.d_rd;
  j["rho"] = c.rho;
  j["policy"] = c.policy;
  j["beta"] = c.beta;
  j["alpha"] = c.alpha;
  j["sweep"] = c.sweep_var;
  j["sweep_from"] = c.sweep_from;
  j["sweep_to"] = c.sweep_to;
  j["sweep_step"] = c.sweep_step;
  j["total_distance"] = c.total_distance;
  j["inner_optimize"] = c.inner_optimize;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["snr_mode"] = c.snr_mode;
  j["streams"] = c.streams;
  j["objective"] = c.objective;
  j["grid_points"] = c.grid_points;
  j["refine_tol"] = c.refine_tol;
  j["bound_lo"] = c.bound_lo;
  j["bound_hi"] = c.bound_hi;
  j["abs_tol"] = c.abs_tol;
  j["rel_tol"] = c.rel_tol;
  j["max_subdivisions"] = c.max_subdivisions;
  j["format"] = c.format;
  j["output"] = c.output;
  return j;
}

class Emitter {
 public:
  Emitter(const Cli& c, const std::string& command, const SystemParams& p)
      : format_(c.format), output_(c.output) {
    if (format_ != "csv" && format_ != "json") {
      throw std::invalid_argument("format: must be csv or json");
    }
    config_ = config_echo(c, command, p);
    seed_ = c.seed;
  }

  void add(json row) { rows_.push_back(std::move(row)); }

  // resolved-config echo for reproducibility, written next to the output
  void write_sidecar() const {
    const std::string path =
        output_.empty() ? "relaysec_run.config.json" : output_ + ".config.json";
    std::ofstream f(path);
    f << config_.dump(2) << "\n";
  }

  void write() const {
    write_sidecar();
    if (output_.empty()) {
      emit(std::cout);
    } else {
      std::ofstream f(output_);
      if (!f) throw std::invalid_argument("output: cannot open " + output_);
      emit(f);
    }
  }

 private:
  void emit(std::ostream& os) const {
    if (format_ == "json") {
      json doc;
      doc["config"] = config_;
      doc["rows"] = rows_.empty() ? json::array() : json(rows_);
      os << doc.dump(2) << "\n";
      return;
    }
    os << "# relaysec " << kVersion << "\n";
    os << "# seed: " << seed_ << "\n";
    char hex[24];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(config_.dump())));
    os << "# config-hash: " << hex << "\n";
    if (rows_.empty()) return;
    bool first = true;
    for (const auto& [key, value] : rows_.front().items()) {
      (void)value;
      os << (first ? "" : ",") << key;
      first = false;
    }
    os << "\n";
    for (const json& row : rows_) {
      first = true;
      for (const auto& [key, value] : row.items()) {
        (void)key;
        os << (first ? "" : ",");
        if (value.is_number_float()) {
          os << fmt9(value.get<double>());
        } else if (value.is_boolean()) {
          os << (value.get<bool>() ? "true" : "false");
        } else if (value.is_string()) {
          os << value.get<std::string>();
        } else {
          os << value.dump();
        }
        first = false;
      }
      os << "\n";
    }
  }

  std::string format_;
  std::string output_;
  json config_;
  std::uint64_t seed_ = 0;
  std::vector<json> rows_;
};

json inputs_row(const SystemParams& p, const std::string& policy,
                double param) {
  json r;
  r["policy"] = policy;
  r["param"] = param;
  r["p_s_watts"] = p.p_s;
  r["p_d_watts"] = p.p_d;
  r["n0_watts"] = p.n0;
  r["eta"] = p.eta;
  r["theta_h_watts"] = p.theta_h;
  r["r_th"] = p.r_th;
  r["lambda_sr"] = p.lambda_sr;
  r["lambda_rd"] = p.lambda_rd;
  return r;
}

void append_metrics(json& row, const MetricReport& m) {
  row["p_power_outage"] = m.p_power_outage;
  row["p_secrecy_outage_cond"] = m.p_secrecy_outage_cond;
  row["p_secrecy_outage_total"] = m.p_secrecy_outage_total;
  row["p_pos_exact"] = m.p_pos_exact;
  row["p_pos_approx"] = m.p_pos_approx;
  row["ergodic_exact"] = m.ergodic_exact;
  row["ergodic_approx"] = m.ergodic_approx;
  row["ergodic_lower_bound"] = m.ergodic_lower_bound;
}

int cmd_eval(const Cli& c) {
  const SystemParams p = resolve_params(c);
  const PolicyParam pol = resolve_policy(c);
  Emitter out(c, "eval", p);
  const MetricReport m = compute_metric_report(p, pol, resolve_quad(c));
  json row = inputs_row(p, c.policy, pol.value);
  append_metrics(row, m);
  out.add(std::move(row));
  out.write();
  return 0;
}

struct SweepPoint {
  SystemParams params;
  PolicyParam pol;
  double value;
};

std::vector<double> progression(double from, double to, double step) {
  if (!is_set(from) || !is_set(to) || !is_set(step)) {
    throw std::invalid_argument("sweep_from/sweep_to/sweep_step: required");
  }
  if (!(step > 0.0) || to < from) {
    throw std::invalid_argument("sweep range: need from <= to and step > 0");
  }
  std::vector<double> vals;
  for (double v = from; v <= to + 0.5 * step; v += step) {
    vals.push_back(std::min(v, to));
  }
  if (vals.size() > 100000) {
    throw std::invalid_argument("sweep range: too many points");
  }
  return vals;
}

SweepPoint sweep_point(const Cli& c, const std::string& var, double v) {
  Cli point = c;
  if (var == "beta") {
    point.policy = "ps";
    point.beta = v;
  } else if (var == "alpha") {
    point.policy = "ts";
    point.alpha = v;
  } else if (var == "r_th") {
    point.r_th = v;
  } else if (var == "snr_db") {
    // transmit SNR sweeps pin the noise power at -10 dBm and move P
    point.n0_watts = dbm_to_watts(-10.0);
    point.n0_dbm = kUnset;
    point.p_s_watts = point.n0_watts * std::pow(10.0, v / 10.0);
    point.p_d_watts = point.p_s_watts;
  } else if (var == "d_sr") {
    point.d_sr = v;
    point.d_rd = c.total_distance - v;
    point.lambda_sr = kUnset;
    point.lambda_rd = kUnset;
  } else if (var == "rho") {
    point.rho = v;
    point.lambda_sr = kUnset;
    point.lambda_rd = kUnset;
  } else if (var == "eta") {
    point.eta = v;
  } else {
    throw std::invalid_argument(
        "sweep: must be one of beta, alpha, r_th, snr_db, d_sr, rho, eta");
  }
  return {resolve_params(point), resolve_policy(point), v};
}

int cmd_sweep(const Cli& c) {
  const bool optimizing = c.inner_optimize != "none";
  if (optimizing && (c.sweep_var == "beta" || c.sweep_var == "alpha")) {
    throw std::invalid_argument(
        "inner_optimize: cannot optimize the swept policy parameter");
  }
  const std::vector<double> values =
      progression(c.sweep_from, c.sweep_to, c.sweep_step);

  // resolve every point up front so configuration errors surface before work
  std::vector<SweepPoint> points;
  points.reserve(values.size());
  for (double v : values) points.push_back(sweep_point(c, c.sweep_var, v));

  const QuadSpec quad = resolve_quad(c);
  Emitter out(c, "sweep", resolve_params(c));

  const int n = static_cast<int>(points.size());
  std::vector<json> rows(points.size());
  std::exception_ptr fail;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    try {
      const SweepPoint& pt = points[static_cast<std::size_t>(i)];
      json row;
      row["sweep_var"] = c.sweep_var;
      row["sweep_value"] = pt.value;
      if (optimizing) {
        const OptimizeSpec spec = resolve_opt(c, c.inner_optimize);
        const Policy kind =
            pt.pol.kind == Policy::ps ? Policy::ps : Policy::ts;
        const OptimizeResult r =
            optimize_policy(pt.params, kind, spec, quad);
        row["policy"] = pt.pol.kind == Policy::ps ? "ps" : "ts";
        row["objective"] = c.inner_optimize;
        row["param_star"] = r.param;
        row["value_star"] = r.value;
        row["boundary"] = r.boundary;
        const PolicyParam star = pt.pol.kind == Policy::ps
                                     ? PolicyParam::ps(r.param)
                                     : PolicyParam::ts(r.param);
        append_metrics(row, compute_metric_report(pt.params, star, quad));
      } else {
        json in = inputs_row(pt.params,
                             pt.pol.kind == Policy::ps ? "ps" : "ts",
                             pt.pol.value);
        for (auto& [k, v] : in.items()) row[k] = v;
        append_metrics(row, compute_metric_report(pt.params, pt.pol, quad));
      }
      rows[static_cast<std::size_t>(i)] = std::move(row);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!fail) fail = std::current_exception();
    }
  }
  if (fail) std::rethrow_exception(fail);

  for (json& r : rows) out.add(std::move(r));
  out.write();
  return 0;
}

int cmd_optimize(const Cli& c) {
  if (c.policy != "ps" && c.policy != "ts") {
    throw std::invalid_argument("policy: must be ps or ts");
  }
  const SystemParams p = resolve_params(c);
  const Policy kind = c.policy == "ps" ? Policy::ps : Policy::ts;
  const QuadSpec quad = resolve_quad(c);
  const OptimizeResult r =
      optimize_policy(p, kind, resolve_opt(c, c.objective), quad);
  Emitter out(c, "optimize", p);
  json row;
  row["policy"] = c.policy;
  row["objective"] = c.objective;
  row["param_star"] = r.param;
  row["value_star"] = r.value;
  row["boundary"] = r.boundary;
  const PolicyParam star =
      kind == Policy::ps ? PolicyParam::ps(r.param) : PolicyParam::ts(r.param);
  append_metrics(row, compute_metric_report(p, star, quad));
  out.add(std::move(row));
  out.write();
  return 0;
}

int cmd_validate(const Cli& c) {
  const SystemParams p = resolve_params(c);
  const QuadSpec quad = resolve_quad(c);
  const bool exact = c.snr_mode == "exact";
  McConfig base = resolve_mc(c);

  SystemParams mc_params = p;  // test hook: corrupt only the simulator path
  mc_params.eta = std::min(p.eta * c.mc_eta_scale, 1.0);
  mc_params.validate();

  const std::vector<double> grid =
      progression(c.grid_from, c.grid_to, c.grid_step);

  Emitter out(c, "validate", p);
  bool all_pass = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const PolicyParam pol =
        c.policy == "ps" ? PolicyParam::ps(t) : PolicyParam::ts(t);
    McConfig cfg = base;
    cfg.seed = base.seed + i;
    const McEstimate mc = estimate_metrics(mc_params, pol, cfg);
    const MetricReport m = compute_metric_report(p, pol, quad);

    struct Check {
      const char* metric;
      double analytic;
      MeanSe sim;
      double tol;
    };
    const double pos_analytic = exact ? m.p_pos_exact : m.p_pos_approx;
    const double erg_analytic = exact ? m.ergodic_exact : m.ergodic_approx;
    const Check checks[] = {
        {"secrecy_outage_total", m.p_secrecy_outage_total,
         mc.secrecy_outage_total,
         exact ? c.tol_outage
               : 3.0 * mc.secrecy_outage_total.std_error + 1e-9},
        {"prob_pos", pos_analytic, mc.prob_pos,
         exact ? c.tol_pos : 3.0 * mc.prob_pos.std_error + 1e-9},
        {"power_outage", m.p_power_outage, mc.power_outage,
         3.0 * mc.power_outage.std_error + 1e-6},
        {"ergodic", erg_analytic, mc.ergodic,
         3.0 * mc.ergodic.std_error + 1e-3},
    };
    for (const Check& ck : checks) {
      const double gap = std::abs(ck.analytic - ck.sim.mean);
      const bool pass = gap <= ck.tol;
      all_pass = all_pass && pass;
      json row;
      row["policy"] = c.policy;
      row["param"] = t;
      row["snr_mode"] = c.snr_mode;
      row["metric"] = ck.metric;
      row["analytic"] = ck.analytic;
      row["mc_mean"] = ck.sim.mean;
      row["mc_std_error"] = ck.sim.std_error;
      row["abs_gap"] = gap;
      row["tolerance"] = ck.tol;
      row["verdict"] = pass ? "PASS" : "FAIL";
      out.add(std::move(row));
    }
  }
  out.write();
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secrecy metrics for an energy harvesting untrusted relay "
               "link"};
  app.fallthrough();
  Cli c;

  app.set_config("--config", "", "flat key = value configuration file");

  app.add_option("--p-dbm", c.p_dbm, "source and jamming power, dBm");
  app.add_option("--ps-dbm", c.p_s_dbm, "source power override, dBm");
  app.add_option("--pd-dbm", c.p_d_dbm, "jamming power override, dBm");
  app.add_option("--ps-watts", c.p_s_watts, "source power override, W");
  app.add_option("--pd-watts", c.p_d_watts, "jamming power override, W");
  app.add_option("--n0-watts", c.n0_watts, "noise power, W");
  app.add_option("--n0-dbm", c.n0_dbm, "noise power, dBm");
  app.add_option("--theta-h-dbm", c.theta_h_dbm,
                 "harvester activation threshold, dBm");
  app.add_option("--theta-h-watts", c.theta_h_watts,
                 "harvester activation threshold, W");
  app.add_option("--eta", c.eta, "energy conversion efficiency");
  app.add_option("--r-th", c.r_th, "target secrecy rate, bits/s/Hz");
  app.add_option("--d-sr", c.d_sr, "source-relay distance, m");
  app.add_option("--d-rd", c.d_rd, "relay-destination distance, m");
  app.add_option("--rho", c.rho, "path-loss exponent");
  app.add_option("--lambda-sr", c.lambda_sr, "mean gain override");
  app.add_option("--lambda-rd", c.lambda_rd, "mean gain override");
  app.add_option("--policy", c.policy, "ps or ts");
  app.add_option("--beta", c.beta, "power splitting ratio");
  app.add_option("--alpha", c.alpha, "energy harvesting time fraction");
  app.add_option("--sweep", c.sweep_var,
                 "sweep variable: beta alpha r_th snr_db d_sr rho eta");
  app.add_option("--from", c.sweep_from, "sweep start");
  app.add_option("--to", c.sweep_to, "sweep end");
  app.add_option("--step", c.sweep_step, "sweep step");
  app.add_option("--total-distance", c.total_distance,
                 "d_sr + d_rd during d_sr sweeps, m");
  app.add_option("--inner-optimize", c.inner_optimize,
                 "per sweep point: none, min-outage, max-ergodic");
  app.add_option("--samples", c.samples, "Monte Carlo draws");
  app.add_option("--seed", c.seed, "Monte Carlo seed");
  app.add_option("--snr-mode", c.snr_mode,
                 "destination SNR in the simulator: exact or approx");
  app.add_option("--streams", c.streams, "worker threads, 0 = all");
  app.add_option("--objective", c.objective, "min-outage or max-ergodic");
  app.add_option("--grid-points", c.grid_points, "coarse grid size");
  app.add_option("--refine-tol", c.refine_tol, "parameter tolerance");
  app.add_option("--bound-lo", c.bound_lo, "lower policy parameter bound");
  app.add_option("--bound-hi", c.bound_hi, "upper policy parameter bound");
  app.add_option("--grid-from", c.grid_from, "validate grid start");
  app.add_option("--grid-to", c.grid_to, "validate grid end");
  app.add_option("--grid-step", c.grid_step, "validate grid step");
  app.add_option("--tol-outage", c.tol_outage,
                 "absolute outage tolerance (exact mode)");
  app.add_option("--tol-pos", c.tol_pos,
                 "absolute positive-secrecy tolerance (exact mode)");
  app.add_option("--mc-eta-scale", c.mc_eta_scale,
                 "test hook: scale eta in the simulator path only");
  app.add_option("--abs-tol", c.abs_tol, "quadrature absolute tolerance");
  app.add_option("--rel-tol", c.rel_tol, "quadrature relative tolerance");
  app.add_option("--max-subdivisions", c.max_subdivisions,
                 "quadrature subdivision budget");
  app.add_option("--format", c.format, "csv or json");
  app.add_option("-o,--output", c.output, "output path; stdout when absent");

  CLI::App* eval = app.add_subcommand("eval", "evaluate one parameter point");
  CLI::App* sweep = app.add_subcommand("sweep", "sweep one variable");
  CLI::App* validate =
      app.add_subcommand("validate", "compare closed forms against the "
                                     "simulator");
  CLI::App* optimize =
      app.add_subcommand("optimize", "optimize the policy parameter");
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(c);
    if (sweep->parsed()) return cmd_sweep(c);
    if (validate->parsed()) return cmd_validate(c);
    if (optimize->parsed()) return cmd_optimize(c);
    return 2;
  } catch (const QuadratureError& e) {
    std::cerr << "numeric non-convergence: " << e.what()
              << " (best estimate " << e.best_estimate << ", bound "
              << e.error_bound << ")\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
