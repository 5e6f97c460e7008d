#include "shatter/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "shatter/bounds.hpp"
#include "shatter/oracle.hpp"
#include "shatter/shattering.hpp"

namespace shatter::cli {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

void require_unit_open(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) throw UsageError(std::string("--") + name + " must lie in (0, 1)");
}

HypothesisSpec spec_of(std::uint32_t h, std::uint32_t p) {
  if (p < 1) throw UsageError("--p must be >= 1");
  return HypothesisSpec::make(h, p);
}

std::string decimal(const BigCount& v) { return v.get_str(); }

std::string ten_digits(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

}  // namespace

OutputRecord cmd_coef(std::uint64_t n, std::uint32_t h, std::uint32_t p) {
  if (n < 1) throw UsageError("--n must be >= 1");
  const ShatterValue v = evaluate_shatter(n, spec_of(h, p), true);
  OutputRecord r;
  r.command = "coef";
  r.inputs = {{"n", n}, {"h", h}, {"p", p}};
  r.result = {{"count", decimal(*v.exact)}, {"log", v.log.log()}};
  if (v.saturated) r.flags.push_back("saturated");
  r.provenance = {{"path", to_string(ComputationPath::exact)}};
  return r;
}

OutputRecord cmd_bound(std::uint64_t n, double eps, std::uint32_t h, std::uint32_t p, bool clamp) {
  if (n < 1) throw UsageError("--n must be >= 1");
  require_unit_open(eps, "eps");
  const BoundReport rep = report_delta(n, eps, spec_of(h, p));
  const double raw = rep.delta_log->log();
  OutputRecord r;
  r.command = "bound";
  r.inputs = {{"n", n}, {"eps", eps}, {"h", h}, {"p", p}, {"clamp", clamp}};
  if (clamp && rep.vacuous) {
    r.result = {{"delta", scientific_from_log(0.0)}, {"log_delta", 0.0}, {"raw_log_delta", raw}};
    r.flags.push_back("clamped");
  } else {
    r.result = {{"delta", scientific_from_log(raw)}, {"log_delta", raw}};
  }
  if (rep.vacuous) r.flags.push_back("vacuous");
  if (rep.saturated) r.flags.push_back("saturated");
  r.provenance = {{"path", to_string(rep.path)}};
  return r;
}

OutputRecord cmd_solve_n(double delta, double eps, std::uint32_t h, std::uint32_t p,
                         std::optional<std::uint64_t> ceiling) {
  require_unit_open(delta, "delta");
  require_unit_open(eps, "eps");
  const HypothesisSpec spec = spec_of(h, p);
  MinNOptions opts;
  if (ceiling) opts.ceiling = *ceiling;
  const MinNTrace t = solve_min_n_traced(delta, eps, spec, opts);
  OutputRecord r;
  r.command = "solve-n";
  r.inputs = {{"delta", delta}, {"eps", eps}, {"h", h}, {"p", p}};
  r.result = {{"n", t.n},
              {"log_delta_at_n", delta_bound(t.n, eps, spec).log()},
              {"bracket", {{"lo", t.bracket_lo}, {"hi", t.bracket_hi}}},
              {"iterations", {{"expansions", t.expansions}, {"bisections", t.bisections}, {"probes", t.probes}}}};
  if (is_saturated(t.n, h)) r.flags.push_back("saturated");
  r.provenance = {{"path", to_string(ComputationPath::log_domain)}};
  return r;
}

OutputRecord cmd_solve_eps(std::uint64_t n, double delta, std::uint32_t h, std::uint32_t p) {
  if (n < 1) throw UsageError("--n must be >= 1");
  require_unit_open(delta, "delta");
  const BoundReport rep = report_max_eps(n, delta, spec_of(h, p));
  OutputRecord r;
  r.command = "solve-eps";
  r.inputs = {{"n", n}, {"delta", delta}, {"h", h}, {"p", p}};
  r.result = {{"eps", *rep.solved_eps}};
  if (rep.vacuous) r.flags.push_back("vacuous");
  if (rep.saturated) r.flags.push_back("saturated");
  r.provenance = {{"path", to_string(rep.path)}};
  return r;
}

std::string curve_csv(const CurveRequest& req) {
  if (req.h_list.empty() || req.p_list.empty()) throw UsageError("--h-list and --p-list must be nonempty");
  std::vector<HypothesisSpec> specs;
  for (auto h : req.h_list)
    for (auto p : req.p_list) specs.push_back(spec_of(h, p));
  std::vector<std::uint64_t> grid;
  try {
    grid = log_spaced_grid(req.n_start, req.n_end, req.n_points);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::string csv = "n,h,p,epsilon\n";
  for (const auto& row : emit_epsilon_curve(grid, specs))
    csv += std::to_string(row.n) + ',' + std::to_string(row.h) + ',' + std::to_string(row.p) + ',' +
           ten_digits(row.epsilon) + '\n';
  return csv;
}

OutputRecord cmd_curve(const CurveRequest& req) {
  const std::string csv = curve_csv(req);
  std::ofstream file(req.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file: " + req.out_path);
  file << csv;
  file.close();
  if (!file) throw UsageError("failed writing output file: " + req.out_path);

  std::size_t rows = 0;
  for (char c : csv) rows += c == '\n';
  OutputRecord r;
  r.command = "curve";
  r.inputs = {{"n_start", req.n_start}, {"n_end", req.n_end}, {"n_points", req.n_points},
              {"h_list", req.h_list},   {"p_list", req.p_list}, {"out", req.out_path}};
  r.result = {{"file", req.out_path}, {"rows", rows - 1}, {"grid", "log-spaced"}};
  r.provenance = {{"path", "closed-form"}};
  return r;
}

OutputRecord cmd_verify(std::size_t n, std::size_t h, int trials, std::uint64_t seed, int workers) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw UsageError("size guard: --n must lie in [1, " + std::to_string(kMaxEnumerationSize) + "]");
  if (h < 1 || h > 4) throw UsageError("--h must lie in [1, 4]");
  if (trials < 1) throw UsageError("--trials must be >= 1");
  if (workers < 1) throw UsageError("--workers must be >= 1");
  const VerifyReport rep = verify_formula(n, h, trials, seed, workers);
  OutputRecord r;
  r.command = "verify";
  r.inputs = {{"n", n}, {"h", h}, {"trials", trials}, {"seed", seed}};
  json per_trial = json::array();
  for (const auto& t : rep.trials)
    per_trial.push_back({{"seed", t.seed}, {"resamples", t.resamples}, {"count", decimal(t.count)}});
  r.result = {{"formula", decimal(rep.formula)}, {"trials", per_trial}, {"status", rep.pass ? "PASS" : "FAIL"}};
  if (is_saturated(n, static_cast<std::uint32_t>(h))) r.flags.push_back("saturated");
  r.provenance = {{"path", to_string(ComputationPath::exact)}, {"seed", seed}, {"prng", rep.prng}};
  return r;
}

namespace {

struct Options {
  std::uint64_t n = 0;
  std::uint32_t h = 0;
  std::uint32_t p = 1;
  double eps = 0.0;
  double delta = 0.0;
  bool clamp = false;
  std::uint64_t ceiling = 0;
  int trials = 1;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string format = "plain";
  CurveRequest curve;
};

void add_format(CLI::App* sub, Options& o, std::vector<std::string> allowed) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shattering coefficients, ERM bounds and a brute-force separability oracle", "shatter"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto* coef = app.add_subcommand("coef", "Exact shattering coefficient 2 sum C(n-1,i)^p");
  coef->add_option("--n", o.n, "Sample size")->required();
  coef->add_option("--h", o.h, "Space dimension")->required();
  coef->add_option("--p", o.p, "Number of hyperplanes");
  add_format(coef, o, {"plain", "json"});

  auto* bound = app.add_subcommand("bound", "Evaluate 2 N exp(-n eps^2 / 4)");
  bound->add_option("--n", o.n, "Sample size")->required();
  bound->add_option("--eps", o.eps, "Risk divergence in (0,1)")->required();
  bound->add_option("--h", o.h, "Space dimension")->required();
  bound->add_option("--p", o.p, "Number of hyperplanes");
  bound->add_flag("--clamp", o.clamp, "Clamp vacuous bounds to 1");
  add_format(bound, o, {"plain", "json"});

  auto* solve_n = app.add_subcommand("solve-n", "Minimal sample size for (delta, eps)");
  solve_n->add_option("--delta", o.delta, "Target probability in (0,1)")->required();
  solve_n->add_option("--eps", o.eps, "Risk divergence in (0,1)")->required();
  solve_n->add_option("--h", o.h, "Space dimension")->required();
  solve_n->add_option("--p", o.p, "Number of hyperplanes");
  solve_n->add_option("--ceiling", o.ceiling, "Upper limit for the bracket search");
  add_format(solve_n, o, {"plain", "json"});

  auto* solve_eps = app.add_subcommand("solve-eps", "Largest eps guaranteed at (n, delta)");
  solve_eps->add_option("--n", o.n, "Sample size")->required();
  solve_eps->add_option("--delta", o.delta, "Target probability in (0,1)")->required();
  solve_eps->add_option("--h", o.h, "Space dimension")->required();
  solve_eps->add_option("--p", o.p, "Number of hyperplanes");
  add_format(solve_eps, o, {"plain", "json"});

  auto* curve = app.add_subcommand("curve", "Write eps(n) curves to a CSV file");
  curve->add_option("--n-start", o.curve.n_start, "First grid point (>= 2)");
  curve->add_option("--n-end", o.curve.n_end, "Last grid point");
  curve->add_option("--n-points", o.curve.n_points, "Grid size (>= 2)");
  curve->add_option("--h-list", o.curve.h_list, "Comma-separated h values")->delimiter(',');
  curve->add_option("--p-list", o.curve.p_list, "Comma-separated p values")->delimiter(',');
  curve->add_option("--out", o.curve.out_path, "Output CSV path")->required();
  add_format(curve, o, {"plain", "json", "csv"});

  auto* verify = app.add_subcommand("verify", "Brute-force check of the single-hyperplane count");
  verify->add_option("--n", o.n, "Sample size (<= 20)")->required();
  verify->add_option("--h", o.h, "Space dimension (1..4)")->required();
  verify->add_option("--trials", o.trials, "Independent point sets");
  verify->add_option("--seed", o.seed, "Base seed");
  verify->add_option("--workers", o.workers, "Enumeration threads");
  add_format(verify, o, {"plain", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    OutputRecord rec;
    if (*coef) {
      rec = cmd_coef(o.n, o.h, o.p);
    } else if (*bound) {
      rec = cmd_bound(o.n, o.eps, o.h, o.p, o.clamp);
    } else if (*solve_n) {
      rec = cmd_solve_n(o.delta, o.eps, o.h, o.p,
                        o.ceiling ? std::optional<std::uint64_t>(o.ceiling) : std::nullopt);
    } else if (*solve_eps) {
      rec = cmd_solve_eps(o.n, o.delta, o.h, o.p);
    } else if (*curve) {
      rec = cmd_curve(o.curve);
      if (o.format == "csv") {
        out << curve_csv(o.curve);
        return kOk;
      }
    } else {
      rec = cmd_verify(o.n, o.h, o.trials, o.seed, o.workers);
    }
    out << (o.format == "json" ? render_json(rec) : render_plain(rec));
    if (rec.command == "verify" && rec.result.at("status") != "PASS") return kVerifyFail;
    return kOk;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("shatter");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace shatter::cli
