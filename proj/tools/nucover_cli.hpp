#pragma once

// Command-line front end: run, sweep, bench, oracle.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nucover/nucover.hpp"

namespace nucover::cli {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Algorithm { cover, bnb };

struct RunConfig {
  std::string problem;
  std::string algorithm;
  double eps = 0.5;
  std::optional<double> eta;
  std::optional<double> eta_ratio;
  std::string scheme = "1a";
  double beta = 0.99;
  std::optional<double> gamma;
  std::size_t max_boxes = 0;  // 0 = unlimited
  double max_seconds = 0.0;   // 0 = unlimited
  std::size_t max_iterations = 100000;
  double modulus_scale = 1.0;
  std::string output;
  std::string trace;
};

/// Fully checked run parameters.
struct ResolvedRun {
  TestProblemId problem;
  Algorithm algorithm;
  double eps;
  double eta = 0.0;
  TraversalScheme scheme = TraversalScheme::s1a;
  double beta = 0.99;
  double gamma = 1.0;
  std::size_t max_boxes;
  double max_seconds;
  std::size_t max_iterations;
  double modulus_scale;
};

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline ResolvedRun resolve(const RunConfig& c) {
  ResolvedRun r{};
  const auto id = parse_test_problem(c.problem);
  if (!id) throw UsageError("unknown problem: '" + c.problem + "' (expected f1, f2, f3 or f4)");
  r.problem = *id;
  if (c.algorithm == "cover")
    r.algorithm = Algorithm::cover;
  else if (c.algorithm == "bnb")
    r.algorithm = Algorithm::bnb;
  else
    throw UsageError("unknown algorithm: '" + c.algorithm + "' (expected cover or bnb)");
  if (!(c.eps > 0.0)) throw UsageError("--eps must be positive");
  r.eps = c.eps;
  if (!(c.modulus_scale > 0.0)) throw UsageError("--modulus-scale must be positive");
  r.modulus_scale = c.modulus_scale;
  r.max_boxes = c.max_boxes == 0 ? std::numeric_limits<std::size_t>::max() : c.max_boxes;
  r.max_seconds = c.max_seconds == 0.0 ? std::numeric_limits<double>::infinity() : c.max_seconds;
  if (!(r.max_seconds > 0.0)) throw UsageError("--max-seconds must be positive");
  if (c.max_iterations == 0) throw UsageError("--max-iterations must be positive");
  r.max_iterations = c.max_iterations;

  if (r.algorithm == Algorithm::cover) {
    const auto scheme = parse_scheme(c.scheme);
    if (!scheme) throw UsageError("unknown scheme: '" + c.scheme + "' (expected 1a, 1b, 2a, 2b or recursive)");
    r.scheme = *scheme;
    if (c.eta && c.eta_ratio) throw UsageError("--eta and --eta-ratio are mutually exclusive");
    r.eta = c.eta ? *c.eta : c.eps * c.eta_ratio.value_or(default_eta_ratio(r.problem));
    if (!(r.eta > 0.0 && r.eta < r.eps)) throw UsageError("cover requires 0 < eta < eps");
  } else {
    if (!c.gamma) throw UsageError("bnb requires --gamma");
    if (!(c.beta > 0.0 && c.beta < 1.0)) throw UsageError("--beta must lie in (0,1)");
    if (!(*c.gamma > 0.0 && *c.gamma <= 1.0)) throw UsageError("--gamma must lie in (0,1]");
    r.beta = c.beta;
    r.gamma = *c.gamma;
  }
  return r;
}

struct Outcome {
  RunResult result;
  double wall_seconds = 0.0;
};

inline Outcome execute(const ResolvedRun& r, bool trace) {
  Problem base = make_test_problem(r.problem);
  Problem p(base.objective(), base.modulus().scaled(r.modulus_scale), base.domain(), base.name());
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  if (r.algorithm == Algorithm::cover) {
    CoverOptions opt;
    opt.scheme = r.scheme;
    opt.max_boxes = r.max_boxes;
    opt.max_seconds = r.max_seconds;
    opt.record_trace = trace;
    out.result = solve_cover(p, r.eps, r.eta, opt);
  } else {
    BnbOptions opt;
    opt.beta = r.beta;
    opt.gamma = r.gamma;
    opt.max_iterations = r.max_iterations;
    opt.record_trace = trace;
    out.result = solve_bnb(p, r.eps, opt);
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

inline json theta_json(const RunResult& res) {
  if (!res.theta) return nullptr;
  if (std::isinf(*res.theta)) return "inf";
  return *res.theta;
}

inline std::string theta_csv(const RunResult& res) {
  if (!res.theta) return "";
  if (std::isinf(*res.theta)) return "inf";
  return fmt_double(*res.theta);
}

inline json result_json(const ResolvedRun& r, const Outcome& o) {
  json params;
  params["eps"] = r.eps;
  if (r.algorithm == Algorithm::cover) {
    params["eta"] = r.eta;
    params["scheme"] = std::string(to_string(r.scheme));
  } else {
    params["beta"] = r.beta;
    params["gamma"] = r.gamma;
  }
  params["modulus_scale"] = r.modulus_scale;

  json j;
  j["problem"] = std::string(to_string(r.problem));
  j["algorithm"] = r.algorithm == Algorithm::cover ? "cover" : "bnb";
  j["params"] = params;
  j["F"] = o.result.best_value;
  j["x"] = o.result.best_point;
  j["N_tot"] = o.result.n_total;
  j["N_opt"] = o.result.n_opt;
  j["theta"] = theta_json(o.result);
  j["status"] = std::string(to_string(o.result.status));
  j["evaluations"] = o.result.evaluations;
  j["wall_time_s"] = o.wall_seconds;
  return j;
}

inline void write_trace_csv(std::ostream& os, Algorithm algorithm, const std::vector<TraceRow>& trace) {
  if (algorithm == Algorithm::cover) {
    os << "k,h_prime,F_k,pending_size\n";
    for (const auto& t : trace)
      os << t.k << ',' << fmt_double(t.step) << ',' << fmt_double(t.record) << ',' << t.pending << '\n';
  } else {
    os << "k,r_k,op,F_k,mu_k\n";
    for (const auto& t : trace)
      os << t.k << ',' << fmt_double(t.step) << ',' << to_string(t.op) << ',' << fmt_double(t.record) << ','
         << fmt_double(t.covered_volume) << '\n';
  }
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  return f;
}

inline int cmd_run(const RunConfig& c, std::ostream& out) {
  const ResolvedRun r = resolve(c);
  const Outcome o = execute(r, !c.trace.empty());
  const std::string text = result_json(r, o).dump(2) + "\n";
  if (c.output.empty()) {
    out << text;
  } else {
    auto f = open_output(c.output);
    f << text;
  }
  if (!c.trace.empty()) {
    auto f = open_output(c.trace);
    write_trace_csv(f, r.algorithm, o.result.trace);
  }
  return o.result.converged() ? 0 : 2;
}

/// Runs jobs on up to hardware_concurrency workers; results come back in input order.
template <typename T, typename Fn>
std::vector<T> run_ordered(std::size_t count, Fn job) {
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t begin = 0; begin < count; begin += workers) {
    std::vector<std::future<T>> batch;
    for (std::size_t i = begin; i < std::min(count, begin + workers); ++i)
      batch.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async, job, i));
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

inline int cmd_sweep(const RunConfig& c, const std::string& param, const std::vector<double>& values,
                     std::ostream& out) {
  if (values.empty()) throw UsageError("sweep requires a non-empty --values list");
  if (param != "eta" && param != "gamma") throw UsageError("--param must be eta or gamma");
  RunConfig probe = c;
  if (param == "eta") {
    if (c.algorithm != "cover") throw UsageError("sweeping eta requires --algorithm cover");
    probe.eta = values.front();
    probe.eta_ratio.reset();
  } else {
    if (c.algorithm != "bnb") throw UsageError("sweeping gamma requires --algorithm bnb");
    probe.gamma = values.front();
  }
  (void)resolve(probe);  // flag errors before any evaluation; value ranges are per row

  auto rows = run_ordered<std::string>(values.size(), [&](std::size_t i) {
    RunConfig cfg = c;
    if (param == "eta") {
      cfg.eta = values[i];
      cfg.eta_ratio.reset();
    } else {
      cfg.gamma = values[i];
    }
    std::ostringstream row;
    row << fmt_double(values[i]) << ',';
    try {
      const Outcome o = execute(resolve(cfg), false);
      row << fmt_double(o.result.best_value) << ',' << o.result.n_total << ',' << o.result.n_opt << ','
          << theta_csv(o.result) << ',' << to_string(o.result.status);
    } catch (const std::exception&) {
      row << ",,,,invalid_argument";
    }
    return row.str();
  });

  std::ostringstream csv;
  csv << "value,F,N_tot,N_opt,theta,status\n";
  for (const auto& row : rows) csv << row << '\n';
  if (c.output.empty()) {
    out << csv.str();
  } else {
    auto f = open_output(c.output);
    f << csv.str();
  }
  return 0;
}

inline json oracle_json(TestProblemId id, const OracleResult& r) {
  json j;
  j["problem"] = std::string(to_string(id));
  j["best_point"] = r.best_point;
  j["best_value"] = r.best_value;
  j["grid_resolution"] = r.grid_resolution;
  return j;
}

inline int cmd_oracle(const std::string& problem, std::size_t resolution, const std::string& output, std::ostream& out) {
  const auto id = parse_test_problem(problem);
  if (!id) throw UsageError("unknown problem: '" + problem + "' (expected f1, f2, f3 or f4)");
  Problem p = make_test_problem(*id);
  OracleResult r;
  try {
    r = grid_min(p, resolution);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = oracle_json(*id, r).dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    auto f = open_output(output);
    f << text;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
  TestProblemId problem;
  Algorithm algorithm;
  double eps;
  std::string variant;  // scheme for cover, gamma for bnb
  double paper_f;       // NaN where the published run did not finish
  std::size_t paper_ntot;
  bool check_ntot = false;
  bool expect_budget = false;
  bool extended = false;
};

inline std::vector<BenchRow> bench_rows() {
  using enum TestProblemId;
  const double none = std::nan("");
  const Algorithm C = Algorithm::cover;
  const Algorithm B = Algorithm::bnb;
  return {
      // covering method
      {f1, C, 0.5, "1a", -9.6944, 603993, true},
      {f1, C, 0.5, "1b", -9.7829, 1156717},
      {f1, C, 0.5, "2a", -9.8596, 105214288, false, false, true},
      {f1, C, 0.5, "2b", -9.8596, 102526635, false, false, true},
      {f1, C, 0.1, "1a", -9.9363, 102764377, false, false, true},
      {f1, C, 0.1, "1b", -9.9130, 226120051, false, false, true},
      {f2, C, 0.5, "1a", -12.4467, 121876},
      {f2, C, 0.5, "1b", -12.5738, 201996},
      {f2, C, 0.5, "2a", -12.4072, 398611},
      {f2, C, 0.5, "2b", -12.3823, 384541},
      {f2, C, 0.1, "1a", -12.6490, 20440621, false, false, true},
      {f2, C, 0.1, "1b", -12.6491, 21352428, false, false, true},
      {f3, C, 0.5, "1a", -4.8605, 411},
      {f3, C, 0.5, "1b", -4.8577, 435},
      {f3, C, 0.5, "2a", -4.8534, 438},
      {f3, C, 0.5, "2b", -4.8631, 361, true},
      {f3, C, 0.1, "1a", -4.8646, 35895},
      {f3, C, 0.1, "1b", -4.8646, 18802},
      {f3, C, 0.1, "2a", -4.8646, 35346},
      {f3, C, 0.1, "2b", -4.8646, 30151},
      {f4, C, 0.5, "1a", -1.8904, 471},
      {f4, C, 0.5, "1b", -1.8899, 446},
      {f4, C, 0.5, "2a", -1.8897, 578},
      {f4, C, 0.5, "2b", -1.8877, 557},
      {f4, C, 0.1, "1a", -1.8904, 8890},
      {f4, C, 0.1, "1b", -1.8820, 10928},
      {f4, C, 0.1, "2a", -1.8904, 35511},
      {f4, C, 0.1, "2b", -1.8904, 34965},
      // branch and bound, beta = 0.99
      {f1, B, 0.5, "0.01", -9.7119, 427, true},
      {f1, B, 0.5, "1", -9.7119, 725, true},
      {f1, B, 0.1, "0.01", -9.9415, 1175},
      {f1, B, 0.1, "1", -9.9415, 1337},
      {f2, B, 0.5, "0.01", -12.4428, 7613},
      {f2, B, 0.5, "1", -12.4301, 9191},
      {f2, B, 0.1, "0.01", none, 0, false, true},
      {f2, B, 0.1, "1", none, 0, false, true},
      {f3, B, 0.5, "0.08", -4.8638, 709},
      {f3, B, 0.5, "1", -4.8638, 1053},
      {f3, B, 0.1, "0.08", -4.8646, 17865, true},
      {f3, B, 0.1, "1", -4.8646, 18231},
      {f4, B, 0.5, "0.01", -1.8127, 325},
      {f4, B, 0.5, "1", -1.7217, 589},
      {f4, B, 0.1, "0.01", -1.8172, 761},
      {f4, B, 0.1, "1", -1.8045, 1277},
  };
}

inline RunConfig bench_config(const BenchRow& row) {
  RunConfig c;
  c.problem = std::string(to_string(row.problem));
  c.eps = row.eps;
  if (row.algorithm == Algorithm::cover) {
    c.algorithm = "cover";
    c.scheme = row.variant;
  } else {
    c.algorithm = "bnb";
    c.gamma = std::stod(row.variant);
  }
  return c;
}

struct BenchVerdict {
  bool pass = false;
  std::string reason;
};

inline BenchVerdict judge(const BenchRow& row, const RunResult& res, double oracle_min, double slack) {
  if (row.expect_budget) {
    if (res.status == RunStatus::budget_exceeded) return {true, ""};
    return {false, "expected budget_exceeded"};
  }
  if (!res.converged()) return {false, "did not converge"};
  if (res.best_value < oracle_min - slack) return {false, "F below oracle minimum"};
  if (res.best_value > oracle_min + row.eps) return {false, "F above oracle minimum + eps"};
  if (row.check_ntot) {
    const double ratio = static_cast<double>(res.n_total) / static_cast<double>(row.paper_ntot);
    if (ratio > 2.0 || ratio < 0.5) return {false, "N_tot outside factor 2"};
  }
  return {true, ""};
}

inline int cmd_bench(bool extended, const std::string& csv_path, std::size_t resolution, std::ostream& out) {
  std::ofstream csv = open_output(csv_path);

  std::map<TestProblemId, std::pair<double, double>> oracle;  // min, slack
  for (TestProblemId id : all_test_problems) {
    Problem p = make_test_problem(id);
    oracle[id] = {grid_min(p, resolution).best_value, grid_slack(p, resolution)};
  }

  std::vector<BenchRow> rows;
  for (const auto& r : bench_rows())
    if (extended || !r.extended) rows.push_back(r);

  struct Measured {
    RunResult result;
    double wall;
  };
  auto measured = run_ordered<Measured>(rows.size(), [&](std::size_t i) {
    const Outcome o = execute(resolve(bench_config(rows[i])), false);
    return Measured{o.result, o.wall_seconds};
  });

  csv << "problem,algorithm,eps,variant,paper_F,F,paper_N_tot,N_tot,N_opt,theta,status,oracle_min,pass\n";
  out << std::left << std::setw(4) << "fn" << std::setw(6) << "alg" << std::setw(5) << "eps" << std::setw(6) << "var"
      << std::right << std::setw(10) << "paper F" << std::setw(10) << "F" << std::setw(12) << "paper N" << std::setw(12)
      << "N_tot" << "  result\n";
  bool all_pass = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BenchRow& row = rows[i];
    const RunResult& res = measured[i].result;
    const auto [omin, slack] = oracle.at(row.problem);
    const BenchVerdict v = judge(row, res, omin, slack);
    all_pass = all_pass && v.pass;
    const char* alg = row.algorithm == Algorithm::cover ? "cover" : "bnb";
    out << std::left << std::setw(4) << to_string(row.problem) << std::setw(6) << alg << std::setw(5) << row.eps
        << std::setw(6) << row.variant << std::right << std::fixed << std::setprecision(4) << std::setw(10)
        << row.paper_f << std::setw(10) << res.best_value << std::setw(12)
        << (row.paper_ntot ? std::to_string(row.paper_ntot) : std::string("-")) << std::setw(12) << res.n_total << "  "
        << (v.pass ? "PASS" : "FAIL") << (v.reason.empty() ? "" : " (" + v.reason + ")") << '\n';
    out.unsetf(std::ios::floatfield);
    csv << to_string(row.problem) << ',' << alg << ',' << fmt_double(row.eps) << ',' << row.variant << ','
        << (std::isnan(row.paper_f) ? std::string() : fmt_double(row.paper_f)) << ',' << fmt_double(res.best_value)
        << ',' << row.paper_ntot << ',' << res.n_total << ',' << res.n_opt << ',' << theta_csv(res) << ','
        << to_string(res.status) << ',' << fmt_double(omin) << ',' << (v.pass ? "pass" : "fail") << '\n';
  }
  return all_pass ? 0 : 3;
}

// ---------------------------------------------------------------------------
// argument handling

/// Expands `--config PATH` (key = value lines, '#' comments) into flags placed
/// before the remaining arguments, so explicit flags take precedence.
inline std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::vector<std::string> from_file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config requires a path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
      continue;
    }
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config file '" + path + "'");
    std::string line;
    while (std::getline(f, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto eq = line.find('=');
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r\"");
        const auto e = s.find_last_not_of(" \t\r\"");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      if (eq == std::string::npos) {
        if (!trim(line).empty() && trim(line).front() != '[') throw UsageError("bad config line: " + line);
        continue;
      }
      std::string key = trim(line.substr(0, eq));
      std::replace(key.begin(), key.end(), '_', '-');
      from_file.push_back("--" + key);
      from_file.push_back(trim(line.substr(eq + 1)));
    }
  }
  if (from_file.empty() || out.empty()) return out;
  // Subcommand name stays first.
  std::vector<std::string> merged{out.front()};
  merged.insert(merged.end(), from_file.begin(), from_file.end());
  merged.insert(merged.end(), out.begin() + 1, out.end());
  return merged;
}

inline void add_run_options(CLI::App* app, RunConfig& c) {
  app->add_option("--problem", c.problem, "Test problem: f1, f2, f3, f4")->required();
  app->add_option("--algorithm", c.algorithm, "cover or bnb")->required();
  app->add_option("--eps", c.eps, "Target accuracy");
  app->add_option("--eta", c.eta, "Modulus parameter for cover (default: eta-ratio * eps)");
  app->add_option("--eta-ratio", c.eta_ratio, "eta/eps for cover (default per problem)");
  app->add_option("--scheme", c.scheme, "cover traversal: 1a, 1b, 2a, 2b, recursive");
  app->add_option("--beta", c.beta, "bnb beta in (0,1)");
  app->add_option("--gamma", c.gamma, "bnb gamma in (0,1]");
  app->add_option("--max-boxes", c.max_boxes, "cover box budget (0 = unlimited)");
  app->add_option("--max-seconds", c.max_seconds, "cover time budget (0 = unlimited)");
  app->add_option("--max-iterations", c.max_iterations, "bnb iteration cap");
  app->add_option("--modulus-scale", c.modulus_scale, "Multiply L(eta) by this factor (norm conversion)");
  app->add_option("--output,-o", c.output, "Write result here instead of stdout");
}

/// Entry point; returns the process exit status.
inline int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Global minimisation of Vanderbei-continuous functions by non-uniform coverings", "nucover"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  RunConfig run_cfg;
  auto* run = app.add_subcommand("run", "Solve one problem, print JSON result");
  run->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  add_run_options(run, run_cfg);
  run->add_option("--trace", run_cfg.trace, "Write per-iteration CSV trace");

  RunConfig sweep_cfg;
  std::string sweep_param;
  std::vector<double> sweep_values;
  auto* sweep = app.add_subcommand("sweep", "Run one configuration per parameter value, print CSV");
  sweep->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  add_run_options(sweep, sweep_cfg);
  sweep->add_option("--param", sweep_param, "eta (cover) or gamma (bnb)")->required();
  sweep->add_option("--values", sweep_values, "Comma-separated values")->delimiter(',')->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  bool extended = false;
  std::string bench_csv = "bench.csv";
  std::size_t bench_resolution = 4001;
  auto* bench = app.add_subcommand("bench", "Reproduce the published result tables");
  bench->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  bench->add_flag("--extended", extended, "Include the long covering-method rows");
  bench->add_option("--csv", bench_csv, "CSV output path");
  bench->add_option("--resolution", bench_resolution, "Oracle grid points per axis");

  std::string oracle_problem;
  std::size_t oracle_resolution = 4001;
  std::string oracle_output;
  auto* oracle = app.add_subcommand("oracle", "Brute-force grid minimum, print JSON");
  oracle->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  oracle->add_option("--problem", oracle_problem, "Test problem")->required();
  oracle->add_option("--resolution", oracle_resolution, "Grid points per axis");
  oracle->add_option("--output,-o", oracle_output, "Write JSON here instead of stdout");

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*run) return cmd_run(run_cfg, out);
    if (*sweep) return cmd_sweep(sweep_cfg, sweep_param, sweep_values, out);
    if (*bench) return cmd_bench(extended, bench_csv, bench_resolution, out);
    if (*oracle) return cmd_oracle(oracle_problem, oracle_resolution, oracle_output, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace nucover::cli
