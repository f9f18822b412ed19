// Copyright 2026 The divlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// divlab command line: classify, sweep, probe, dpi, stein, counterexample, verify.
//
// Exit codes: 0 success, 1 usage or config error, 2 mathematical
// contradiction, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "divlab/divlab.hpp"

namespace {

using divlab::InvalidArgument;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitContradiction = 2;
constexpr int kExitNumerical = 3;

constexpr const char* kSweepSchema = "divlab.sweep/1";
constexpr const char* kSteinSchema = "divlab.stein/1";

//-------------------------------------------------------------------------
// Config validation
//-------------------------------------------------------------------------

void require_fields(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw InvalidArgument("config: '" + where + "' must be an object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key))
      throw InvalidArgument("config: unknown field '" + (where.empty() ? key : where + "." + key) + "'");
}

double get_number(const json& j, const std::string& where, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw InvalidArgument("config: field '" + where + "." + key + "' must be a number");
  return j[key].get<double>();
}

long get_int(const json& j, const std::string& where, const char* key, long min) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long>() < min)
    throw InvalidArgument("config: field '" + where + "." + key + "' must be an integer >= " + std::to_string(min));
  return j[key].get<long>();
}

void check_schema(const json& j, const char* expected) {
  if (!j.contains("schema") || !j["schema"].is_string())
    throw InvalidArgument("config: missing string field 'schema' (expected \"" + std::string(expected) + "\")");
  if (j["schema"].get<std::string>() != expected)
    throw InvalidArgument("config: field 'schema' is \"" + j["schema"].get<std::string>() + "\", expected \"" +
                          expected + "\"");
}

divlab::GridAxis parse_axis(const json& j, const std::string& where) {
  require_fields(j, where, {"start", "stop", "steps"});
  divlab::GridAxis a;
  a.start = get_number(j, where, "start");
  a.stop = j.contains("stop") ? get_number(j, where, "stop") : a.start;
  a.steps = int(get_int(j, where, "steps", 1));
  return a;
}

struct SweepJob {
  divlab::SweepGrid grid;
  divlab::SweepConfig cfg;
  std::string csv_path;
  std::string witness_dir;
};

SweepJob parse_sweep_config(const json& j) {
  require_fields(j, "", {"schema", "grid", "probe", "output"});
  check_schema(j, kSweepSchema);
  SweepJob job;
  if (!j.contains("grid")) throw InvalidArgument("config: missing field 'grid'");
  const json& g = j["grid"];
  require_fields(g, "grid", {"mode", "p", "q", "s", "alpha", "z", "points"});
  const std::string mode = g.value("mode", "pqs");
  if (mode == "pqs") {
    for (const char* axis : {"p", "q", "s"})
      if (!g.contains(axis) && !g.contains("points"))
        throw InvalidArgument(std::string("config: missing field 'grid.") + axis + "'");
    if (g.contains("p")) {
      job.grid.p = parse_axis(g["p"], "grid.p");
      job.grid.q = parse_axis(g.at("q"), "grid.q");
      job.grid.s = parse_axis(g.at("s"), "grid.s");
    } else {
      job.grid.p.steps = job.grid.q.steps = job.grid.s.steps = 0;
    }
  } else if (mode == "alpha_z") {
    job.grid.alpha_z = true;
    if (!g.contains("alpha") || !g.contains("z")) throw InvalidArgument("config: alpha_z grid needs 'grid.alpha' and 'grid.z'");
    job.grid.alpha = parse_axis(g["alpha"], "grid.alpha");
    job.grid.z = parse_axis(g["z"], "grid.z");
  } else {
    throw InvalidArgument("config: field 'grid.mode' must be \"pqs\" or \"alpha_z\"");
  }
  if (g.contains("points")) {
    if (!g["points"].is_array()) throw InvalidArgument("config: field 'grid.points' must be an array");
    for (const auto& pt : g["points"]) {
      if (!pt.is_array() || pt.size() != 3 || !pt[0].is_number() || !pt[1].is_number() || !pt[2].is_number())
        throw InvalidArgument("config: entries of 'grid.points' must be [p, q, s]");
      job.grid.points.push_back({pt[0].get<double>(), pt[1].get<double>(), pt[2].get<double>()});
    }
  }
  if (!j.contains("probe")) throw InvalidArgument("config: missing field 'probe'");
  const json& p = j["probe"];
  require_fields(p, "probe", {"dims", "samples", "seed", "spectrum", "random_k", "workers"});
  if (!p.contains("seed") || !p["seed"].is_number_unsigned())
    throw InvalidArgument("config: field 'probe.seed' must be a non-negative integer (every run needs a master seed)");
  job.cfg.seed = p["seed"].get<std::uint64_t>();
  job.cfg.samples = get_int(p, "probe", "samples", 1);
  if (p.contains("dims")) {
    if (!p["dims"].is_array() || p["dims"].empty()) throw InvalidArgument("config: field 'probe.dims' must be a nonempty array");
    job.cfg.dims.clear();
    for (const auto& d : p["dims"]) {
      if (!d.is_number_integer()) throw InvalidArgument("config: entries of 'probe.dims' must be integers");
      job.cfg.dims.push_back(d.get<int>());
    }
  }
  if (p.contains("spectrum")) {
    const auto& s = p["spectrum"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number())
      throw InvalidArgument("config: field 'probe.spectrum' must be [lo, hi]");
    job.cfg.spectrum_lo = s[0].get<double>();
    job.cfg.spectrum_hi = s[1].get<double>();
  }
  if (p.contains("random_k")) {
    if (!p["random_k"].is_boolean()) throw InvalidArgument("config: field 'probe.random_k' must be a boolean");
    job.cfg.random_k = p["random_k"].get<bool>();
  }
  if (p.contains("workers")) job.cfg.workers = unsigned(get_int(p, "probe", "workers", 1));
  if (j.contains("output")) {
    const json& o = j["output"];
    require_fields(o, "output", {"csv", "witness_dir"});
    if (o.contains("csv")) job.csv_path = o["csv"].get<std::string>();
    if (o.contains("witness_dir")) job.witness_dir = o["witness_dir"].get<std::string>();
  }
  return job;
}

std::vector<double> parse_vector(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("--") + what + ": '" + item + "' is not a number");
    }
  }
  if (out.empty()) throw InvalidArgument(std::string("--") + what + ": empty list");
  return out;
}

/// "10:500:10" -> 10, 20, ..., 500; "7" -> 7; "1,2,5" -> 1, 2, 5.
std::vector<int> parse_n_range(const std::string& text) {
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    int a = 0, b = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::stringstream ss(text);
    if (!(ss >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step < 1 || a < 1 || b < a || !ss.eof())
      throw InvalidArgument("--N: expected start:stop:step with 1 <= start <= stop and step >= 1");
    for (int n = a; n <= b; n += step) out.push_back(n);
    return out;
  }
  for (double x : parse_vector(text, "N")) {
    if (x < 1 || x != std::floor(x)) throw InvalidArgument("--N: entries must be positive integers");
    out.push_back(int(x));
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    divlab::write_text_file(path, text);
  }
}

//-------------------------------------------------------------------------
// Commands
//-------------------------------------------------------------------------

int cmd_classify(double p, double q, double s, bool upsilon) {
  const divlab::RegionLabel label = upsilon ? divlab::classify_upsilon(p, s) : divlab::classify(p, q, s);
  std::cout << divlab::to_string(label.kind) << " " << label.citation << "\n";
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_override, int workers_override) {
  SweepJob job = parse_sweep_config(divlab::read_json_file(config_path));
  if (!out_override.empty()) job.csv_path = out_override;
  if (workers_override > 0) job.cfg.workers = unsigned(workers_override);
  std::vector<divlab::SweepRow> rows;
  try {
    rows = divlab::sweep(job.grid, job.cfg, job.witness_dir.empty() ? "." : job.witness_dir);
  } catch (const divlab::ContradictionError& e) {
    std::cerr << "contradiction: " << e.what() << "\n";
    std::cerr << "witness: " << e.witness_path() << "\n";
    return kExitContradiction;
  }
  emit(divlab::sweep_csv(rows), job.csv_path);
  if (!job.csv_path.empty() && job.csv_path != "-")
    divlab::write_text_file(job.csv_path + ".meta.json", divlab::sweep_metadata(job.cfg, rows).dump(2) + "\n");
  return kExitOk;
}

int cmd_probe(double p, double q, double s, int dim, long samples, std::uint64_t seed, const std::string& direction,
              double theta, bool identity_k, const std::string& out) {
  const divlab::ParamPoint pt{p, q, s};
  const divlab::RegionLabel label = divlab::classify(pt);
  const divlab::Direction dir =
      direction.empty() ? divlab::probe_direction(label) : divlab::direction_from_string(direction);
  divlab::ProbeConfig cfg;
  cfg.dim = dim;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.theta = theta;
  const divlab::ProbeReport rep = divlab::probe_joint(divlab::psi_functional(pt, !identity_k), dir, cfg);
  json j = rep.to_json();
  j["label"] = divlab::to_string(label.kind);
  j["citation"] = label.citation;
  emit(j.dump(2) + "\n", out);
  return label.known() && rep.violations > 0 ? kExitContradiction : kExitOk;
}

int cmd_dpi(double alpha, double z, int dim, int channels, int pairs, std::uint64_t seed, const std::string& out) {
  divlab::DpiConfig cfg{dim, channels, pairs, seed};
  const divlab::ProbeReport rep = divlab::probe_dpi(alpha, z, cfg);
  json j = rep.to_json();
  const divlab::ParamPoint pt = divlab::ParamPoint::from_alpha_z(alpha, z);
  const divlab::RegionLabel label = divlab::classify(pt);
  j["slice_label"] = divlab::to_string(label.kind);
  emit(j.dump(2) + "\n", out);
  return label.known() && rep.violations > 0 ? kExitContradiction : kExitOk;
}

int cmd_stein(std::string r_text, std::string s_text, double eps, std::string n_text, const std::string& config_path,
              const std::string& out) {
  if (!config_path.empty()) {
    const json j = divlab::read_json_file(config_path);
    require_fields(j, "", {"schema", "r", "s", "eps", "N"});
    check_schema(j, kSteinSchema);
    for (const char* key : {"r", "s", "N"})
      if (!j.contains(key) || !j[key].is_string())
        throw InvalidArgument(std::string("config: field '") + key + "' must be a string");
    r_text = j["r"].get<std::string>();
    s_text = j["s"].get<std::string>();
    n_text = j["N"].get<std::string>();
    eps = get_number(j, "", "eps");
  }
  if (r_text.empty() || s_text.empty() || n_text.empty()) throw InvalidArgument("stein: --r, --s and --N are required");
  const divlab::ClassicalDistribution r(parse_vector(r_text, "r")), s(parse_vector(s_text, "s"));
  const double d = divlab::classical_relative_entropy(r.probs(), s.probs()).value;
  std::string csv = "N,epsilon,log_beta,rate,bound_low,bound_high\n";
  for (const auto& res : divlab::error_exponent_curve(r, s, eps, parse_n_range(n_text))) {
    csv += std::to_string(res.N) + "," + divlab::format_double(eps) + "," + divlab::format_double(res.log_beta) + "," +
           divlab::format_double(res.rate) + "," + divlab::format_double(d) + "," +
           divlab::format_double(d / (1.0 - eps)) + "\n";
  }
  emit(csv, out);
  return kExitOk;
}

int cmd_counterexample(double p, double q, double s, bool upsilon, const std::string& direction,
                       const std::string& witness_dir, const std::string& out) {
  std::vector<divlab::Direction> dirs;
  if (direction == "both") dirs = {divlab::Direction::Convex, divlab::Direction::Concave};
  else dirs = {divlab::direction_from_string(direction)};
  json j;
  const divlab::RegionLabel label = upsilon ? divlab::classify_upsilon(p, s) : divlab::classify(p, q, s);
  j["label"] = divlab::to_string(label.kind);
  j["citation"] = label.citation;
  j["reports"] = json::array();
  for (auto d : dirs) {
    const divlab::ProbeReport rep =
        upsilon ? divlab::counterexample_upsilon(p, s, d) : divlab::counterexample_psi({p, q, s}, d);
    json r = rep.to_json();
    if (!witness_dir.empty() && rep.certified)
      r["witness_path"] = divlab::write_content_addressed(witness_dir, "witness", rep.witness);
    j["reports"].push_back(std::move(r));
  }
  emit(j.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  const auto results = divlab::run_identity_suite(suite, seed);
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::printf("%-18s %ld/%ld checks  worst %s  %s\n", r.name.c_str(), r.checks - r.failures, r.checks,
                divlab::format_double(r.worst).c_str(), r.passed() ? "PASS" : "FAIL");
    passed += r.passed() ? 1 : 0;
  }
  std::printf("%zu/%zu identity suites passed\n", passed, results.size());
  return passed == results.size() ? kExitOk : kExitContradiction;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divlab: trace-functional convexity and quantum divergence laboratory"};
  app.require_subcommand(1);

  double p = 0, q = 0, s = 1, alpha = 0, z = 1, eps = 0.05, theta = 0.5;
  int dim = 3, channels = 100, pairs = 100, workers = 0;
  long samples = 500;
  std::uint64_t seed = 0;
  bool upsilon = false, identity_k = false;
  std::string config, out, direction, cx_direction = "both", witness_dir, r_text, s_text, n_text, suite;

  auto* classify = app.add_subcommand("classify", "Region label of (p, q, s), or of (p, s) with --upsilon");
  classify->add_option("--p", p, "exponent p")->required();
  classify->add_option("--q", q, "exponent q (ignored with --upsilon)");
  classify->add_option("--s", s, "exponent s")->required();
  classify->add_flag("--upsilon", upsilon, "classify Upsilon_{p,s} instead of Psi_{p,q,s}");

  auto* sweep = app.add_subcommand("sweep", "Classify and probe a grid; CSV output");
  sweep->add_option("--config", config, "sweep config (JSON)")->required();
  sweep->add_option("--out", out, "CSV path (overrides output.csv; '-' for stdout)");
  sweep->add_option("--workers", workers, "worker threads (output is independent of this)");

  auto* probe = app.add_subcommand("probe", "Midpoint probe of Psi_{p,q,s} at one point; JSON report");
  probe->add_option("--p", p)->required();
  probe->add_option("--q", q)->required();
  probe->add_option("--s", s)->required();
  probe->add_option("--dim", dim)->check(CLI::Range(1, 8));
  probe->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  probe->add_option("--seed", seed, "seed (a sweep row's seed is listed in the .meta.json file)")->required();
  probe->add_option("--direction", direction, "convex | concave (default: from the region label)");
  probe->add_option("--theta", theta, "mixing weight")->check(CLI::Range(0.0, 1.0));
  probe->add_flag("--identity-k", identity_k, "use K = I instead of a Ginibre K");
  probe->add_option("--out", out);

  auto* dpi = app.add_subcommand("dpi", "Data processing probe of D_{alpha,z}; JSON report");
  dpi->add_option("--alpha", alpha)->required();
  dpi->add_option("--z", z)->required();
  dpi->add_option("--dim", dim)->check(CLI::Range(1, 8));
  dpi->add_option("--channels", channels)->check(CLI::NonNegativeNumber);
  dpi->add_option("--pairs", pairs)->check(CLI::NonNegativeNumber);
  dpi->add_option("--seed", seed)->required();
  dpi->add_option("--out", out);

  auto* stein = app.add_subcommand("stein", "Classical Stein exponents; CSV output");
  stein->add_option("--r", r_text, "null distribution, e.g. 0.9,0.1");
  stein->add_option("--s", s_text, "alternative distribution");
  stein->add_option("--eps", eps, "type-I error bound");
  stein->add_option("--N", n_text, "start:stop:step or a comma list");
  stein->add_option("--config", config, "stein config (JSON)");
  stein->add_option("--out", out);

  auto* counter = app.add_subcommand("counterexample", "Grid search for a certified midpoint violation");
  counter->add_option("--p", p)->required();
  counter->add_option("--q", q);
  counter->add_option("--s", s)->required();
  counter->add_flag("--upsilon", upsilon, "search Upsilon_{p,s}");
  counter->add_option("--direction", cx_direction, "convex | concave | both");
  counter->add_option("--witness-dir", witness_dir, "write certified witnesses here");
  counter->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->add_option("suite", suite, "symmetries | variational | lieb-thirring | uhlmann | opconv | integral-rep")
      ->required();
  verify->add_option("--seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    divlab::tolerances();
    if (*classify) return cmd_classify(p, q, s, upsilon);
    if (*sweep) return cmd_sweep(config, out, workers);
    if (*probe) return cmd_probe(p, q, s, dim, samples, seed, direction, theta, identity_k, out);
    if (*dpi) return cmd_dpi(alpha, z, dim, channels, pairs, seed, out);
    if (*stein) return cmd_stein(r_text, s_text, eps, n_text, config, out);
    if (*counter) return cmd_counterexample(p, q, s, upsilon, cx_direction, witness_dir, out);
    if (*verify) return cmd_verify(suite, seed);
  } catch (const divlab::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const divlab::ContradictionError& e) {
    std::cerr << "contradiction: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const divlab::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
