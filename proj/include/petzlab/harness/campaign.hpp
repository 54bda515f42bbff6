//------------------------------------------------------------------------------
//
//   Copyright 2026 The petzlab Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#pragma once

#include "petzlab/harness/suites.hpp"

#include <array>
#include <atomic>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace petzlab::harness {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CampaignConfig {
  std::vector<std::string> suites;          ///< empty: every registered suite
  std::vector<int> dims;                    ///< empty: per-suite defaults
  int trials = 0;                           ///< 0: per-suite defaults
  std::uint64_t seed = 20260101;
  std::map<std::string, double> tolerances; ///< per-suite overrides
  std::optional<double> tol;                ///< global override, beats per-suite values
  int n_nodes = kDefaultNodesPerPanel;
  double t_max = kDefaultTMax;
  std::string out_csv;
  std::string failures_path; ///< jsonl of failing instances; empty: <out_csv>.failures.jsonl
  std::string plot_script;
  int workers = 1;
};

/// Reads the structured-text (JSON) config. Unknown keys are rejected.
inline CampaignConfig config_from_json(const json& j) {
  static const std::vector<std::string> known{"suites", "dims",  "trials", "seed",   "tolerances",
                                              "tol",    "quadrature", "output", "workers"};
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw ConfigError("unknown config key '" + it.key() + "'");
  CampaignConfig c;
  try {
    if (j.contains("suites")) c.suites = j["suites"].get<std::vector<std::string>>();
    if (j.contains("dims")) c.dims = j["dims"].get<std::vector<int>>();
    if (j.contains("trials")) c.trials = j["trials"].get<int>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tolerances")) c.tolerances = j["tolerances"].get<std::map<std::string, double>>();
    if (j.contains("tol")) c.tol = j["tol"].get<double>();
    if (j.contains("quadrature")) {
      const auto& q = j["quadrature"];
      if (q.contains("n_nodes")) c.n_nodes = q["n_nodes"].get<int>();
      if (q.contains("t_max")) c.t_max = q["t_max"].get<double>();
    }
    if (j.contains("output")) {
      const auto& o = j["output"];
      if (o.contains("csv")) c.out_csv = o["csv"].get<std::string>();
      if (o.contains("failures")) c.failures_path = o["failures"].get<std::string>();
      if (o.contains("plot_script")) c.plot_script = o["plot_script"].get<std::string>();
    }
    if (j.contains("workers")) c.workers = j["workers"].get<int>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

inline CampaignConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  return config_from_json(j);
}

inline void validate(const CampaignConfig& c) {
  if (c.trials < 0) throw ConfigError("trials must be >= 1 (0 selects suite defaults)");
  if (c.workers < 1) throw ConfigError("workers must be >= 1");
  if (c.n_nodes < 8) throw ConfigError("quadrature.n_nodes must be >= 8");
  if (!(c.t_max > 0.0)) throw ConfigError("quadrature.t_max must be positive");
  for (int d : c.dims)
    if (d < 2 || d > 8) throw ConfigError("dims must lie in [2, 8]");
  for (const auto& s : c.suites)
    if (!find_suite(s)) throw ConfigError("unknown suite '" + s + "'");
  for (const auto& [k, v] : c.tolerances) {
    if (!find_suite(k)) throw ConfigError("tolerance for unknown suite '" + k + "'");
    if (!(v >= 0.0)) throw ConfigError("tolerances must be non-negative");
  }
  if (c.tol && !(*c.tol >= 0.0)) throw ConfigError("tol must be non-negative");
}

/// FNV-1a, stable across platforms.
inline std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

/// Per-trial seed from (campaign seed, suite, trial) only.
inline std::uint64_t trial_seed(std::uint64_t seed, const std::string& suite, int trial) {
  const std::uint64_t h = name_hash(suite);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

inline double suite_tol(const CampaignConfig& c, const Suite& s) {
  if (c.tol) return *c.tol;
  const auto it = c.tolerances.find(s.name);
  return it != c.tolerances.end() ? it->second : s.default_tol;
}

inline std::vector<int> suite_dims(const CampaignConfig& c, const Suite& s) {
  if (c.dims.empty()) return s.default_dims;
  std::vector<int> out;
  for (int d : c.dims)
    if (d >= s.min_dim && d <= s.max_dim) out.push_back(d);
  return out;
}

/// Regeneration key of one trial.
struct InstanceDescriptor {
  std::string suite;
  int trial = 0;
  int dim = 2;
  std::uint64_t seed = 0;
  double tol = 0.0;
  int n_nodes = kDefaultNodesPerPanel;
  double t_max = kDefaultTMax;

  json to_json() const {
    return {{"suite", suite}, {"trial", trial}, {"dim", dim},        {"seed", seed},
            {"tol", tol},     {"n_nodes", n_nodes}, {"t_max", t_max}};
  }
  static InstanceDescriptor from_json(const json& j) {
    InstanceDescriptor d;
    d.suite = j.at("suite").get<std::string>();
    d.trial = j.at("trial").get<int>();
    d.dim = j.at("dim").get<int>();
    d.seed = j.at("seed").get<std::uint64_t>();
    d.tol = j.at("tol").get<double>();
    d.n_nodes = j.at("n_nodes").get<int>();
    d.t_max = j.at("t_max").get<double>();
    return d;
  }
};

struct TrialRecord {
  InstanceDescriptor desc;
  std::string generator;
  TrialOutcome outcome;
  std::string error; ///< exception text when the check threw
};

/// Runs one trial; exceptions become failing rows.
inline TrialRecord run_trial(const Suite& s, const InstanceDescriptor& d, const SuiteEnv& env) {
  TrialRecord rec{d, s.generator, {}, {}};
  try {
    rec.outcome = s.run(TrialSpec{d.dim, d.seed, d.tol}, env);
  } catch (const std::exception& e) {
    rec.error = e.what();
    rec.outcome.report = make_report(s.name, 0.0, 0.0, d.tol);
    rec.outcome.report.gap = std::numeric_limits<double>::quiet_NaN();
    rec.outcome.report.pass = false;
    rec.outcome.report.reason = std::string("exception: ") + e.what();
  }
  rec.outcome.report.suite = s.name;
  rec.outcome.report.seed = d.seed;
  return rec;
}

inline TrialRecord replay(const InstanceDescriptor& d) {
  const Suite* s = find_suite(d.suite);
  if (!s) throw ConfigError("unknown suite '" + d.suite + "'");
  return run_trial(*s, d, SuiteEnv(d.n_nodes, d.t_max));
}

struct SuiteSummary {
  std::string suite;
  int trials = 0;
  int passes = 0;
  int vacuous = 0;
  int failures = 0;
  double worst_gap = std::numeric_limits<double>::infinity();
  std::optional<InstanceDescriptor> worst;
};

struct CampaignResult {
  std::vector<TrialRecord> records; ///< suite order, then trial order
  std::vector<SuiteSummary> summaries;
  bool all_pass() const {
    for (const auto& s : summaries)
      if (s.failures > 0) return false;
    return true;
  }
};

inline std::string instance_ref(const TrialRecord& r) { return r.desc.suite + "#" + std::to_string(r.desc.trial); }

inline void write_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
  os << "suite,trial,dim,lhs,rhs,gap,pass,vacuous,seed,instance_ref\n";
  for (const auto& r : records) {
    const auto& rep = r.outcome.report;
    os << rep.suite << ',' << r.desc.trial << ',' << r.desc.dim << ',' << num(rep.lhs) << ',' << num(rep.rhs) << ','
       << num(rep.gap) << ',' << (rep.pass ? 1 : 0) << ',' << (rep.vacuous ? 1 : 0) << ',' << r.desc.seed << ','
       << instance_ref(r) << '\n';
  }
}

inline json failure_record(const TrialRecord& r) {
  return {{"descriptor", r.desc.to_json()},
          {"generator", r.generator},
          {"instance_ref", instance_ref(r)},
          {"report", report_to_json(r.outcome.report)},
          {"payload", r.outcome.instance}};
}

/// Python script drawing per-suite gap histograms from the campaign CSV.
inline std::string plot_script_text(const std::string& csv_path) {
  std::ostringstream os;
  os << "#!/usr/bin/env python3\n"
     << "\"\"\"Gap histograms per suite from a petzlab campaign CSV.\"\"\"\n"
     << "import sys\n"
     << "import numpy as np\n"
     << "import pandas as pd\n"
     << "import matplotlib\n"
     << "matplotlib.use(\"Agg\")\n"
     << "import matplotlib.pyplot as plt\n\n"
     << "path = sys.argv[1] if len(sys.argv) > 1 else " << json(csv_path).dump() << "\n"
     << "df = pd.read_csv(path)\n"
     << "df = df[np.isfinite(df['gap'])]\n"
     << "suites = sorted(df['suite'].unique())\n"
     << "cols = 4\n"
     << "rows = max(1, (len(suites) + cols - 1) // cols)\n"
     << "fig, axes = plt.subplots(rows, cols, figsize=(4 * cols, 3 * rows), squeeze=False)\n"
     << "for ax, name in zip(axes.flat, suites):\n"
     << "    g = df[df['suite'] == name]['gap']\n"
     << "    ax.hist(g, bins=40)\n"
     << "    ax.set_title(name)\n"
     << "    ax.set_xlabel('gap (nats)')\n"
     << "for ax in list(axes.flat)[len(suites):]:\n"
     << "    ax.axis('off')\n"
     << "fig.tight_layout()\n"
     << "out = path.rsplit('.', 1)[0] + '_gaps.png'\n"
     << "fig.savefig(out, dpi=120)\n"
     << "print(out)\n";
  return os.str();
}

inline CampaignResult run_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  const SuiteEnv env(cfg.n_nodes, cfg.t_max);
  std::vector<const Suite*> chosen;
  if (cfg.suites.empty())
    for (const auto& s : suites()) chosen.push_back(&s);
  else
    for (const auto& n : cfg.suites) chosen.push_back(find_suite(n));

  std::vector<InstanceDescriptor> plan;
  std::vector<const Suite*> plan_suite;
  for (const Suite* s : chosen) {
    const auto dims = suite_dims(cfg, *s);
    if (dims.empty()) continue;
    const int n = cfg.trials > 0 ? cfg.trials : s->default_trials;
    for (int t = 0; t < n; ++t) {
      InstanceDescriptor d;
      d.suite = s->name;
      d.trial = t;
      d.dim = dims[static_cast<std::size_t>(t) % dims.size()];
      d.seed = trial_seed(cfg.seed, s->name, t);
      d.tol = suite_tol(cfg, *s);
      d.n_nodes = cfg.n_nodes;
      d.t_max = cfg.t_max;
      plan.push_back(d);
      plan_suite.push_back(s);
    }
  }

  CampaignResult res;
  res.records.resize(plan.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < plan.size(); i = next++) res.records[i] = run_trial(*plan_suite[i], plan[i], env);
  };
  const int nw = std::max(1, std::min<int>(cfg.workers, static_cast<int>(plan.size())));
  if (nw == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (const auto& r : res.records) {
    if (res.summaries.empty() || res.summaries.back().suite != r.desc.suite) {
      SuiteSummary fresh;
      fresh.suite = r.desc.suite;
      res.summaries.push_back(std::move(fresh));
    }
    auto& s = res.summaries.back();
    const auto& rep = r.outcome.report;
    ++s.trials;
    if (rep.pass) ++s.passes;
    else ++s.failures;
    if (rep.vacuous) ++s.vacuous;
    const double g = std::isnan(rep.gap) ? -std::numeric_limits<double>::infinity() : rep.gap;
    if (!s.worst || g < s.worst_gap) {
      s.worst_gap = g;
      s.worst = r.desc;
    }
  }
  return res;
}

/// Writes the CSV, failures file and plot script named in `cfg`.
inline void write_outputs(const CampaignConfig& cfg, const CampaignResult& res) {
  if (!cfg.out_csv.empty()) {
    std::ofstream os(cfg.out_csv, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write CSV to " + cfg.out_csv);
    write_csv(os, res.records);
    if (!os) throw std::runtime_error("I/O error while writing " + cfg.out_csv);
  }
  const std::string fpath =
      !cfg.failures_path.empty() ? cfg.failures_path : (cfg.out_csv.empty() ? "" : cfg.out_csv + ".failures.jsonl");
  if (!fpath.empty()) {
    std::ofstream os(fpath, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write failures to " + fpath);
    for (const auto& r : res.records)
      if (!r.outcome.report.pass) os << failure_record(r).dump() << '\n';
  }
  if (!cfg.plot_script.empty()) {
    std::ofstream os(cfg.plot_script, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write plot script to " + cfg.plot_script);
    os << plot_script_text(cfg.out_csv.empty() ? "campaign.csv" : cfg.out_csv);
  }
}

inline void print_summary(std::ostream& os, const CampaignResult& res) {
  char line[256];
  std::snprintf(line, sizeof line, "%-26s %7s %7s %7s %7s  %-24s %s\n", "suite", "trials", "pass", "vacuous", "fail",
                "worst_gap", "worst_instance");
  os << line;
  for (const auto& s : res.summaries) {
    std::snprintf(line, sizeof line, "%-26s %7d %7d %7d %7d  %-24s ", s.suite.c_str(), s.trials, s.passes,
                  s.vacuous, s.failures, num(s.worst_gap).c_str());
    os << line << (s.worst ? s.worst->to_json().dump() : "-") << '\n';
  }
}

} // namespace petzlab::harness
