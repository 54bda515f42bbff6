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

// petzlab run     randomized campaign, CSV + failures jsonl
// petzlab list    registered suites
// petzlab replay  re-run failing instances from a failures file or a seed
//
// Exit codes: 0 all pass, 1 violation found, 2 usage or configuration error.

#include "petzlab/harness/campaign.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

using namespace petzlab::harness;

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct RunArgs {
  std::string config;
  std::string suite;
  std::string dim;
  int trials = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double tol = -1.0;
  std::string out;
  std::string failures;
  std::string plot_script;
  int workers = 0;
  int n_nodes = 0;
  double t_max = 0.0;
};

int do_run(const RunArgs& a, bool seed_given) {
  CampaignConfig cfg;
  if (!a.config.empty()) cfg = load_config(a.config);
  if (!a.suite.empty()) cfg.suites = split(a.suite);
  if (!a.dim.empty()) {
    cfg.dims.clear();
    for (const auto& d : split(a.dim)) {
      try {
        cfg.dims.push_back(std::stoi(d));
      } catch (const std::exception&) {
        throw ConfigError("--dim: '" + d + "' is not an integer");
      }
    }
  }
  if (a.trials >= 0) cfg.trials = a.trials;
  if (seed_given) cfg.seed = a.seed;
  if (a.tol >= 0.0) cfg.tol = a.tol;
  if (!a.out.empty()) cfg.out_csv = a.out;
  if (!a.failures.empty()) cfg.failures_path = a.failures;
  if (!a.plot_script.empty()) cfg.plot_script = a.plot_script;
  if (a.workers > 0) cfg.workers = a.workers;
  if (a.n_nodes > 0) cfg.n_nodes = a.n_nodes;
  if (a.t_max > 0.0) cfg.t_max = a.t_max;
  validate(cfg);

  const auto t0 = std::chrono::steady_clock::now();
  const CampaignResult res = run_campaign(cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_outputs(cfg, res);
  print_summary(std::cout, res);
  std::cout << "trials " << res.records.size() << ", elapsed " << secs << " s, workers " << cfg.workers << '\n';
  if (!cfg.out_csv.empty()) std::cout << "csv " << cfg.out_csv << '\n';
  return res.all_pass() ? kExitOk : kExitViolation;
}

int do_list() {
  for (const auto& s : suites()) {
    std::cout << s.name << "\n    " << s.description << "\n    generator " << s.generator << ", dims ";
    for (std::size_t i = 0; i < s.default_dims.size(); ++i) std::cout << (i ? "," : "") << s.default_dims[i];
    std::cout << " (allowed " << s.min_dim << ".." << s.max_dim << "), trials " << s.default_trials << ", tol "
              << num(s.default_tol) << '\n';
  }
  return kExitOk;
}

/// Re-runs every descriptor and compares the gap with the recorded one.
int do_replay(const std::string& failures, int index, const std::string& suite, int dim, std::uint64_t seed,
              double tol, bool by_seed) {
  std::vector<std::pair<InstanceDescriptor, std::string>> todo;
  if (by_seed) {
    const Suite* s = find_suite(suite);
    if (!s) throw ConfigError("unknown suite '" + suite + "'");
    InstanceDescriptor d;
    d.suite = suite;
    d.dim = dim;
    d.seed = seed;
    d.tol = tol >= 0.0 ? tol : s->default_tol;
    todo.emplace_back(d, "");
  } else {
    std::ifstream in(failures);
    if (!in) throw ConfigError("cannot open failures file " + failures);
    std::string line;
    int k = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (index < 0 || k == index) {
        const json j = json::parse(line);
        const auto& g = j.at("report").at("gap");
        todo.emplace_back(InstanceDescriptor::from_json(j.at("descriptor")),
                          g.is_string() ? g.get<std::string>() : num(g.get<double>()));
      }
      ++k;
    }
    if (todo.empty()) throw ConfigError("no matching records in " + failures);
  }
  bool reproduced = true;
  bool any_fail = false;
  for (const auto& [d, recorded] : todo) {
    const TrialRecord r = replay(d);
    const auto& rep = r.outcome.report;
    std::cout << d.to_json().dump() << "\n  lhs " << num(rep.lhs) << " rhs " << num(rep.rhs) << " gap " << num(rep.gap)
              << (rep.pass ? " PASS" : " FAIL");
    if (!rep.reason.empty()) std::cout << " (" << rep.reason << ")";
    std::cout << '\n';
    if (!rep.note.empty()) std::cout << "  note " << rep.note << '\n';
    if (!recorded.empty()) {
      const bool same = recorded == num(rep.gap);
      std::cout << "  recorded gap " << recorded << (same ? " reproduced" : " MISMATCH") << '\n';
      reproduced = reproduced && same;
    }
    any_fail = any_fail || !rep.pass;
  }
  if (!reproduced) return kExitViolation;
  return by_seed && any_fail ? kExitViolation : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"petzlab: randomized checks of recovery-map entropy inequalities"};
  app.require_subcommand(1);

  RunArgs ra;
  auto* run = app.add_subcommand("run", "run a randomized campaign");
  run->add_option("--config", ra.config, "JSON campaign config");
  run->add_option("--suite", ra.suite, "comma-separated suite names");
  run->add_option("--dim", ra.dim, "comma-separated dimensions");
  run->add_option("--trials", ra.trials, "trials per suite (0: suite defaults)");
  auto* seed_opt = run->add_option("--seed", ra.seed, "campaign seed");
  run->add_option("--tol", ra.tol, "tolerance override for every suite");
  run->add_option("--out", ra.out, "CSV output path");
  run->add_option("--failures", ra.failures, "failing-instance jsonl path");
  run->add_option("--plot-script", ra.plot_script, "write a Python script that plots gap histograms");
  run->add_option("--workers", ra.workers, "worker threads");
  run->add_option("--n-nodes", ra.n_nodes, "Gauss-Legendre nodes per quadrature panel");
  run->add_option("--t-max", ra.t_max, "quadrature truncation");

  app.add_subcommand("list", "list registered suites");

  std::string failures;
  int index = -1;
  std::string rsuite;
  int rdim = 2;
  std::uint64_t rseed = 0;
  double rtol = -1.0;
  auto* rep = app.add_subcommand("replay", "re-run recorded or seeded instances");
  rep->add_option("--failures", failures, "failures jsonl written by run");
  rep->add_option("--index", index, "record index within the failures file (default: all)");
  rep->add_option("--suite", rsuite, "suite name (seeded replay)");
  rep->add_option("--dim", rdim, "dimension (seeded replay)");
  auto* rseed_opt = rep->add_option("--seed", rseed, "trial seed from the CSV (seeded replay)");
  rep->add_option("--tol", rtol, "tolerance (seeded replay)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return do_run(ra, seed_opt->count() > 0);
    if (app.got_subcommand("list")) return do_list();
    if (*rep) {
      const bool by_seed = rseed_opt->count() > 0;
      if (by_seed == !failures.empty() || (by_seed && rsuite.empty())) {
        std::cerr << "replay: give either --failures FILE or --suite NAME --dim D --seed S\n";
        return kExitUsage;
      }
      return do_replay(failures, index, rsuite, rdim, rseed, rtol, by_seed);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
