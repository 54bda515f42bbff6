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

// Acceptance run: one PASS/FAIL line per criterion, then INFO lines for
// companion suites. Exit status 1 if any criterion fails.

#include "petzlab/harness/campaign.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

using namespace petzlab;
using namespace petzlab::harness;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Run
{
  CampaignResult result;
  double         seconds = 0.0;
};

Run run(const std::vector<std::string> &names, int trials = 0, std::vector<int> dims = {}, int workers = 1)
{
  CampaignConfig c;
  c.suites  = names;
  c.trials  = trials;
  c.dims    = std::move(dims);
  c.seed    = kSeed;
  c.workers = workers;
  const auto t0 = std::chrono::steady_clock::now();
  Run        r{run_campaign(c), 0.0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string describe(const SuiteSummary &s)
{
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s %d/%d pass, worst gap %.3e", s.suite.c_str(), s.passes, s.trials, s.worst_gap);
  return buf;
}

std::string describe(const Run &r)
{
  std::string out;
  for (const auto &s : r.result.summaries)
  {
    out += (out.empty() ? "" : "; ") + describe(s);
  }
  return out;
}

bool all_ok(const Run &r, int expected_per_suite)
{
  for (const auto &s : r.result.summaries)
  {
    if (s.trials != expected_per_suite || s.failures != 0)
    {
      return false;
    }
  }
  return !r.result.summaries.empty();
}

int failures = 0;

void verdict(int id, bool ok, const std::string &what, const std::string &detail)
{
  std::printf("criterion %2d %s  %s | %s\n", id, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += ok ? 0 : 1;
}

void info(const std::string &what, const std::string &detail)
{
  std::printf("info          %s | %s\n", what.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string csv_of(const CampaignResult &res)
{
  std::ostringstream os;
  write_csv(os, res.records);
  return os.str();
}

}  // namespace

int main()
{
  {
    const Run r  = run({"dpi"}, 1000, {2, 3, 4});
    const bool ok = all_ok(r, 1000) && r.seconds <= 30.0;
    verdict(1, ok, "data processing, 1000 trials, gap >= -1e-8, <= 30 s",
            describe(r) + ", " + std::to_string(r.seconds) + " s");
  }
  {
    const Run r = run({"improved_dpi"}, 500, {2, 3});
    int       grid_checked = 0;
    for (const auto &rec : r.result.records)
    {
      grid_checked += rec.desc.dim == 2 ? 1 : 0;
    }
    verdict(2, all_ok(r, 500) && grid_checked >= 100,
            "improved DPI, 500 trials, gap >= -1e-6, grid agreement 1e-4 at d = 2",
            describe(r) + ", grid-checked " + std::to_string(grid_checked));
  }
  {
    const Run r = run({"saturation"}, 100);
    verdict(3, all_ok(r, 100), "commutative saturation, 100 trials, |gap| <= 1e-6", describe(r));
  }
  {
    const Run r = run({"recovery"}, 1000, {2, 3, 4});
    verdict(4, all_ok(r, 1000), "reference recovery, 1000 trials, trace distance <= 1e-8", describe(r));
  }
  {
    const Run r = run({"chain"}, 500);
    verdict(5, all_ok(r, 500), "S >= S_meas >= -2 log F, 500 trials, slack >= -1e-6", describe(r));
  }
  {
    const Run r = run({"renyi"}, 300);
    verdict(6, all_ok(r, 300), "Renyi bounds s in {0.5, 0.7, 0.9}, 300 trials, ordering within 1e-8", describe(r));
  }
  {
    const Run r = run({"multi_power", "alt", "exp_product", "multi_power_trace", "exp_product_trace"}, 300);
    verdict(7, all_ok(r, 300), "multi-trace bounds, 300 trials each, tracial forms within 1e-9", describe(r));
  }
  {
    const Run r = run({"hirschman_exp", "hirschman", "lp_interp"}, 200);
    verdict(8, all_ok(r, 200), "interpolation: exponential equality 1e-9, 200 families per regime", describe(r));
  }
  {
    const Run a = run({"entropy_limit_oracle"}, 100, {2, 3, 4});
    const Run b = run({"renyi_routes", "lp_oracle", "series_oracle"}, 100);
    verdict(9, all_ok(a, 100) && all_ok(b, 100), "oracle agreement", describe(a) + "; " + describe(b));
  }
  {
    const Run a = run({"vnorm", "gamma_strip"}, 50);
    const Run b = run({"gamma_bound", "petz_duality"}, 200);
    verdict(10, all_ok(a, 50) && all_ok(b, 200), "proof-device bounds", describe(a) + "; " + describe(b));
  }
  {
    const std::vector<std::string> mix{"dpi", "improved_dpi", "multi_power", "alt", "lp_interp", "gamma_bound", "saturation"};
    const std::string              one = csv_of(run(mix, 20).result);
    const std::string              two = csv_of(run(mix, 20).result);
    const std::string              four = csv_of(run(mix, 20, {}, 4).result);
    verdict(11, one == two && one == four, "byte-identical CSV across runs and workers {1, 4}",
            std::to_string(one.size()) + " bytes, runs " + (one == two ? "equal" : "differ") + ", workers " +
                (one == four ? "equal" : "differ"));
  }

  info("improved DPI, reversed argument order", describe(run({"improved_dpi_reversed"}, 500)));
  info("saturation, deterministic coarse-graining", describe(run({"saturation_deterministic"}, 100)));
  info("multi-factor bound with a^{1+2it}", describe(run({"multi_power_scaled"}, 300)));
  info("Araki-Lieb-Thirring, general vectors", describe(run({"alt_general"}, 300)));
  info("Lp continuity under mixing", describe(run({"lp_mixing"}, 100)));
  info("entropy difference identity, product formula",
       describe(run({"entropy_identity"}, 200)) + "; " + describe(run({"trotter"}, 60)));
  {
    std::ifstream in(PETZLAB_TEST_DATA "/multi_power_counterexample.json");
    const json    j = json::parse(in);
    std::vector<HermitianMatrix> as;
    for (const auto &a : j.at("a"))
    {
      as.emplace_back(matrix_from_json(a));
    }
    const DensityMatrix  psi(matrix_from_json(j.at("psi")));
    const double         r    = j.at("r").get<double>();
    const QuadratureRule rule = beta_quadrature(r / 2.0, 32);
    const double g1 = check_multi_power(as, psi, r, j.at("p").get<double>(), rule, 1e-6, 1.0).gap;
    const double g2 = check_multi_power(as, psi, r, j.at("p").get<double>(), rule, 1e-6, 2.0).gap;
    char         buf[160];
    std::snprintf(buf, sizeof buf, "gap %.6e with a^{1+it}, %.6e with a^{1+2it}", g1, g2);
    info("multi-factor bound, frozen d = 3 instance", buf);
  }

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
