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

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace petzlab {

/// One evaluation of an inequality lhs >= rhs. `lhs` is always the side that
/// is claimed to be larger; equality checks report lhs = 0 and
/// rhs = |difference|.
struct CheckReport {
  std::string suite;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool vacuous = false;
  std::string reason; ///< why a pass is vacuous, or why a check failed
  std::string note;   ///< free-form secondary diagnostics
  std::uint64_t seed = 0;
  std::string instance; ///< serialized inputs (JSON) when attached by the harness
};

/// lhs >= rhs - tol. An infinite lhs makes the inequality trivially true.
inline CheckReport make_report(std::string suite, double lhs, double rhs, double tol) {
  CheckReport r;
  r.suite = std::move(suite);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  if (std::isinf(lhs) && lhs > 0.0) {
    r.gap = std::numeric_limits<double>::infinity();
    r.pass = true;
    r.vacuous = true;
    r.reason = "support";
    return r;
  }
  r.gap = lhs - rhs;
  r.pass = std::isfinite(r.gap) ? r.gap >= -tol : false;
  if (!std::isfinite(r.gap)) r.reason = "non-finite gap";
  return r;
}

/// |x - y| <= tol, reported as 0 >= |x - y|.
inline CheckReport make_equality_report(std::string suite, double x, double y, double tol) {
  const double d = (std::isinf(x) && std::isinf(y) && (x > 0) == (y > 0)) ? 0.0 : std::abs(x - y);
  return make_report(std::move(suite), 0.0, d, tol);
}

/// Folds `other` into `acc`, keeping the worse gap and combining pass flags.
inline void merge_report(CheckReport& acc, const CheckReport& other) {
  const bool keep_other = !other.pass || (acc.pass && other.gap < acc.gap);
  const bool pass = acc.pass && other.pass;
  if (keep_other) {
    const std::string suite = acc.suite;
    const std::string note = acc.note;
    acc = other;
    acc.suite = suite;
    if (!note.empty()) acc.note = note + (other.note.empty() ? "" : "; " + other.note);
  }
  acc.pass = pass;
}

} // namespace petzlab
