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

#include "petzlab/channels.hpp"
#include "petzlab/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace petzlab::harness {

using json = nlohmann::json;

// Doubles are written by nlohmann::json with round-trip precision, so every
// record below reads back bit-exactly.

inline json matrix_to_json(const Mat& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline Mat matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw std::invalid_argument("matrix_from_json: data length does not match shape");
  Mat m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j2 = 0; j2 < cols; ++j2, ++k) m(i, j2) = cplx(data[k].at(0).get<double>(), data[k].at(1).get<double>());
  return m;
}

/// {d_in, d_out, kraus: [matrix...]} with row-major complex pairs.
inline json channel_to_json(const KrausChannel& t) {
  json ks = json::array();
  for (const auto& k : t.kraus()) ks.push_back(matrix_to_json(k));
  return {{"d_in", t.d_in()}, {"d_out", t.d_out()}, {"kraus", std::move(ks)}};
}

inline KrausChannel channel_from_json(const json& j) {
  std::vector<Mat> ks;
  for (const auto& k : j.at("kraus")) ks.push_back(matrix_from_json(k));
  KrausChannel t(std::move(ks));
  if (t.d_in() != j.at("d_in").get<Eigen::Index>() || t.d_out() != j.at("d_out").get<Eigen::Index>())
    throw std::invalid_argument("channel_from_json: dimensions do not match Kraus operators");
  return t;
}

/// Full-precision decimal form used in CSV rows.
inline std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline json report_to_json(const CheckReport& r) {
  auto jnum = [](double x) -> json {
    if (std::isfinite(x)) return x;
    return num(x);
  };
  return {{"suite", r.suite}, {"lhs", jnum(r.lhs)},   {"rhs", jnum(r.rhs)},       {"gap", jnum(r.gap)},
          {"tol", r.tol},     {"pass", r.pass},       {"vacuous", r.vacuous},     {"reason", r.reason},
          {"note", r.note},   {"seed", r.seed}};
}

} // namespace petzlab::harness
