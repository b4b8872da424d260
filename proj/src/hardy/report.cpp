// Copyright 2026 the hardylab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hardylab/hardy/report.hpp"

#include <cstdio>

#include "hardylab/simd/simd.hpp"

namespace hardylab::hardy {

namespace {

// Shortest round-trip representation keeps reports byte-stable across runs.
Json num(double v) { return Json(v); }

}  // namespace

Json to_json(const HardyReport& r) {
  Json j;
  j["inequality"] = r.inequality;
  j["domain"] = r.domain;
  j["profile"] = r.profile;
  j["p"] = num(r.p);
  j["band"] = Json{{"a", num(r.band.a)},
                   {"b", num(r.band.b)},
                   {"side", band_side_name(r.band.side)}};
  j["quadrature"] = Json{{"scheme", r.scheme},
                         {"resolution", r.resolution},
                         {"seed", r.seed}};
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["ratio"] = num(r.ratio);
  j["min_pointwise_weight"] = num(r.min_pointwise_weight);
  j["constant_used"] = num(r.constant_used);
  j["lhs_converged"] = r.lhs_converged;
  j["rhs_converged"] = r.rhs_converged;
  j["passed"] = r.passed;
  Json samples = Json::array();
  for (const SampleDiag& s : r.samples) {
    samples.push_back(Json{{"coord", num(s.coord)},
                           {"delta", num(s.delta)},
                           {"weight", num(s.weight)},
                           {"lhs_integrand", num(s.lhs_integrand)},
                           {"rhs_integrand", num(s.rhs_integrand)}});
  }
  j["samples"] = std::move(samples);
  Json trunc = Json::object();
  for (const auto& [k, v] : r.truncation) trunc[k] = num(v);
  j["truncation"] = std::move(trunc);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json report_envelope(const std::string& command, const Json& config,
                     std::uint64_t seed, Json results, bool passed) {
  Json j;
  j["version"] = "hardy-lab/1";
  j["command"] = command;
  j["config"] = config;
  j["environment"] = Json{
      {"tolerances",
       Json{{"quad_rel", tol::quad_rel},
            {"ratio_slack", tol::ratio_slack},
            {"algebra", tol::algebra},
            {"frak_invariance", tol::frak_invariance},
            {"ridge_eps", tol::ridge_eps}}},
      {"seed", seed},
      {"simd", simd::level_name(simd::active_level())},
  };
  j["results"] = std::move(results);
  j["passed"] = passed;
  return j;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

std::string csv_number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) row += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\r\n") != std::string::npos) {
      row += '"';
      for (char c : f) {
        if (c == '"') row += '"';
        row += c;
      }
      row += '"';
    } else {
      row += f;
    }
  }
  row += "\r\n";
  return row;
}

}  // namespace hardylab::hardy
