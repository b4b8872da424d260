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

#ifndef HARDYLAB_HARDY_REPORT_HPP
#define HARDYLAB_HARDY_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hardylab/hardy/quadrature.hpp"

namespace hardylab::hardy {

using Json = nlohmann::ordered_json;

struct SampleDiag {
  double coord = 0.0;  // primary reduced coordinate of the node
  double delta = 0.0;
  double weight = 0.0;
  double lhs_integrand = 0.0;
  double rhs_integrand = 0.0;
};

struct HardyReport {
  std::string inequality;
  std::string domain;
  std::string profile;
  double p = 2.0;
  Band band;
  std::string scheme;
  int resolution = 0;
  std::uint64_t seed = 0;

  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double min_pointwise_weight = 0.0;
  double constant_used = 0.0;
  bool lhs_converged = true;
  bool rhs_converged = true;
  bool passed = false;

  std::vector<SampleDiag> samples;
  std::vector<std::pair<std::string, double>> truncation;
  std::string note;

  bool converged() const { return lhs_converged && rhs_converged; }
};

Json to_json(const HardyReport& report);

/// Top-level report file: {version, command, config echo, environment,
/// results[], passed}.
Json report_envelope(const std::string& command, const Json& config,
                     std::uint64_t seed, Json results, bool passed);

/// Deterministic serialization: fixed key order, fixed float formatting.
std::string dump_report(const Json& report);

/// RFC 4180 row assembly: CRLF terminators, '.' decimal separator, quoting
/// only where needed.
std::string csv_row(const std::vector<std::string>& fields);
std::string csv_number(double v);

}  // namespace hardylab::hardy

#endif  // HARDYLAB_HARDY_REPORT_HPP
