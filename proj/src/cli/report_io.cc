// Copyright 2026 The mrcsim Authors
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

#include "mrcsim/cli/report_io.h"

#include <openssl/evp.h>

#include <stdexcept>

namespace mrcsim {

using nlohmann::json;

ResourceLimits ParseLimitsFlag(std::string_view text) {
  ResourceLimits limits;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    if (item == "enforce") {
      limits.enforcement = Enforcement::kEnforce;
      continue;
    }
    if (item == "record-only") {
      limits.enforcement = Enforcement::kRecordOnly;
      continue;
    }
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("limits item '" + std::string(item) + "' is not name=value");
    }
    std::string_view name = item.substr(0, eq);
    std::string_view value = item.substr(eq + 1);
    if (name == "c") {
      limits.space_exponent = Rational::Parse(value);
    } else if (name == "const") {
      Rational r = Rational::Parse(value);
      limits.space_constant = limits.time_constant = limits.keys_constant = limits.round_constant = r;
    } else if (name == "space") {
      limits.space_constant = Rational::Parse(value);
    } else if (name == "time") {
      limits.time_constant = Rational::Parse(value);
    } else if (name == "keys") {
      limits.keys_constant = Rational::Parse(value);
    } else if (name == "rounds") {
      limits.round_constant = Rational::Parse(value);
    } else if (name == "beta") {
      limits.time_bound.exponent = ParseDec(value);
    } else if (name == "rexp") {
      limits.round_bound.exponent = ParseDec(value);
    } else {
      throw std::invalid_argument("unknown limits item '" + std::string(name) + "'");
    }
  }
  limits.Validate();
  return limits;
}

json LimitsToJson(const ResourceLimits& l) {
  return {{"c", l.space_exponent.ToString()},
          {"space_constant", l.space_constant.ToString()},
          {"time_constant", l.time_constant.ToString()},
          {"time_bound", {{"coefficient", l.time_bound.coefficient}, {"exponent", l.time_bound.exponent}}},
          {"keys_constant", l.keys_constant.ToString()},
          {"round_constant", l.round_constant.ToString()},
          {"round_bound", {{"coefficient", l.round_bound.coefficient}, {"exponent", l.round_bound.exponent}}},
          {"enforcement", l.enforced() ? "enforce" : "record-only"}};
}

json ViolationToJson(const ResourceViolation& v) {
  return {{"bound", ToString(v.bound)},   {"round", v.round},       {"phase", ToString(v.phase)},
          {"processor", v.processor},     {"measured", v.measured}, {"limit", v.limit},
          {"description", v.Describe()}};
}

json ReportToJson(const ResourceReport& report) {
  json rounds = json::array();
  for (const auto& m : report.rounds) {
    rounds.push_back({{"round", m.round},
                      {"mapper_invocations", m.mapper_invocations},
                      {"reducer_invocations", m.reducer_invocations},
                      {"distinct_keys_per_mapper_invocation", m.max_keys_per_mapper},
                      {"total_distinct_keys", m.total_distinct_keys},
                      {"total_pairs", m.total_pairs},
                      {"output_pairs", m.output_pairs},
                      {"max_group_size", m.max_group_size},
                      {"max_reducer_input_bytes", m.max_reducer_input_bytes},
                      {"max_working_space_bytes", m.max_working_space_bytes},
                      {"max_space_charge_bytes", m.max_space_charge_bytes},
                      {"max_steps_per_invocation", m.max_steps_per_invocation},
                      {"mapper_steps", m.mapper_steps},
                      {"reducer_steps", m.reducer_steps},
                      {"pair_count_flagged", m.pair_count_flagged != 0}});
  }
  json recorded = json::array();
  for (const auto& v : report.recorded) recorded.push_back(ViolationToJson(v));
  json out = {{"rounds_executed", report.rounds_executed},
              {"rounds", rounds},
              {"simulated_sequential_time", report.simulated_sequential_time},
              {"verdict", ToString(report.verdict)},
              {"recorded_violations", recorded},
              {"recorded_violation_total", report.recorded_total}};
  out["violation"] = report.violation ? ViolationToJson(*report.violation) : json(nullptr);
  return out;
}

json AccountingToJson(const SequentialAccounting& a) {
  json rounds = json::array();
  for (const auto& r : a.rounds) {
    rounds.push_back({{"round", r.round},
                      {"mapper_steps", r.mapper_steps},
                      {"reducer_steps", r.reducer_steps},
                      {"total_pairs", r.total_pairs},
                      {"shuffle_charge", r.shuffle_charge},
                      {"setup_charge", r.setup_charge}});
  }
  return {{"rounds", rounds},
          {"mapper_steps", a.mapper_steps},
          {"reducer_steps", a.reducer_steps},
          {"shuffle_charge", a.shuffle_charge},
          {"setup_charge", a.setup_charge},
          {"total", a.total},
          {"beta", a.beta},
          {"envelope_constant", a.envelope_constant},
          {"envelope", a.envelope},
          {"limits_respected", a.limits_respected},
          {"ratio", a.ratio()}};
}

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace mrcsim
