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

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "mrcsim/core/limits.h"
#include "mrcsim/core/report.h"
#include "mrcsim/core/sequential.h"

namespace mrcsim {

inline constexpr const char* kVersion = "0.1.0";

// Parses "c=1/2,const=4,space=4,time=4,keys=4,rounds=4,beta=1,rexp=1,enforce".
// `const` sets every constant; later items override earlier ones. Throws
// std::invalid_argument on unknown items.
ResourceLimits ParseLimitsFlag(std::string_view text);

nlohmann::json LimitsToJson(const ResourceLimits& limits);
nlohmann::json ViolationToJson(const ResourceViolation& v);
nlohmann::json ReportToJson(const ResourceReport& report);
nlohmann::json AccountingToJson(const SequentialAccounting& accounting);

// Lower-case hex SHA-256 of the bytes.
std::string Sha256Hex(std::string_view bytes);

}  // namespace mrcsim
