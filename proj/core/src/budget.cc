// Copyright 2026 The Diamond Authors
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

#include "diamond/budget.h"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace diamond {

std::uint64_t BudgetFromEnvironment() {
  const char* env = std::getenv("DIAMOND_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  std::uint64_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw std::invalid_argument("DIAMOND_BUDGET must be a positive integer, got '" +
                                std::string(env) + "'");
  }
  return value;
}

void WorkBudget::Require(std::uint64_t estimate, const std::string& what) const {
  if (estimate > limit_) {
    throw BudgetExceeded(what + ": estimated " + std::to_string(estimate) +
                         " work units exceeds budget of " + std::to_string(limit_));
  }
}

void WorkBudget::Exceeded() const {
  throw BudgetExceeded("enumeration exceeded budget of " + std::to_string(limit_) +
                       " work units");
}

}  // namespace diamond
