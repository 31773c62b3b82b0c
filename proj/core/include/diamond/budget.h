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

#ifndef DIAMOND_BUDGET_H_
#define DIAMOND_BUDGET_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diamond {

// Thrown when a brute-force computation would exceed its work-unit guard.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

// Reads DIAMOND_BUDGET from the environment, falling back to kDefaultBudget.
std::uint64_t BudgetFromEnvironment();

// Counts work units for an enumeration and aborts once the limit is passed.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t limit = BudgetFromEnvironment())
      : limit_(limit) {}

  void Charge(std::uint64_t units = 1) {
    used_ += units;
    if (used_ > limit_) Exceeded();
  }

  // Refuses up front when an estimate is already over the limit.
  void Require(std::uint64_t estimate, const std::string& what) const;

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  [[noreturn]] void Exceeded() const;

  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace diamond

#endif  // DIAMOND_BUDGET_H_
