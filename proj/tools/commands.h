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

#ifndef DIAMOND_TOOLS_COMMANDS_H_
#define DIAMOND_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace diamond::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 0xD1A30D5;
inline constexpr unsigned kMaxWidth = 64;

enum class Format { kJson, kCsv, kPlain };

struct RunConfig {
  std::string command;

  // coeffs / scan: "rd", "sd" or "ddn"; oracle: the same names as --kind.
  std::string series = "sd";
  unsigned d = 1;
  std::size_t n = 1;
  std::size_t order = 100;
  bool order_given = false;
  std::optional<std::uint64_t> mod;

  // scan
  std::uint64_t m = 5;
  std::uint64_t max_modulus = 10;
  std::size_t min_support = 10;

  // verify
  bool all = false;
  std::string claim;
  std::string custom;  // "a,b,M,r,m"
  unsigned k_max = 2;
  std::uint64_t n_max = 40;

  // identities
  std::string only;
  unsigned d_max = 12;
  std::size_t instances = 200;

  Format format = Format::kJson;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::uint64_t> budget;
};

// Each command writes its result to `out` and diagnostics to `err`, and
// returns the process exit code.
int RunCoeffs(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunIdentities(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunOracle(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunVerify(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunScan(const RunConfig& config, std::ostream& out, std::ostream& err);

// Dispatches on config.command and maps library exceptions to exit codes.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace diamond::cli

#endif  // DIAMOND_TOOLS_COMMANDS_H_
