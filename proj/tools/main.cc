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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

namespace {

using diamond::cli::Format;
using diamond::cli::RunConfig;

void AddFormat(CLI::App* cmd, RunConfig& config) {
  const std::map<std::string, Format> formats{
      {"json", Format::kJson}, {"csv", Format::kCsv}, {"plain", Format::kPlain}};
  cmd->add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void AddBudget(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--budget", config.budget,
                  "Work-unit guard for enumerations (default: $DIAMOND_BUDGET or 1e9)");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Exact generating functions, oracles and congruences for d-fold partition diamonds"};
  app.require_subcommand(1);

  auto* coeffs = app.add_subcommand("coeffs", "Print coefficients of r_d, s_d or D_{d,n}");
  coeffs->add_option("--series", config.series, "rd, sd or ddn")
      ->check(CLI::IsMember({"rd", "sd", "ddn"}));
  coeffs->add_option("--d", config.d, "Diamond width d");
  coeffs->add_option("--n", config.n, "Diamond length (ddn only)");
  coeffs->add_option("--N", config.order, "Truncation order");
  coeffs->add_option("--mod", config.mod, "Reduce coefficients modulo m")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
  AddFormat(coeffs, config);

  auto* identities = app.add_subcommand("identities", "Run the exact identity suite");
  identities->add_option("--only", config.only,
                         "eulerian, fd, pentagonal, jacobi, euler-factor, mersmann, omega, crude");
  identities->add_option("--d-max", config.d_max, "Largest d for the Eulerian check");
  identities->add_option("--instances", config.instances, "Random Omega instances");
  identities->add_option("--seed", config.seed, "Seed for the random Omega instances");
  auto* identities_order =
      identities->add_option("--N", config.order, "Truncation order for series identities");
  AddFormat(identities, config);
  AddBudget(identities, config);

  auto* oracle = app.add_subcommand("oracle", "Compare closed forms with brute-force enumeration");
  oracle->add_option("--kind", config.series, "rd, sd or ddn")
      ->check(CLI::IsMember({"rd", "sd", "ddn"}));
  oracle->add_option("--d", config.d, "Diamond width d");
  oracle->add_option("--n", config.n, "Diamond length (ddn only)");
  oracle->add_option("--N", config.order, "Truncation order");
  AddFormat(oracle, config);
  AddBudget(oracle, config);

  auto* verify = app.add_subcommand("verify", "Verify builtin congruence claims");
  verify->add_flag("--all", config.all, "Every builtin claim");
  verify->add_option("--claim", config.claim, "A single builtin claim by name");
  verify->add_option("--custom", config.custom,
                     "An ad hoc claim a,b,M,r,m: s_{ak+b}(Mn+r) == 0 mod m");
  verify->add_option("--k-max", config.k_max, "Largest k of the d = a k + b family");
  verify->add_option("--n-max", config.n_max, "Largest n of the progression M n + r");
  AddFormat(verify, config);
  AddBudget(verify, config);

  auto* scan = app.add_subcommand("scan", "Search a series mod m for vanishing progressions");
  scan->add_option("--series", config.series, "rd, sd or ddn")
      ->check(CLI::IsMember({"rd", "sd", "ddn"}));
  scan->add_option("--d", config.d, "Diamond width d");
  scan->add_option("--n", config.n, "Diamond length (ddn only)");
  scan->add_option("--m", config.m, "Modulus")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
  scan->add_option("--M-max", config.max_modulus, "Largest progression modulus");
  scan->add_option("--N", config.order, "Truncation order");
  scan->add_option("--min-support", config.min_support, "Zero coefficients required");
  AddFormat(scan, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : diamond::cli::kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  config.order_given = identities_order->count() > 0;
  return diamond::cli::Run(config, std::cout, std::cerr);
}
