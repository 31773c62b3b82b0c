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

#include "commands.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diamond/budget.h"
#include "diamond/congruence.h"
#include "diamond/genfun.h"
#include "diamond/json.h"
#include "diamond/omega.h"
#include "diamond/oracle.h"
#include "diamond/polynomial.h"
#include "diamond/series.h"

namespace diamond::cli {

namespace {

using nlohmann::json;

// Raised for flag combinations the parser cannot reject on its own.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

WorkBudget MakeBudget(const RunConfig& config) {
  return config.budget ? WorkBudget(*config.budget) : WorkBudget();
}

void RequireWidth(unsigned d) {
  if (d < 1 || d > kMaxWidth) {
    throw UsageError("--d must lie in [1, " + std::to_string(kMaxWidth) + "]");
  }
}

void RequireOrder(std::size_t order) {
  if (order < 1) throw UsageError("--N must be positive");
}

std::string CsvQuoted(const std::string& s) { return "\"" + s + "\""; }

void PrintSeries(const TruncatedSeries& s, Format format, std::ostream& out) {
  switch (format) {
    case Format::kJson:
      out << ToJson(s).dump() << "\n";
      break;
    case Format::kCsv:
      out << "index,coefficient\n";
      for (std::size_t i = 0; i < s.order(); ++i) {
        out << i << "," << CsvQuoted(s[i].get_str()) << "\n";
      }
      break;
    case Format::kPlain: {
      const auto coeffs = s.coefficients();
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out << (i ? "," : "") << coeffs[i].get_str();
      }
      out << "\n";
      break;
    }
  }
}

TruncatedSeries BuildSeries(const RunConfig& config) {
  RequireWidth(config.d);
  RequireOrder(config.order);
  if (config.series == "rd") return RdSeries(config.d, config.order);
  if (config.series == "sd") return SdSeries(config.d, config.order);
  if (config.series == "ddn") {
    if (config.n < 1) throw UsageError("--n must be >= 1 for ddn");
    return DdnSeriesClosed(config.d, config.n, config.order);
  }
  throw UsageError("unknown series '" + config.series + "' (expected rd, sd or ddn)");
}

struct CheckResult {
  std::string name;
  bool passed = true;
  json detail = json::object();
};

CheckResult CheckEulerian(const RunConfig& config) {
  CheckResult r{"eulerian"};
  json failures = json::array();
  for (unsigned d = 1; d <= config.d_max; ++d) {
    const UnivariatePolynomial a = EulerianPolynomial(d);
    bool ok = FdAtW1(d) == a;
    if (d <= 10) {
      BigInt sum = 0, factorial = 1;
      for (unsigned i = 2; i <= d; ++i) factorial *= i;
      const auto& c = a.coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) {
        sum += c[i];
        ok = ok && c[i] > 0 && c[i] == c[c.size() - 1 - i];
      }
      ok = ok && sum == factorial;
    }
    if (!ok) failures.push_back(d);
  }
  r.passed = failures.empty();
  r.detail = json{{"d_max", config.d_max}, {"failures", failures}};
  return r;
}

CheckResult CheckFdDegree(const RunConfig& config) {
  CheckResult r{"fd"};
  json failures = json::array();
  for (unsigned d = 1; d <= std::min(config.d_max, 8u); ++d) {
    if (FdPolynomial(d).DegreeInQ0() != static_cast<long>(d) - 1) failures.push_back(d);
  }
  r.passed = failures.empty();
  r.detail = json{{"failures", failures}};
  return r;
}

std::size_t IdentityOrder(const RunConfig& config, std::size_t fallback) {
  return config.order_given ? config.order : fallback;
}

CheckResult CheckPentagonal(const RunConfig& config) {
  const std::size_t order = IdentityOrder(config, 500);
  const Ring z = Ring::Integers();
  const TruncatedSeries product = ProductFamily(z, order, [&](std::size_t n, std::size_t ord) {
    TruncatedSeries f = TruncatedSeries::One(z, ord);
    f.AddTerm(n, -1);
    return f;
  });
  return {"pentagonal", PentagonalSeries(order) == product, json{{"N", order}}};
}

CheckResult CheckJacobi(const RunConfig& config) {
  const std::size_t order = IdentityOrder(config, 500);
  return {"jacobi", JacobiCubeSeries(order) == Pow(PentagonalSeries(order), 3),
          json{{"N", order}}};
}

CheckResult CheckEulerFactor(const RunConfig& config) {
  CheckResult r{"euler-factor"};
  const std::size_t order = IdentityOrder(config, 100);
  const Ring z = Ring::Integers();
  json failures = json::array();
  for (unsigned d = 1; d <= std::min(config.d_max, 6u); ++d) {
    TruncatedSeries power_sum(z, 30);
    for (std::size_t j = 0; j < 30; ++j) {
      BigInt c;
      mpz_ui_pow_ui(c.get_mpz_t(), j + 1, d);
      power_sum.AddTerm(j, c);
    }
    TruncatedSeries one_minus_q = TruncatedSeries::One(z, 30);
    one_minus_q.AddTerm(1, -1);
    const TruncatedSeries quotient = Multiply(EulerianPolynomial(d).Substitute(1, 30),
                                              Pow(one_minus_q, -static_cast<long>(d) - 1));
    if (!(power_sum == quotient) || !(SdSeries(d, order) == SdSeriesFactorwise(d, order))) {
      failures.push_back(d);
    }
  }
  r.passed = failures.empty();
  r.detail = json{{"N", order}, {"failures", failures}};
  return r;
}

CheckResult CheckMersmann(const RunConfig& config) {
  const std::size_t order = IdentityOrder(config, 500);
  return {"mersmann", MersmannFSeries(order).agree, json{{"N", order}}};
}

json InstanceJson(const OmegaInstance& inst) {
  return json{{"j", inst.j}, {"x_exponents", inst.x_exponents}, {"y_exponent", inst.y_exponent}};
}

CheckResult CheckOmega(const RunConfig& config) {
  constexpr std::size_t kOrder = 20;
  json failures = json::array();
  for (const OmegaInstance& inst : RandomOmegaInstances(config.instances, config.seed)) {
    if (!(OmegaBruteforce(inst, kOrder, MakeBudget(config)) == OmegaClosedForm(inst, kOrder))) {
      failures.push_back(InstanceJson(inst));
    }
  }
  return {"omega", failures.empty(),
          json{{"instances", config.instances}, {"seed", config.seed}, {"failures", failures}}};
}

CheckResult CheckCrude(const RunConfig&) {
  constexpr std::size_t kOrder = 15;
  json failures = json::array();
  std::size_t cases = 0;
  for (unsigned d = 1; d <= 3; ++d) {
    for (std::size_t a0 : {1, 2}) {
      for (std::size_t a1 : {1, 2}) {
        for (std::size_t w : {1, 2}) {
          ++cases;
          if (!CrudeDd1Check(d, a0, a1, w, kOrder).agree) {
            failures.push_back(json{{"d", d}, {"exponents", {a0, a1, w}}});
          }
        }
      }
    }
  }
  return {"crude", failures.empty(), json{{"cases", cases}, {"failures", failures}}};
}

}  // namespace

int RunCoeffs(const RunConfig& config, std::ostream& out, std::ostream&) {
  TruncatedSeries s = BuildSeries(config);
  if (config.mod) s = ReduceMod(s, *config.mod);
  PrintSeries(s, config.format, out);
  return kExitOk;
}

int RunIdentities(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::vector<std::pair<std::string, std::function<CheckResult(const RunConfig&)>>> suite =
      {{"eulerian", CheckEulerian}, {"fd", CheckFdDegree},
       {"pentagonal", CheckPentagonal}, {"jacobi", CheckJacobi},
       {"euler-factor", CheckEulerFactor}, {"mersmann", CheckMersmann},
       {"omega", CheckOmega}, {"crude", CheckCrude}};
  bool known = config.only.empty();
  for (const auto& [name, fn] : suite) known = known || name == config.only;
  if (!known) throw UsageError("unknown identity check '" + config.only + "'");

  std::vector<CheckResult> results;
  for (const auto& [name, fn] : suite) {
    if (config.only.empty() || config.only == name) results.push_back(fn(config));
  }
  bool passed = true;
  for (const auto& r : results) passed = passed && r.passed;

  switch (config.format) {
    case Format::kJson: {
      json checks = json::array();
      for (const auto& r : results) {
        checks.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      out << json{{"passed", passed}, {"checks", checks}}.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "check,passed\n";
      for (const auto& r : results) out << r.name << "," << (r.passed ? "true" : "false") << "\n";
      break;
    case Format::kPlain:
      for (const auto& r : results) out << r.name << ": " << (r.passed ? "pass" : "FAIL") << "\n";
      break;
  }
  if (!passed) {
    for (const auto& r : results) {
      if (!r.passed) err << json{{"check", r.name}, {"detail", r.detail}}.dump() << "\n";
    }
  }
  return passed ? kExitOk : kExitCounterexample;
}

int RunOracle(const RunConfig& config, std::ostream& out, std::ostream&) {
  RequireWidth(config.d);
  RequireOrder(config.order);
  TruncatedSeries closed(Ring::Integers(), 1);
  TruncatedSeries oracle(Ring::Integers(), 1);
  if (config.series == "rd") {
    closed = RdSeries(config.d, config.order);
    oracle = RdCounts(config.d, config.order, MakeBudget(config));
  } else if (config.series == "sd") {
    closed = SdSeries(config.d, config.order);
    oracle = SdCounts(config.d, config.order, MakeBudget(config));
  } else if (config.series == "ddn") {
    if (config.n < 1) throw UsageError("--n must be >= 1 for ddn");
    closed = DdnSeriesClosed(config.d, config.n, config.order);
    oracle = DdnBruteforce(config.d, config.n, config.order, MakeBudget(config));
  } else {
    throw UsageError("unknown oracle kind '" + config.series + "' (expected rd, sd or ddn)");
  }

  json mismatches = json::array();
  for (std::size_t i = 0; i < config.order; ++i) {
    if (closed[i] != oracle[i]) {
      mismatches.push_back(
          json{{"index", i}, {"closed", closed[i].get_str()}, {"oracle", oracle[i].get_str()}});
    }
  }
  const bool equal = mismatches.empty();
  switch (config.format) {
    case Format::kJson: {
      json report{{"kind", config.series}, {"d", config.d}, {"N", config.order},
                  {"equal", equal}, {"mismatches", mismatches}};
      if (config.series == "ddn") report["n"] = config.n;
      out << report.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "index,closed,oracle\n";
      for (std::size_t i = 0; i < config.order; ++i) {
        out << i << "," << CsvQuoted(closed[i].get_str()) << ","
            << CsvQuoted(oracle[i].get_str()) << "\n";
      }
      break;
    case Format::kPlain:
      out << (equal ? "equal" : "MISMATCH") << "\n";
      break;
  }
  return equal ? kExitOk : kExitCounterexample;
}

CongruenceClaim ParseCustomClaim(const std::string& text) {
  std::vector<std::uint64_t> fields;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string field = text.substr(start, comma - start);
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos ||
        field.size() > 19) {
      throw UsageError("--custom expects five non-negative integers a,b,M,r,m");
    }
    fields.push_back(std::stoull(field));
    start = comma + 1;
  }
  if (fields.size() != 5 || fields[0] > kMaxWidth || fields[1] > kMaxWidth) {
    throw UsageError("--custom expects a,b,M,r,m with a, b <= " + std::to_string(kMaxWidth));
  }
  CongruenceClaim c;
  c.name = "custom";
  c.d_stride = static_cast<unsigned>(fields[0]);
  c.d_offset = static_cast<unsigned>(fields[1]);
  c.prog_modulus = fields[2];
  c.residue = fields[3];
  c.modulus = fields[4];
  c.Validate();
  return c;
}

int RunVerify(const RunConfig& config, std::ostream& out, std::ostream&) {
  std::vector<CongruenceClaim> claims;
  const int selectors = config.all + !config.claim.empty() + !config.custom.empty();
  if (selectors > 1) throw UsageError("--all, --claim and --custom are mutually exclusive");
  if (!config.custom.empty()) {
    claims.push_back(ParseCustomClaim(config.custom));
  } else if (config.all) {
    claims = BuiltinClaims();
  } else if (!config.claim.empty()) {
    auto claim = FindBuiltinClaim(config.claim);
    if (!claim) throw UsageError("unknown claim '" + config.claim + "'");
    claims.push_back(*claim);
  } else {
    throw UsageError("verify needs --all, --claim NAME or --custom a,b,M,r,m");
  }

  std::vector<ClaimReport> reports;
  for (const auto& c : claims) {
    reports.push_back(VerifyClaim(c, config.k_max, config.n_max, MakeBudget(config)));
  }
  bool held = true;
  for (const auto& r : reports) held = held && r.held();

  switch (config.format) {
    case Format::kJson: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(ToJson(r));
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "claim,status,k_max,n_max,witness_d,witness_index,witness_value\n";
      for (const auto& r : reports) {
        out << r.claim.name << "," << ToString(r.status) << "," << r.k_max << "," << r.n_max;
        if (r.witness) {
          out << "," << r.witness->d << "," << r.witness->index << ","
              << CsvQuoted(std::to_string(r.witness->value));
        } else {
          out << ",,,";
        }
        out << "\n";
      }
      break;
    case Format::kPlain:
      for (const auto& r : reports) out << r.claim.name << ": " << ToString(r.status) << "\n";
      break;
  }
  return held ? kExitOk : kExitCounterexample;
}

int RunScan(const RunConfig& config, std::ostream& out, std::ostream&) {
  const TruncatedSeries s = ReduceMod(BuildSeries(config), config.m);
  const std::vector<Progression> found =
      ScanProgressions(s, config.max_modulus, config.min_support);
  switch (config.format) {
    case Format::kJson:
      out << json{{"series", config.series}, {"d", config.d},         {"m", config.m},
                  {"N", config.order},       {"M_max", config.max_modulus},
                  {"progressions", ToJson(found)}}
                 .dump()
          << "\n";
      break;
    case Format::kCsv:
      out << "M,r\n";
      for (const auto& p : found) out << p.modulus << "," << p.residue << "\n";
      break;
    case Format::kPlain:
      for (std::size_t i = 0; i < found.size(); ++i) {
        out << (i ? "," : "") << "(" << found[i].modulus << "," << found[i].residue << ")";
      }
      out << "\n";
      break;
  }
  return kExitOk;
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "coeffs") return RunCoeffs(config, out, err);
    if (config.command == "identities") return RunIdentities(config, out, err);
    if (config.command == "oracle") return RunOracle(config, out, err);
    if (config.command == "verify") return RunVerify(config, out, err);
    if (config.command == "scan") return RunScan(config, out, err);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace diamond::cli
