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

#ifndef DIAMOND_CONGRUENCE_H_
#define DIAMOND_CONGRUENCE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diamond/budget.h"
#include "diamond/series.h"

namespace diamond {

enum class ModulusKind {
  kFixed,
  kPowerOfTwoInD,  // m = 2^d for each d of the family
};

// s_{a k + b}(M n + r) == 0 (mod m) for all k, n >= 0.
struct CongruenceClaim {
  std::string name;
  unsigned d_stride = 0;   // a
  unsigned d_offset = 1;   // b
  std::uint64_t prog_modulus = 1;  // M
  std::uint64_t residue = 0;       // r
  ModulusKind modulus_kind = ModulusKind::kFixed;
  std::uint64_t modulus = 2;  // used when modulus_kind == kFixed
  bool conjectural = false;

  unsigned WidthAt(unsigned k) const { return d_stride * k + d_offset; }
  std::uint64_t ModulusFor(unsigned d) const;

  // Throws std::invalid_argument unless r < M, b >= 1, M >= 1 and the
  // modulus is in range.
  void Validate() const;
};

enum class ClaimStatus { kVerified, kCounterexample, kConjectureHeld, kConjectureFailed };

std::string ToString(ClaimStatus status);

struct Witness {
  unsigned d = 0;
  std::uint64_t index = 0;
  std::uint64_t value = 0;  // s_d(index) mod m, non-zero
};

struct ClaimReport {
  CongruenceClaim claim;
  unsigned k_max = 0;
  std::uint64_t n_max = 0;
  ClaimStatus status = ClaimStatus::kVerified;
  std::optional<Witness> witness;

  bool held() const {
    return status == ClaimStatus::kVerified || status == ClaimStatus::kConjectureHeld;
  }
};

// The proved families modulo 2^d, 5 and 11, followed by the eight
// conjectural mod-7 families, in a fixed order.
std::vector<CongruenceClaim> BuiltinClaims();

std::optional<CongruenceClaim> FindBuiltinClaim(const std::string& name);

// Checks the claim for k = 0..k_max and n = 0..n_max against SdSeries
// computed directly over Z/m. Stops at the first non-zero residue.
// Throws BudgetExceeded when the series sizes are over budget.
ClaimReport VerifyClaim(const CongruenceClaim& claim, unsigned k_max, std::uint64_t n_max,
                        WorkBudget budget = WorkBudget());

// s_{phi(m) k + r}(n) == s_r(n) (mod m) for all n < order.
bool InternalCongruenceCheck(unsigned r, unsigned k, std::uint64_t m, std::size_t order);

std::uint64_t EulerPhi(std::uint64_t m);

struct Progression {
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;

  friend auto operator<=>(const Progression&, const Progression&) = default;
};

inline constexpr std::size_t kDefaultMinSupport = 10;

// Progressions (M, r) with M <= max_modulus along which every available
// coefficient of `series` vanishes, with at least min_support coefficients
// inspected. A progression implied by a smaller reported one (M' | M and
// r == r' mod M') is not reported. Output is sorted by (M, r).
std::vector<Progression> ScanProgressions(const TruncatedSeries& series,
                                          std::uint64_t max_modulus,
                                          std::size_t min_support = kDefaultMinSupport);

}  // namespace diamond

#endif  // DIAMOND_CONGRUENCE_H_
