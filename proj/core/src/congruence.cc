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

#include "diamond/congruence.h"

#include <stdexcept>

#include "diamond/genfun.h"

namespace diamond {

namespace {

constexpr unsigned kMaxPowerOfTwoWidth = 62;

CongruenceClaim Claim(std::string name, unsigned a, unsigned b, std::uint64_t big_m,
                      std::uint64_t r, std::uint64_t m, bool conjectural = false) {
  CongruenceClaim c;
  c.name = std::move(name);
  c.d_stride = a;
  c.d_offset = b;
  c.prog_modulus = big_m;
  c.residue = r;
  c.modulus = m;
  c.conjectural = conjectural;
  return c;
}

}  // namespace

std::uint64_t CongruenceClaim::ModulusFor(unsigned d) const {
  if (modulus_kind == ModulusKind::kFixed) return modulus;
  if (d > kMaxPowerOfTwoWidth) {
    throw std::invalid_argument("2^d modulus is limited to d <= 62, got d = " +
                                std::to_string(d));
  }
  return std::uint64_t{1} << d;
}

void CongruenceClaim::Validate() const {
  if (d_offset < 1) throw std::invalid_argument(name + ": d offset must be >= 1");
  if (prog_modulus < 1) throw std::invalid_argument(name + ": progression modulus must be >= 1");
  if (residue >= prog_modulus) {
    throw std::invalid_argument(name + ": residue must be smaller than the progression modulus");
  }
  if (modulus_kind == ModulusKind::kFixed &&
      (modulus < 2 || modulus > (std::uint64_t{1} << 63))) {
    throw std::invalid_argument(name + ": modulus must lie in [2, 2^63]");
  }
}

std::string ToString(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kVerified:
      return "verified";
    case ClaimStatus::kCounterexample:
      return "counterexample";
    case ClaimStatus::kConjectureHeld:
      return "conjecture-held";
    case ClaimStatus::kConjectureFailed:
      return "conjecture-failed";
  }
  return "unknown";
}

std::vector<CongruenceClaim> BuiltinClaims() {
  std::vector<CongruenceClaim> claims;
  // s_d(2n+1) == 0 mod 2^d for every d >= 1.
  CongruenceClaim pow2 = Claim("pow2", 1, 1, 2, 1, 0);
  pow2.modulus_kind = ModulusKind::kPowerOfTwoInD;
  claims.push_back(pow2);

  for (std::uint64_t r : {2, 3, 4}) {
    claims.push_back(Claim("mod5_4k1_5n" + std::to_string(r), 4, 1, 5, r, 5));
  }
  claims.push_back(Claim("mod5_4k2_25n23", 4, 2, 25, 23, 5));
  for (std::uint64_t r : {2, 4}) {
    claims.push_back(Claim("mod5_4k3_5n" + std::to_string(r), 4, 3, 5, r, 5));
  }
  claims.push_back(Claim("mod5_4k3_25n23", 4, 3, 25, 23, 5));
  claims.push_back(Claim("mod11", 10, 1, 121, 111, 11));

  for (std::uint64_t r : {17, 31, 38, 45}) {
    for (unsigned b : {1u, 2u}) {
      claims.push_back(Claim("mod7_6k" + std::to_string(b) + "_49n" + std::to_string(r), 6, b,
                             49, r, 7, /*conjectural=*/true));
    }
  }
  return claims;
}

std::optional<CongruenceClaim> FindBuiltinClaim(const std::string& name) {
  for (auto& c : BuiltinClaims()) {
    if (c.name == name) return c;
  }
  return std::nullopt;
}

ClaimReport VerifyClaim(const CongruenceClaim& claim, unsigned k_max, std::uint64_t n_max,
                        WorkBudget budget) {
  claim.Validate();
  const std::uint64_t order = claim.prog_modulus * n_max + claim.residue + 1;
  budget.Require(static_cast<std::uint64_t>(k_max + 1) * order * order,
                 "verifying " + claim.name);

  ClaimReport report{claim, k_max, n_max, claim.conjectural ? ClaimStatus::kConjectureHeld
                                                            : ClaimStatus::kVerified,
                     std::nullopt};
  for (unsigned k = 0; k <= k_max; ++k) {
    const unsigned d = claim.WidthAt(k);
    const std::uint64_t m = claim.ModulusFor(d);
    const TruncatedSeries s = SdSeries(d, order, Ring::Modulo(m));
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      const std::uint64_t index = claim.prog_modulus * n + claim.residue;
      if (!s.IsZeroAt(index)) {
        report.status = claim.conjectural ? ClaimStatus::kConjectureFailed
                                          : ClaimStatus::kCounterexample;
        report.witness = Witness{d, index, s[index].get_ui()};
        return report;
      }
    }
  }
  return report;
}

bool InternalCongruenceCheck(unsigned r, unsigned k, std::uint64_t m, std::size_t order) {
  if (r < 1) throw std::invalid_argument("d offset r must be >= 1");
  const Ring ring = Ring::Modulo(m);
  const std::uint64_t shifted = EulerPhi(m) * k + r;
  if (shifted > 4096) throw std::invalid_argument("phi(m) k + r is unreasonably large");
  return SdSeries(static_cast<unsigned>(shifted), order, ring) == SdSeries(r, order, ring);
}

std::uint64_t EulerPhi(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("phi is defined for m >= 1");
  std::uint64_t result = m;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<Progression> ScanProgressions(const TruncatedSeries& series,
                                          std::uint64_t max_modulus, std::size_t min_support) {
  if (series.ring().is_exact()) {
    throw std::invalid_argument("progression scan expects a series over Z/m");
  }
  if (min_support < kDefaultMinSupport) {
    throw std::invalid_argument("min_support must be at least " +
                                std::to_string(kDefaultMinSupport));
  }
  std::vector<Progression> found;
  const std::uint64_t order = series.order();
  for (std::uint64_t big_m = 1; big_m <= max_modulus; ++big_m) {
    for (std::uint64_t r = 0; r < big_m; ++r) {
      bool implied = false;
      for (const Progression& p : found) {
        implied = implied || (big_m % p.modulus == 0 && r % p.modulus == p.residue);
      }
      if (implied) continue;
      std::size_t inspected = 0;
      bool all_zero = true;
      for (std::uint64_t i = r; i < order && all_zero; i += big_m) {
        all_zero = series.IsZeroAt(i);
        ++inspected;
      }
      if (all_zero && inspected >= min_support) found.push_back({big_m, r});
    }
  }
  return found;
}

}  // namespace diamond
