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

#ifndef DIAMOND_OMEGA_H_
#define DIAMOND_OMEGA_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "diamond/budget.h"
#include "diamond/series.h"

namespace diamond {

// Omega_>= applied to
//   lambda^j / ((1 - lambda x_1) ... (1 - lambda x_d) (1 - y / lambda))
// under the specialization x_i = q^{x_exponents[i]}, y = q^{y_exponent}.
struct OmegaInstance {
  long j = 0;
  std::vector<std::size_t> x_exponents;  // d entries, each >= 1
  std::size_t y_exponent = 1;            // >= 1

  std::size_t d() const { return x_exponents.size(); }
};

// Expands the left side term by term, keeps monomials whose lambda exponent
// j + a_1 + ... + a_d - a_{d+1} is >= 0, and sets lambda = 1.
TruncatedSeries OmegaBruteforce(const OmegaInstance& inst, std::size_t order,
                                WorkBudget budget = WorkBudget());

// The eliminated form
//   1/(1-y) [ 1/prod(1-x_i) - y^{j+1}/prod(1-x_i y) ].
// Only j >= -1 is supported; smaller j raises std::invalid_argument.
TruncatedSeries OmegaClosedForm(const OmegaInstance& inst, std::size_t order);

// Reproducible random instances: j in [-1, 4], d in [1, 4], every exponent
// in [1, 5]. The same seed always yields the same sequence.
std::vector<OmegaInstance> RandomOmegaInstances(std::size_t count, std::uint64_t seed);

struct CrudeCheck {
  TruncatedSeries crude;   // Omega_>= over the crude form, by enumeration
  TruncatedSeries closed;  // F_d(q0, w) / ((1-q0)(1-q0 w)...(1-q0 w^d)(1-q0 q1 w^d))
  bool agree = false;
};

// Length-one diamonds D_{d,1}(q^a0, q^a1; q^w) two ways. Guarded to d <= 3
// and order <= 30; larger arguments raise BudgetExceeded.
CrudeCheck CrudeDd1Check(unsigned d, std::size_t a0_exponent, std::size_t a1_exponent,
                         std::size_t w_exponent, std::size_t order);

}  // namespace diamond

#endif  // DIAMOND_OMEGA_H_
