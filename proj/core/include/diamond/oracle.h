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

#ifndef DIAMOND_ORACLE_H_
#define DIAMOND_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "diamond/budget.h"
#include "diamond/ring.h"
#include "diamond/series.h"

namespace diamond {

// A d-fold diamond of length n: links a_0..a_n and, in each cell k = 1..n,
// d fan nodes b_{k,1..d} with a_{k-1} >= b_{k,j} >= a_k.
struct DiamondShape {
  unsigned d = 1;
  std::size_t n = 0;

  std::size_t NodeCount() const { return (n + 1) + n * d; }
};

struct DiamondConfig {
  std::vector<std::uint64_t> links;               // a_0..a_n
  std::vector<std::vector<std::uint64_t>> fans;   // fans[k-1][j-1] = b_{k,j}

  std::uint64_t LinkSum() const;
  std::uint64_t FanSum() const;
  std::uint64_t TotalSum() const { return LinkSum() + FanSum(); }
};

// Checks dimensions and every edge of the diamond graph.
bool IsValid(const DiamondShape& shape, const DiamondConfig& config);

// Calls `visit` once for every configuration of `shape` whose nodes are all
// >= floor and whose total node sum is < total_limit. Values are bounded by
// the graph edges only; nothing is counted in closed form.
void ForEachConfig(const DiamondShape& shape, std::uint64_t floor, std::uint64_t total_limit,
                   const std::function<void(const DiamondConfig&)>& visit, WorkBudget& budget);

// Number of d-fold partition diamonds with total node sum n. Diamonds are
// identified by their finite support, so a length of n + 1 cells suffices.
BigInt CountRd(unsigned d, std::size_t n, WorkBudget budget = WorkBudget());

// r_d(0..order-1) by enumeration.
TruncatedSeries RdCounts(unsigned d, std::size_t order, WorkBudget budget = WorkBudget());

// Number of Schmidt-type diamonds with link sum n. Link chains are
// enumerated; in each cell the fan tuples are iterated one by one and
// checked against the edges, and the independent per-cell counts multiply.
BigInt CountSd(unsigned d, std::size_t n, WorkBudget budget = WorkBudget());
TruncatedSeries SdCounts(unsigned d, std::size_t order, WorkBudget budget = WorkBudget());

// The same counts from sum over chains of prod_k (a_{k-1} - a_k + 1)^d.
BigInt CountSdChainProduct(unsigned d, std::size_t n);
TruncatedSeries SdCountsChainProduct(unsigned d, std::size_t order);

// Generating function of shape-(d, n) diamonds by total node sum (every
// q_i and w set to q), by exhaustive enumeration. Requires n >= 1.
TruncatedSeries DdnBruteforce(unsigned d, std::size_t n, std::size_t order,
                              WorkBudget budget = WorkBudget());

// As DdnBruteforce, restricted to diamonds whose every node is >= rho.
TruncatedSeries DdnShifted(unsigned d, std::size_t n, std::uint64_t rho, std::size_t order,
                           WorkBudget budget = WorkBudget());

}  // namespace diamond

#endif  // DIAMOND_ORACLE_H_
