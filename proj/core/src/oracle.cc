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

#include "diamond/oracle.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace diamond {

std::uint64_t DiamondConfig::LinkSum() const {
  return std::accumulate(links.begin(), links.end(), std::uint64_t{0});
}

std::uint64_t DiamondConfig::FanSum() const {
  std::uint64_t sum = 0;
  for (const auto& cell : fans) sum = std::accumulate(cell.begin(), cell.end(), sum);
  return sum;
}

bool IsValid(const DiamondShape& shape, const DiamondConfig& config) {
  if (config.links.size() != shape.n + 1 || config.fans.size() != shape.n) return false;
  for (std::size_t k = 1; k <= shape.n; ++k) {
    const auto& cell = config.fans[k - 1];
    if (cell.size() != shape.d) return false;
    for (std::uint64_t b : cell) {
      if (config.links[k - 1] < b || b < config.links[k]) return false;
    }
  }
  return true;
}

namespace {

class ConfigEnumerator {
 public:
  ConfigEnumerator(const DiamondShape& shape, std::uint64_t floor, std::uint64_t limit,
                   const std::function<void(const DiamondConfig&)>& visit, WorkBudget& budget)
      : shape_(shape), floor_(floor), limit_(limit), visit_(visit), budget_(budget) {
    config_.links.assign(shape.n + 1, 0);
    config_.fans.assign(shape.n, std::vector<std::uint64_t>(shape.d, 0));
  }

  void Run() {
    const std::uint64_t rest = shape_.NodeCount() - 1;
    for (std::uint64_t a0 = floor_; a0 + rest * floor_ < limit_; ++a0) {
      budget_.Charge();
      config_.links[0] = a0;
      NextLink(1, a0);
    }
  }

 private:
  // Nodes strictly after cell k.
  std::uint64_t NodesAfterCell(std::size_t k) const {
    return (shape_.n - k) * (static_cast<std::uint64_t>(shape_.d) + 1);
  }

  void NextLink(std::size_t k, std::uint64_t total) {
    if (k > shape_.n) {
      visit_(config_);
      return;
    }
    const std::uint64_t prev = config_.links[k - 1];
    const std::uint64_t later = NodesAfterCell(k) * floor_;
    for (std::uint64_t a = floor_; a <= prev; ++a) {
      // Fans of cell k are each >= a.
      if (total + a * (shape_.d + 1) + later >= limit_) break;
      budget_.Charge();
      config_.links[k] = a;
      NextFan(k, 0, total + a);
    }
  }

  void NextFan(std::size_t k, unsigned j, std::uint64_t total) {
    auto& cell = config_.fans[k - 1];
    const std::uint64_t lo = config_.links[k];
    if (j == shape_.d) {
      if (lo == floor_) {
        FinishAtFloor(k, total);
      } else {
        NextLink(k + 1, total);
      }
      return;
    }
    const std::uint64_t hi = config_.links[k - 1];
    const std::uint64_t later = (shape_.d - j - 1) * lo + NodesAfterCell(k) * floor_;
    for (std::uint64_t b = lo; b <= hi; ++b) {
      if (total + b + later >= limit_) break;
      budget_.Charge();
      cell[j] = b;
      NextFan(k, j + 1, total + b);
    }
  }

  // Once a link sits at the floor every later node is forced to the floor.
  void FinishAtFloor(std::size_t k, std::uint64_t total) {
    for (std::size_t i = k + 1; i <= shape_.n; ++i) {
      config_.links[i] = floor_;
      std::fill(config_.fans[i - 1].begin(), config_.fans[i - 1].end(), floor_);
    }
    budget_.Charge();
    if (total + NodesAfterCell(k) * floor_ < limit_) visit_(config_);
  }

  const DiamondShape shape_;
  const std::uint64_t floor_;
  const std::uint64_t limit_;
  const std::function<void(const DiamondConfig&)>& visit_;
  WorkBudget& budget_;
  DiamondConfig config_;
};

TruncatedSeries CountsToSeries(const std::vector<BigInt>& counts) {
  return TruncatedSeries::FromCoefficients(Ring::Integers(), counts);
}

// Fan tuples of one cell, iterated value by value against both edges.
BigInt CountFanTuples(unsigned d, std::uint64_t lower_link, std::uint64_t upper_link,
                      WorkBudget& budget) {
  std::vector<std::uint64_t> fan(d, lower_link);
  BigInt count = 0;
  while (true) {
    budget.Charge();
    bool ok = true;
    for (std::uint64_t b : fan) ok = ok && upper_link >= b && b >= lower_link;
    if (ok) ++count;
    unsigned j = 0;
    while (j < d && fan[j] == upper_link) fan[j++] = lower_link;
    if (j == d) break;
    ++fan[j];
  }
  return count;
}

using CellWeight = std::function<BigInt(std::uint64_t lower, std::uint64_t upper)>;

// Sums prod_k cell_weight(a_k, a_{k-1}) over weakly decreasing link chains
// with link sum < order, indexed by link sum. A chain ends at its first zero
// link; every later cell has both links zero.
std::vector<BigInt> SumOverLinkChains(std::size_t order, const CellWeight& cell_weight) {
  std::vector<BigInt> out(order);
  std::function<void(std::uint64_t, std::uint64_t, const BigInt&)> extend =
      [&](std::uint64_t prev, std::uint64_t sum, const BigInt& weight) {
        for (std::uint64_t a = 0; a <= prev && sum + a < order; ++a) {
          BigInt w = weight * cell_weight(a, prev);
          if (a == 0) {
            out[sum] += w;
          } else {
            extend(a, sum + a, w);
          }
        }
      };
  out[0] += 1;
  for (std::uint64_t a0 = 1; a0 < order; ++a0) extend(a0, a0, BigInt(1));
  return out;
}

void RequireOrder(std::size_t order) {
  if (order == 0) throw std::invalid_argument("truncation order must be positive");
}

}  // namespace

void ForEachConfig(const DiamondShape& shape, std::uint64_t floor, std::uint64_t total_limit,
                   const std::function<void(const DiamondConfig&)>& visit, WorkBudget& budget) {
  if (shape.d == 0) throw std::invalid_argument("diamond width d must be >= 1");
  ConfigEnumerator(shape, floor, total_limit, visit, budget).Run();
}

TruncatedSeries RdCounts(unsigned d, std::size_t order, WorkBudget budget) {
  RequireOrder(order);
  std::vector<BigInt> counts(order);
  ForEachConfig(
      DiamondShape{d, order}, 0, order,
      [&](const DiamondConfig& c) { ++counts[c.TotalSum()]; }, budget);
  return CountsToSeries(counts);
}

BigInt CountRd(unsigned d, std::size_t n, WorkBudget budget) {
  return RdCounts(d, n + 1, budget)[n];
}

TruncatedSeries SdCounts(unsigned d, std::size_t order, WorkBudget budget) {
  RequireOrder(order);
  if (d == 0) throw std::invalid_argument("diamond width d must be >= 1");
  return CountsToSeries(SumOverLinkChains(order, [&](std::uint64_t lo, std::uint64_t hi) {
    return CountFanTuples(d, lo, hi, budget);
  }));
}

BigInt CountSd(unsigned d, std::size_t n, WorkBudget budget) {
  return SdCounts(d, n + 1, budget)[n];
}

TruncatedSeries SdCountsChainProduct(unsigned d, std::size_t order) {
  RequireOrder(order);
  return CountsToSeries(SumOverLinkChains(order, [d](std::uint64_t lo, std::uint64_t hi) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), hi - lo + 1, d);
    return r;
  }));
}

BigInt CountSdChainProduct(unsigned d, std::size_t n) {
  return SdCountsChainProduct(d, n + 1)[n];
}

TruncatedSeries DdnShifted(unsigned d, std::size_t n, std::uint64_t rho, std::size_t order,
                           WorkBudget budget) {
  RequireOrder(order);
  if (n == 0) throw std::invalid_argument("diamond length n must be >= 1");
  std::vector<BigInt> counts(order);
  ForEachConfig(
      DiamondShape{d, n}, rho, order, [&](const DiamondConfig& c) { ++counts[c.TotalSum()]; },
      budget);
  return CountsToSeries(counts);
}

TruncatedSeries DdnBruteforce(unsigned d, std::size_t n, std::size_t order, WorkBudget budget) {
  return DdnShifted(d, n, 0, order, budget);
}

}  // namespace diamond
