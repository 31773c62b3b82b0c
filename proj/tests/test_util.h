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

#ifndef DIAMOND_TESTS_TEST_UTIL_H_
#define DIAMOND_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <random>
#include <vector>

#include "diamond/series.h"

namespace diamond::testing {

inline std::vector<long> AsLongs(const TruncatedSeries& s) {
  std::vector<long> out;
  for (const BigInt& c : s.coefficients()) out.push_back(c.get_si());
  return out;
}

// Random series over `ring` with coefficients in [-bound, bound].
inline TruncatedSeries RandomSeries(std::mt19937_64& rng, Ring ring, std::size_t order,
                                    long bound) {
  TruncatedSeries s(ring, order);
  for (std::size_t i = 0; i < order; ++i) {
    s.AddTerm(i, static_cast<long>(rng() % (2 * bound + 1)) - bound);
  }
  return s;
}

// Number of partitions of n, by listing non-increasing part sequences.
inline std::uint64_t PartitionsByEnumeration(unsigned n, unsigned max_part) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (unsigned p = 1; p <= max_part && p <= n; ++p) total += PartitionsByEnumeration(n - p, p);
  return total;
}

}  // namespace diamond::testing

#endif  // DIAMOND_TESTS_TEST_UTIL_H_
