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

#include "diamond/genfun.h"

#include <vector>

#include "diamond/oracle.h"
#include "diamond/polynomial.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace diamond {
namespace {

using ::diamond::testing::AsLongs;
using ::diamond::testing::PartitionsByEnumeration;

TEST(RdSeriesTest, Examples) {
  EXPECT_EQ(AsLongs(RdSeries(2, 10)), (std::vector<long>{1, 1, 3, 4, 7, 11, 17, 25, 38, 53}));
  EXPECT_EQ(AsLongs(RdSeries(2, 1)), (std::vector<long>{1}));
}

TEST(RdSeriesTest, WidthOneIsPartitions) {
  const TruncatedSeries r1 = RdSeries(1, 60);
  for (unsigned n = 0; n < 60; ++n) EXPECT_EQ(r1[n], PartitionsByEnumeration(n, n)) << n;
  EXPECT_EQ(RdSeries(1, 500), Invert(PentagonalSeries(500)));
}

TEST(RdSeriesTest, MatchesEnumeration) {
  for (unsigned d = 1; d <= 4; ++d) EXPECT_EQ(RdSeries(d, 16), RdCounts(d, 16)) << d;
}

TEST(SdSeriesTest, Examples) {
  EXPECT_EQ(AsLongs(SdSeries(1, 6)), (std::vector<long>{1, 2, 5, 10, 20, 36}));
  EXPECT_EQ(AsLongs(SdSeries(3, 2)), (std::vector<long>{1, 8}));
  EXPECT_EQ(SdSeries(2, 3)[2], 13);
}

TEST(SdSeriesTest, MatchesEnumeration) {
  for (unsigned d = 1; d <= 4; ++d) EXPECT_EQ(SdSeries(d, 18), SdCounts(d, 18)) << d;
}

TEST(SdSeriesTest, FactorwiseAgrees) {
  for (unsigned d = 1; d <= 7; ++d) EXPECT_EQ(SdSeries(d, 80), SdSeriesFactorwise(d, 80)) << d;
  const Ring z7 = Ring::Modulo(7);
  EXPECT_EQ(SdSeries(5, 200, z7), SdSeriesFactorwise(5, 200, z7));
}

TEST(SdSeriesTest, ModularBuildEqualsReduction) {
  for (std::uint64_t m : {2u, 5u, 11u, 64u}) {
    for (unsigned d : {1u, 3u, 6u}) {
      EXPECT_EQ(SdSeries(d, 120, Ring::Modulo(m)), ReduceMod(SdSeries(d, 120), m));
      EXPECT_EQ(RdSeries(d, 60, Ring::Modulo(m)), ReduceMod(RdSeries(d, 60), m));
    }
  }
}

TEST(SdSeriesTest, OddIndicesDivisibleByTwoToTheD) {
  for (unsigned d = 1; d <= 6; ++d) {
    const TruncatedSeries s = SdSeries(d, 61);
    const BigInt m = BigInt(1) << d;
    for (std::size_t n = 1; n < 61; n += 2) EXPECT_EQ(s[n] % m, 0) << d << " " << n;
  }
}

TEST(DdnSeriesClosedTest, MatchesBruteforce) {
  for (unsigned d = 1; d <= 3; ++d) {
    for (std::size_t n = 1; n <= 3; ++n) {
      EXPECT_EQ(DdnSeriesClosed(d, n, 15), DdnBruteforce(d, n, 15)) << d << " " << n;
    }
  }
}

TEST(DdnSeriesClosedTest, SingleCellWidthOne) {
  EXPECT_EQ(AsLongs(DdnSeriesClosed(1, 1, 7)), (std::vector<long>{1, 1, 2, 3, 4, 5, 7}));
}

TEST(DdnSeriesClosedTest, LongDiamondsApproachRd) {
  // Shape (d, n) diamonds with total weight < n + 1 are the r_d diamonds.
  for (unsigned d = 1; d <= 3; ++d) {
    EXPECT_EQ(DdnSeriesClosed(d, 12, 13), RdSeries(d, 13)) << d;
  }
}

TEST(MersmannTest, SidesAgree) {
  for (std::size_t order : {4u, 300u, 500u}) {
    const EtaThetaCheck check = MersmannFSeries(order);
    EXPECT_TRUE(check.agree) << order;
    EXPECT_EQ(check.eta_side, check.theta_side);
  }
  EXPECT_EQ(AsLongs(MersmannFSeries(4).theta_side), (std::vector<long>{1, -2, 0, 1}));
}

}  // namespace
}  // namespace diamond
