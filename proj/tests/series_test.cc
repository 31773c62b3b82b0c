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

#include "diamond/series.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace diamond {
namespace {

using ::diamond::testing::AsLongs;
using ::diamond::testing::PartitionsByEnumeration;
using ::diamond::testing::RandomSeries;

const Ring kZ = Ring::Integers();

TruncatedSeries OneMinusQPower(std::size_t order, std::size_t e, Ring ring = kZ) {
  TruncatedSeries s = TruncatedSeries::One(ring, order);
  s.AddTerm(e, -1);
  return s;
}

TEST(RingTest, RejectsModulusBelowTwo) {
  EXPECT_THROW(Ring::Modulo(0), std::invalid_argument);
  EXPECT_THROW(Ring::Modulo(1), std::invalid_argument);
  EXPECT_EQ(Ring::Modulo(2).modulus(), 2u);
}

TEST(RingTest, ReduceIsCanonical) {
  const Ring r = Ring::Modulo(5);
  EXPECT_EQ(r.Reduce(-3), 2u);
  EXPECT_EQ(r.Reduce(5), 0u);
  EXPECT_EQ(Ring::Modulo(UINT64_MAX).Reduce(-1), UINT64_MAX - 1);
}

TEST(SeriesTest, ZeroOrderIsRejected) {
  EXPECT_THROW(TruncatedSeries(kZ, 0), std::invalid_argument);
}

TEST(SeriesTest, NegativeResiduesNormalize) {
  const TruncatedSeries s = TruncatedSeries::FromCoefficients(Ring::Modulo(7), {-1, -8, 14});
  EXPECT_EQ(AsLongs(s), (std::vector<long>{6, 6, 0}));
}

TEST(SeriesTest, IndexBeyondOrderThrows) {
  const TruncatedSeries s(kZ, 3);
  EXPECT_THROW(s[3], std::out_of_range);
}

TEST(SeriesTest, TermsPastTruncationAreDropped) {
  TruncatedSeries s(kZ, 3);
  s.AddTerm(7, 1);
  EXPECT_EQ(s, TruncatedSeries(kZ, 3));
  EXPECT_THROW(s.Truncated(4), std::invalid_argument);
}

TEST(MultiplyTest, DifferenceOfSquares) {
  const auto a = TruncatedSeries::FromCoefficients(kZ, {1, 1, 0, 0, 0});
  const auto b = TruncatedSeries::FromCoefficients(kZ, {1, -1, 0, 0, 0});
  EXPECT_EQ(AsLongs(Multiply(a, b)), (std::vector<long>{1, 0, -1, 0, 0}));
}

TEST(MultiplyTest, OneIsIdentity) {
  std::mt19937_64 rng(1);
  const auto s = RandomSeries(rng, kZ, 20, 100);
  EXPECT_EQ(Multiply(s, TruncatedSeries::One(kZ, 20)), s);
}

TEST(MultiplyTest, GeometricTimesOneMinusQIsOne) {
  std::vector<BigInt> ones(10, BigInt(1));
  const auto geometric = TruncatedSeries::FromCoefficients(kZ, ones);
  EXPECT_EQ(Multiply(geometric, OneMinusQPower(10, 1)), TruncatedSeries::One(kZ, 10));
}

TEST(MultiplyTest, ResultOrderIsMinimum) {
  const auto product = Multiply(TruncatedSeries::One(kZ, 4), TruncatedSeries::One(kZ, 9));
  EXPECT_EQ(product.order(), 4u);
  EXPECT_EQ((TruncatedSeries::One(kZ, 4) + TruncatedSeries::One(kZ, 2)).order(), 2u);
}

TEST(MultiplyTest, RingMismatchThrows) {
  EXPECT_THROW(Multiply(TruncatedSeries::One(kZ, 4), TruncatedSeries::One(Ring::Modulo(3), 4)),
               std::invalid_argument);
  EXPECT_THROW(TruncatedSeries::One(Ring::Modulo(5), 4) + TruncatedSeries::One(Ring::Modulo(3), 4),
               std::invalid_argument);
}

// Plain double loop with no sparsity handling, as a reference product.
TruncatedSeries NaiveProduct(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  TruncatedSeries exact = TruncatedSeries::FromCoefficients(kZ, c);
  return a.ring().is_exact() ? exact : ReduceMod(exact, a.ring().modulus());
}

TEST(MultiplyTest, MatchesNaiveConvolutionOnSparseAndDenseInputs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Ring ring = trial % 2 == 0 ? kZ : Ring::Modulo(1 + rng() % 1000 + 1);
    auto a = RandomSeries(rng, ring, 1 + rng() % 40, 50);
    auto b = RandomSeries(rng, ring, 1 + rng() % 40, 50);
    // Thin one side out so the sparse path is exercised.
    if (trial % 3 == 0) {
      TruncatedSeries thin(ring, a.order());
      for (std::size_t i = 0; i < a.order(); i += 5) thin.AddTerm(i, a[i]);
      a = thin;
    }
    ASSERT_EQ(Multiply(a, b), NaiveProduct(a, b)) << "trial " << trial;
  }
}

TEST(MultiplyTest, HugeModulusDoesNotOverflow) {
  const std::uint64_t m = UINT64_MAX - 58;  // 2^64 - 59 is prime
  const Ring ring = Ring::Modulo(m);
  TruncatedSeries a(ring, 2);
  a.AddTerm(0, BigInt(std::to_string(m - 1)));
  a.AddTerm(1, BigInt(std::to_string(m - 2)));
  // (-1 - 2q)^2 = 1 + 4q
  EXPECT_EQ(AsLongs(Multiply(a, a)), (std::vector<long>{1, 4}));
}

TEST(InvertTest, GeometricSeries) {
  EXPECT_EQ(AsLongs(Invert(OneMinusQPower(6, 1))), (std::vector<long>{1, 1, 1, 1, 1, 1}));
}

TEST(InvertTest, OneInvertsToOne) {
  EXPECT_EQ(Invert(TruncatedSeries::One(kZ, 4)), TruncatedSeries::One(kZ, 4));
}

TEST(InvertTest, FibonacciFromRecurrence) {
  const auto s = TruncatedSeries::FromCoefficients(kZ, {1, -1, -1, 0, 0, 0, 0});
  std::vector<long> fib{1, 1};
  while (fib.size() < 7) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  EXPECT_EQ(AsLongs(Invert(s)), fib);
}

TEST(InvertTest, NonUnitConstantTermThrows) {
  EXPECT_THROW(Invert(TruncatedSeries::FromCoefficients(kZ, {2, 1})), std::domain_error);
  EXPECT_THROW(Invert(TruncatedSeries::FromCoefficients(kZ, {0, 1})), std::domain_error);
  EXPECT_THROW(Invert(TruncatedSeries::FromCoefficients(Ring::Modulo(6), {3, 1})),
               std::domain_error);
  EXPECT_NO_THROW(Invert(TruncatedSeries::FromCoefficients(Ring::Modulo(6), {5, 1})));
}

TEST(InvertTest, MinusOneConstantTerm) {
  const auto s = TruncatedSeries::FromCoefficients(kZ, {-1, 3, 0, 2});
  EXPECT_EQ(Multiply(s, Invert(s)), TruncatedSeries::One(kZ, 4));
}

TEST(InvertTest, ProductWithInverseIsOneProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const bool exact = trial % 2 == 0;
    const Ring ring = exact ? kZ : Ring::Modulo(97);
    auto a = RandomSeries(rng, ring, 1 + rng() % 48, 1000);
    const long unit = exact ? (rng() % 2 ? 1 : -1) : static_cast<long>(1 + rng() % 96);
    a = a - TruncatedSeries::Monomial(ring, a.order(), 0, a[0]) +
        TruncatedSeries::Monomial(ring, a.order(), 0, unit);
    ASSERT_EQ(Multiply(a, Invert(a)), TruncatedSeries::One(ring, a.order())) << trial;
  }
}

TEST(PowTest, NegativeExponentMatchesBinomialSeries) {
  // (1-q)^{-2} = sum_k (k+1) q^k
  std::vector<long> binomial;
  for (long k = 0; k < 5; ++k) binomial.push_back(k + 1);
  EXPECT_EQ(AsLongs(Pow(OneMinusQPower(5, 1), -2)), binomial);
}

TEST(PowTest, ZeroExponentIsOne) {
  std::mt19937_64 rng(3);
  const auto s = RandomSeries(rng, kZ, 8, 10);
  EXPECT_EQ(Pow(s, 0), TruncatedSeries::One(kZ, 8));
}

TEST(PowTest, CubeOfOneMinusQ) {
  EXPECT_EQ(AsLongs(Pow(OneMinusQPower(5, 1), 3)), (std::vector<long>{1, -3, 3, -1, 0}));
}

TEST(PowTest, NegativeExponentOfNonUnitThrows) {
  EXPECT_THROW(Pow(TruncatedSeries::FromCoefficients(kZ, {3, 1}), -1), std::domain_error);
}

TEST(PowTest, MatchesRepeatedMultiplication) {
  std::mt19937_64 rng(5);
  const auto s = RandomSeries(rng, kZ, 16, 5);
  TruncatedSeries repeated = TruncatedSeries::One(kZ, 16);
  for (int e = 1; e <= 9; ++e) {
    repeated = Multiply(repeated, s);
    ASSERT_EQ(Pow(s, e), repeated) << e;
  }
}

TEST(ShiftUpTest, MovesCoefficients) {
  const auto s = TruncatedSeries::FromCoefficients(kZ, {1, 2, 3, 4});
  EXPECT_EQ(AsLongs(ShiftUp(s, 2)), (std::vector<long>{0, 0, 1, 2}));
}

TEST(ProductFamilyTest, PartitionNumbers) {
  const auto p = ProductFamily(kZ, 8, [](std::size_t n, std::size_t order) {
    return Invert(OneMinusQPower(order, n));
  });
  std::vector<long> expected;
  for (unsigned n = 0; n < 8; ++n) expected.push_back(PartitionsByEnumeration(n, n));
  EXPECT_EQ(AsLongs(p), expected);
}

TEST(ProductFamilyTest, TrivialFactors) {
  const auto p = ProductFamily(kZ, 6, [](std::size_t, std::size_t order) {
    return TruncatedSeries::One(kZ, order);
  });
  EXPECT_EQ(p, TruncatedSeries::One(kZ, 6));
}

TEST(ProductFamilyTest, PlanePartitionDiamondNumerator) {
  const auto p = ProductFamily(kZ, 4, [](std::size_t n, std::size_t order) {
    TruncatedSeries num = TruncatedSeries::One(kZ, order);
    num.AddTerm(3 * n - 1, 1);
    return Multiply(num, Invert(OneMinusQPower(order, n)));
  });
  EXPECT_EQ(AsLongs(p), (std::vector<long>{1, 1, 3, 4}));
}

TEST(ProductFamilyTest, RejectsContractViolations) {
  EXPECT_THROW(ProductFamily(kZ, 5,
                             [](std::size_t, std::size_t order) {
                               return TruncatedSeries::Monomial(kZ, order, 0, 2);
                             }),
               std::invalid_argument);
  // (1 + q) for every n is not congruent to 1 modulo q^n once n >= 2.
  EXPECT_THROW(ProductFamily(kZ, 5,
                             [](std::size_t, std::size_t order) {
                               auto f = TruncatedSeries::One(kZ, order);
                               f.AddTerm(1, 1);
                               return f;
                             }),
               std::invalid_argument);
  EXPECT_THROW(ProductFamily(kZ, 5,
                             [](std::size_t, std::size_t) { return TruncatedSeries::One(kZ, 3); }),
               std::invalid_argument);
  EXPECT_THROW(ProductFamily(kZ, 5,
                             [](std::size_t, std::size_t order) {
                               return TruncatedSeries::One(Ring::Modulo(5), order);
                             }),
               std::invalid_argument);
}

TEST(PentagonalTest, LeadingCoefficients) {
  EXPECT_EQ(AsLongs(PentagonalSeries(13)),
            (std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
  EXPECT_EQ(AsLongs(PentagonalSeries(1)), (std::vector<long>{1}));
}

TruncatedSeries EulerProduct(std::size_t order) {
  return ProductFamily(kZ, order, [](std::size_t n, std::size_t ord) {
    return OneMinusQPower(ord, n);
  });
}

TEST(PentagonalTest, MatchesProductUpTo500) {
  for (std::size_t order : {1, 2, 7, 50, 200, 500}) {
    EXPECT_EQ(PentagonalSeries(order), EulerProduct(order)) << order;
  }
}

TEST(JacobiTest, LeadingCoefficients) {
  EXPECT_EQ(AsLongs(JacobiCubeSeries(7)), (std::vector<long>{1, -3, 0, 5, 0, 0, -7}));
  EXPECT_EQ(AsLongs(JacobiCubeSeries(1)), (std::vector<long>{1}));
}

TEST(JacobiTest, EqualsPentagonalCubed) {
  for (std::size_t order : {1, 10, 200, 500}) {
    EXPECT_EQ(JacobiCubeSeries(order), Pow(PentagonalSeries(order), 3)) << order;
  }
}

TEST(ReduceModTest, Examples) {
  const auto s = TruncatedSeries::FromCoefficients(kZ, {1, -3, 0, 5});
  EXPECT_EQ(AsLongs(ReduceMod(s, 5)), (std::vector<long>{1, 2, 0, 0}));
  EXPECT_THROW(ReduceMod(s, 1), std::invalid_argument);
}

TEST(ReduceModTest, Idempotent) {
  std::mt19937_64 rng(2);
  const auto s = RandomSeries(rng, kZ, 30, 1000);
  EXPECT_EQ(ReduceMod(ReduceMod(s, 2), 2), ReduceMod(s, 2));
  EXPECT_EQ(ReduceMod(ReduceMod(s, 10), 5), ReduceMod(s, 5));
  EXPECT_THROW(ReduceMod(ReduceMod(s, 10), 3), std::invalid_argument);
}

TEST(SeriesPropertyTest, RingAxiomsUpToTruncation) {
  std::mt19937_64 rng(0xA11CE);
  for (int trial = 0; trial < 1000; ++trial) {
    const Ring ring = trial % 4 == 3 ? Ring::Modulo(1 + rng() % 100000 + 1) : kZ;
    const auto a = RandomSeries(rng, ring, 1 + rng() % 64, 1'000'000);
    const auto b = RandomSeries(rng, ring, 1 + rng() % 64, 1'000'000);
    const auto c = RandomSeries(rng, ring, 1 + rng() % 64, 1'000'000);
    ASSERT_EQ(a * b, b * a) << trial;
    ASSERT_EQ((a * b) * c, a * (b * c)) << trial;
    ASSERT_EQ(a * (b + c), a * b + a * c) << trial;
  }
}

TEST(SeriesPropertyTest, ReduceModCommutesWithMultiplyAndPow) {
  std::mt19937_64 rng(0xBEEF);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t m = 2 + rng() % 50;
    const auto a = RandomSeries(rng, kZ, 1 + rng() % 32, 1000);
    const auto b = RandomSeries(rng, kZ, 1 + rng() % 32, 1000);
    const long e = static_cast<long>(rng() % 6);
    ASSERT_EQ(ReduceMod(a * b, m), ReduceMod(a, m) * ReduceMod(b, m));
    ASSERT_EQ(ReduceMod(Pow(a, e), m), Pow(ReduceMod(a, m), e));
  }
}

}  // namespace
}  // namespace diamond
