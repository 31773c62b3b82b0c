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

#ifndef DIAMOND_SERIES_H_
#define DIAMOND_SERIES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "diamond/ring.h"

namespace diamond {

// A formal power series in q known modulo q^order, with coefficients in a
// Ring. Coefficients over Z/m are kept canonical in [0, m).
//
// Binary operations return a series of order min(a.order(), b.order()) and
// never extend what is known.
class TruncatedSeries {
 public:
  // The zero series. Throws std::invalid_argument if order == 0.
  TruncatedSeries(Ring ring, std::size_t order);

  static TruncatedSeries One(Ring ring, std::size_t order);
  // c * q^exponent, or zero if exponent >= order.
  static TruncatedSeries Monomial(Ring ring, std::size_t order, std::size_t exponent,
                                  const BigInt& c = 1);
  // Order is the number of coefficients given.
  static TruncatedSeries FromCoefficients(Ring ring, std::span<const BigInt> coeffs);
  static TruncatedSeries FromCoefficients(Ring ring, std::initializer_list<long> coeffs);

  const Ring& ring() const { return ring_; }
  std::size_t order() const { return order_; }

  // Coefficient of q^i; throws std::out_of_range if i >= order().
  BigInt operator[](std::size_t i) const;
  std::vector<BigInt> coefficients() const;

  bool IsZeroAt(std::size_t i) const;
  std::size_t NonZeroCount() const;

  // Adds c to the coefficient of q^exponent; exponents at or past the
  // truncation order are dropped.
  void AddTerm(std::size_t exponent, const BigInt& c);

  // Throws std::invalid_argument if order > this->order().
  TruncatedSeries Truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  friend class SeriesKernel;

  Ring ring_;
  std::size_t order_;
  // Exactly one of these is populated, according to ring_.
  std::vector<BigInt> exact_;
  std::vector<std::uint64_t> residues_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

// Cauchy product truncated at min(a.order(), b.order()). Zero coefficients
// of the sparser operand are skipped; the result is the schoolbook product.
TruncatedSeries Multiply(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse. The constant term must be a unit of the ring
// (+-1 over Z, coprime to m over Z/m), otherwise std::domain_error.
TruncatedSeries Invert(const TruncatedSeries& a);

// a^e; negative exponents invert first. a^0 is 1.
TruncatedSeries Pow(const TruncatedSeries& a, long e);

// q^shift * a, same order.
TruncatedSeries ShiftUp(const TruncatedSeries& a, std::size_t shift);

// Coefficientwise reduction into Z/m. Accepts a series over Z, or over Z/m'
// with m dividing m'.
TruncatedSeries ReduceMod(const TruncatedSeries& a, std::uint64_t m);

// factor_at(n, order) must return a series of at least `order` terms that is
// congruent to 1 modulo q^n.
using FactorFn = std::function<TruncatedSeries(std::size_t n, std::size_t order)>;

// prod_{n >= 1} factor_at(n) modulo q^order. Factors with n >= order are
// congruent to 1 and are not evaluated. Throws std::invalid_argument when a
// factor breaks the contract.
TruncatedSeries ProductFamily(Ring ring, std::size_t order, const FactorFn& factor_at);

// prod_{m>=1} (1 - q^m) from the pentagonal-number sum.
TruncatedSeries PentagonalSeries(std::size_t order, Ring ring = Ring::Integers());

// prod_{m>=1} (1 - q^m)^3 from sum (-1)^n (2n+1) q^{n(n+1)/2}.
TruncatedSeries JacobiCubeSeries(std::size_t order, Ring ring = Ring::Integers());

}  // namespace diamond

#endif  // DIAMOND_SERIES_H_
