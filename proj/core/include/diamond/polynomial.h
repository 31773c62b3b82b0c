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

#ifndef DIAMOND_POLYNOMIAL_H_
#define DIAMOND_POLYNOMIAL_H_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "diamond/ring.h"
#include "diamond/series.h"

namespace diamond {

// Dense polynomial in q with integer coefficients, stored without trailing
// zeros.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  UnivariatePolynomial Derivative() const;

  // p(q^stride) as a series modulo q^order.
  TruncatedSeries Substitute(std::size_t stride, std::size_t order,
                             Ring ring = Ring::Integers()) const;

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

// Sparse polynomial in (q0, w). Keys are (q0 exponent, w exponent); zero
// coefficients are never stored, so equality is structural.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<std::size_t, std::size_t>;

  BivariatePolynomial() = default;

  static BivariatePolynomial Constant(const BigInt& c);

  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  BigInt Coefficient(std::size_t i, std::size_t j) const;
  void AddTerm(std::size_t i, std::size_t j, const BigInt& c);

  // -1 for the zero polynomial.
  long DegreeInQ0() const;

  // q0 -> q0 * w^shift.
  BivariatePolynomial ScaleQ0ByW(std::size_t shift) const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  std::map<Exponents, BigInt> terms_;
};

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);

// Eulerian polynomial A_d(q): A_0 = 1 and
//   A_d = (1 + (d-1) q) A_{d-1} + q (1 - q) A'_{d-1}.
UnivariatePolynomial EulerianPolynomial(unsigned d);

// Cell numerator F_d(q0, w): F_1 = 1 and
//   F_d = [(1 - q0 w^d) F_{d-1}(q0, w) - w (1 - q0) F_{d-1}(q0 w, w)] / (1 - w).
// The division is exact; a non-zero remainder raises std::logic_error.
// Throws std::invalid_argument for d == 0.
BivariatePolynomial FdPolynomial(unsigned d);

// Quotient P / (1 - w), computed slice by slice in w. Throws
// std::logic_error if (1 - w) does not divide P.
BivariatePolynomial DivideByOneMinusW(const BivariatePolynomial& p);

// F_d(q^q0_exponent, q^w_exponent) modulo q^order.
TruncatedSeries FdSpecialize(unsigned d, std::size_t q0_exponent, std::size_t w_exponent,
                             std::size_t order, Ring ring = Ring::Integers());

// F_d(q, 1) collected in q.
UnivariatePolynomial FdAtW1(unsigned d);

}  // namespace diamond

#endif  // DIAMOND_POLYNOMIAL_H_
