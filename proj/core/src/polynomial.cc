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

#include "diamond/polynomial.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diamond {

UnivariatePolynomial::UnivariatePolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::Derivative() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * i);
  return UnivariatePolynomial(std::move(out));
}

TruncatedSeries UnivariatePolynomial::Substitute(std::size_t stride, std::size_t order,
                                                 Ring ring) const {
  TruncatedSeries out(ring, order);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (stride != 0 && i > (order - 1) / stride) break;
    out.AddTerm(i * stride, coeffs_[i]);
  }
  return out;
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<BigInt> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<BigInt> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.IsZero() || b.IsZero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<BigInt> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return UnivariatePolynomial(std::move(out));
}

BivariatePolynomial BivariatePolynomial::Constant(const BigInt& c) {
  BivariatePolynomial p;
  p.AddTerm(0, 0, c);
  return p;
}

BigInt BivariatePolynomial::Coefficient(std::size_t i, std::size_t j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivariatePolynomial::AddTerm(std::size_t i, std::size_t j, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long BivariatePolynomial::DegreeInQ0() const {
  long deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<long>(e.first));
  return deg;
}

BivariatePolynomial BivariatePolynomial::ScaleQ0ByW(std::size_t shift) const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) out.AddTerm(e.first, e.second + e.first * shift, c);
  return out;
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out = a;
  for (const auto& [e, c] : b.terms()) out.AddTerm(e.first, e.second, c);
  return out;
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out = a;
  for (const auto& [e, c] : b.terms()) out.AddTerm(e.first, e.second, -c);
  return out;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      out.AddTerm(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

UnivariatePolynomial EulerianPolynomial(unsigned d) {
  UnivariatePolynomial a({BigInt(1)});
  const UnivariatePolynomial q({BigInt(0), BigInt(1)});
  const UnivariatePolynomial q_one_minus_q({BigInt(0), BigInt(1), BigInt(-1)});
  for (unsigned k = 1; k <= d; ++k) {
    const UnivariatePolynomial linear({BigInt(1), BigInt(k - 1)});
    a = linear * a + q_one_minus_q * a.Derivative();
  }
  return a;
}

BivariatePolynomial DivideByOneMinusW(const BivariatePolynomial& p) {
  // Group by q0 exponent; within a slice P(w) = (1 - w) Q(w) gives
  // Q_j = P_0 + ... + P_j, and the remainder is P(1).
  std::map<std::size_t, std::map<std::size_t, BigInt>> slices;
  for (const auto& [e, c] : p.terms()) slices[e.first][e.second] = c;

  BivariatePolynomial quotient;
  for (const auto& [i, slice] : slices) {
    const std::size_t top = slice.rbegin()->first;
    BigInt running = 0;
    for (std::size_t j = 0; j <= top; ++j) {
      auto it = slice.find(j);
      if (it != slice.end()) running += it->second;
      if (j < top) quotient.AddTerm(i, j, running);
    }
    if (running != 0) {
      throw std::logic_error("(1 - w) does not divide the q0^" + std::to_string(i) +
                             " slice: remainder " + running.get_str());
    }
  }
  return quotient;
}

BivariatePolynomial FdPolynomial(unsigned d) {
  if (d == 0) throw std::invalid_argument("F_d is defined for d >= 1");
  BivariatePolynomial f = BivariatePolynomial::Constant(1);
  for (unsigned k = 2; k <= d; ++k) {
    BivariatePolynomial one_minus_q0_wk = BivariatePolynomial::Constant(1);
    one_minus_q0_wk.AddTerm(1, k, -1);
    // w (1 - q0)
    BivariatePolynomial w_one_minus_q0;
    w_one_minus_q0.AddTerm(0, 1, 1);
    w_one_minus_q0.AddTerm(1, 1, -1);
    f = DivideByOneMinusW(one_minus_q0_wk * f - w_one_minus_q0 * f.ScaleQ0ByW(1));
  }
  return f;
}

TruncatedSeries FdSpecialize(unsigned d, std::size_t q0_exponent, std::size_t w_exponent,
                             std::size_t order, Ring ring) {
  TruncatedSeries out(ring, order);
  const BivariatePolynomial f = FdPolynomial(d);
  for (const auto& [e, c] : f.terms()) {
    out.AddTerm(e.first * q0_exponent + e.second * w_exponent, c);
  }
  return out;
}

UnivariatePolynomial FdAtW1(unsigned d) {
  const BivariatePolynomial f = FdPolynomial(d);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(f.DegreeInQ0() + 1));
  for (const auto& [e, c] : f.terms()) coeffs[e.first] += c;
  return UnivariatePolynomial(std::move(coeffs));
}

}  // namespace diamond
