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

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diamond {

// Storage access for the free functions below.
class SeriesKernel {
 public:
  static std::vector<BigInt>& exact(TruncatedSeries& s) { return s.exact_; }
  static const std::vector<BigInt>& exact(const TruncatedSeries& s) { return s.exact_; }
  static std::vector<std::uint64_t>& residues(TruncatedSeries& s) { return s.residues_; }
  static const std::vector<std::uint64_t>& residues(const TruncatedSeries& s) {
    return s.residues_;
  }
};

namespace {

void RequireSameRing(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.ring() == b.ring())) {
    throw std::invalid_argument("ring mismatch: " + a.ring().ToString() + " vs " +
                                b.ring().ToString());
  }
}

template <typename T>
std::vector<std::size_t> Support(const std::vector<T>& c) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) idx.push_back(i);
  }
  return idx;
}

void MulExact(const std::vector<BigInt>& x, const std::vector<BigInt>& y,
              std::vector<BigInt>& out) {
  const std::size_t n = out.size();
  std::vector<std::size_t> sx = Support(x);
  std::vector<std::size_t> sy = Support(y);
  const bool x_outer = sx.size() <= sy.size();
  const auto& outer = x_outer ? x : y;
  const auto& inner = x_outer ? y : x;
  const auto& outer_support = x_outer ? sx : sy;
  const auto& inner_support = x_outer ? sy : sx;
  for (std::size_t i : outer_support) {
    if (i >= n) break;
    mpz_srcptr oi = outer[i].get_mpz_t();
    for (std::size_t j : inner_support) {
      if (i + j >= n) break;
      mpz_addmul(out[i + j].get_mpz_t(), oi, inner[j].get_mpz_t());
    }
  }
}

void MulResidue(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y,
                std::uint64_t m, std::vector<std::uint64_t>& out) {
  const std::size_t n = out.size();
  std::vector<std::size_t> sx = Support(x);
  std::vector<std::size_t> sy = Support(y);
  const bool x_outer = sx.size() <= sy.size();
  const auto& outer = x_outer ? x : y;
  const auto& inner = x_outer ? y : x;
  const auto& outer_support = x_outer ? sx : sy;
  const auto& inner_support = x_outer ? sy : sx;
  for (std::size_t i : outer_support) {
    if (i >= n) break;
    const std::uint64_t oi = outer[i];
    for (std::size_t j : inner_support) {
      if (i + j >= n) break;
      out[i + j] = modular::Add(out[i + j], modular::Mul(oi, inner[j], m), m);
    }
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(Ring ring, std::size_t order) : ring_(ring), order_(order) {
  if (order == 0) throw std::invalid_argument("truncation order must be positive");
  if (ring_.is_exact()) {
    exact_.assign(order, BigInt(0));
  } else {
    residues_.assign(order, 0);
  }
}

TruncatedSeries TruncatedSeries::One(Ring ring, std::size_t order) {
  return Monomial(ring, order, 0, 1);
}

TruncatedSeries TruncatedSeries::Monomial(Ring ring, std::size_t order, std::size_t exponent,
                                          const BigInt& c) {
  TruncatedSeries s(ring, order);
  s.AddTerm(exponent, c);
  return s;
}

TruncatedSeries TruncatedSeries::FromCoefficients(Ring ring, std::span<const BigInt> coeffs) {
  TruncatedSeries s(ring, coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.AddTerm(i, coeffs[i]);
  return s;
}

TruncatedSeries TruncatedSeries::FromCoefficients(Ring ring,
                                                  std::initializer_list<long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return FromCoefficients(ring, big);
}

BigInt TruncatedSeries::operator[](std::size_t i) const {
  if (i >= order_) {
    throw std::out_of_range("coefficient " + std::to_string(i) +
                            " is beyond truncation order " + std::to_string(order_));
  }
  if (ring_.is_exact()) return exact_[i];
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(std::uint64_t), 0, 0, &residues_[i]);
  return out;
}

std::vector<BigInt> TruncatedSeries::coefficients() const {
  std::vector<BigInt> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back((*this)[i]);
  return out;
}

bool TruncatedSeries::IsZeroAt(std::size_t i) const {
  if (i >= order_) throw std::out_of_range("coefficient index beyond truncation order");
  return ring_.is_exact() ? exact_[i] == 0 : residues_[i] == 0;
}

std::size_t TruncatedSeries::NonZeroCount() const {
  return ring_.is_exact() ? Support(exact_).size() : Support(residues_).size();
}

void TruncatedSeries::AddTerm(std::size_t exponent, const BigInt& c) {
  if (exponent >= order_) return;
  if (ring_.is_exact()) {
    exact_[exponent] += c;
  } else {
    residues_[exponent] =
        modular::Add(residues_[exponent], ring_.Reduce(c), ring_.modulus());
  }
}

TruncatedSeries TruncatedSeries::Truncated(std::size_t order) const {
  if (order > order_) {
    throw std::invalid_argument("cannot extend a series from order " + std::to_string(order_) +
                                " to " + std::to_string(order));
  }
  TruncatedSeries out(ring_, order);
  if (ring_.is_exact()) {
    std::copy_n(exact_.begin(), order, out.exact_.begin());
  } else {
    std::copy_n(residues_.begin(), order, out.residues_.begin());
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.ring_ == b.ring_ && a.order_ == b.order_ && a.exact_ == b.exact_ &&
         a.residues_ == b.residues_;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  RequireSameRing(a, b);
  TruncatedSeries out = a.Truncated(std::min(a.order(), b.order()));
  if (out.ring().is_exact()) {
    auto& o = SeriesKernel::exact(out);
    const auto& y = SeriesKernel::exact(b);
    for (std::size_t i = 0; i < o.size(); ++i) o[i] += y[i];
  } else {
    auto& o = SeriesKernel::residues(out);
    const auto& y = SeriesKernel::residues(b);
    const std::uint64_t m = out.ring().modulus();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = modular::Add(o[i], y[i], m);
  }
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries out = a;
  if (out.ring().is_exact()) {
    for (auto& c : SeriesKernel::exact(out)) c = -c;
  } else {
    const std::uint64_t m = out.ring().modulus();
    for (auto& c : SeriesKernel::residues(out)) c = modular::Sub(0, c, m);
  }
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return Multiply(a, b);
}

TruncatedSeries Multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  RequireSameRing(a, b);
  TruncatedSeries out(a.ring(), std::min(a.order(), b.order()));
  if (out.ring().is_exact()) {
    MulExact(SeriesKernel::exact(a), SeriesKernel::exact(b), SeriesKernel::exact(out));
  } else {
    MulResidue(SeriesKernel::residues(a), SeriesKernel::residues(b), out.ring().modulus(),
               SeriesKernel::residues(out));
  }
  return out;
}

TruncatedSeries Invert(const TruncatedSeries& a) {
  const std::size_t n = a.order();
  TruncatedSeries out(a.ring(), n);
  if (a.ring().is_exact()) {
    const auto& x = SeriesKernel::exact(a);
    if (x[0] != 1 && x[0] != -1) {
      throw std::domain_error("constant term " + x[0].get_str() +
                              " is not a unit of Z; series is not invertible");
    }
    // x[0] is its own inverse.
    const BigInt& unit = x[0];
    std::vector<std::size_t> support = Support(x);
    auto& c = SeriesKernel::exact(out);
    c[0] = unit;
    BigInt acc;
    for (std::size_t k = 1; k < n; ++k) {
      acc = 0;
      for (std::size_t i : support) {
        if (i == 0) continue;
        if (i > k) break;
        mpz_addmul(acc.get_mpz_t(), x[i].get_mpz_t(), c[k - i].get_mpz_t());
      }
      c[k] = -unit * acc;
    }
  } else {
    const std::uint64_t m = a.ring().modulus();
    const auto& x = SeriesKernel::residues(a);
    const std::uint64_t unit = modular::Inverse(x[0], m);
    std::vector<std::size_t> support = Support(x);
    auto& c = SeriesKernel::residues(out);
    c[0] = unit;
    for (std::size_t k = 1; k < n; ++k) {
      std::uint64_t acc = 0;
      for (std::size_t i : support) {
        if (i == 0) continue;
        if (i > k) break;
        acc = modular::Add(acc, modular::Mul(x[i], c[k - i], m), m);
      }
      c[k] = modular::Sub(0, modular::Mul(unit, acc, m), m);
    }
  }
  return out;
}

TruncatedSeries Pow(const TruncatedSeries& a, long e) {
  TruncatedSeries base = e < 0 ? Invert(a) : a;
  unsigned long remaining = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  TruncatedSeries result = TruncatedSeries::One(a.ring(), a.order());
  while (remaining > 0) {
    if (remaining & 1UL) result = Multiply(result, base);
    remaining >>= 1;
    if (remaining > 0) base = Multiply(base, base);
  }
  return result;
}

TruncatedSeries ShiftUp(const TruncatedSeries& a, std::size_t shift) {
  return Multiply(TruncatedSeries::Monomial(a.ring(), a.order(), shift), a);
}

TruncatedSeries ReduceMod(const TruncatedSeries& a, std::uint64_t m) {
  Ring target = Ring::Modulo(m);
  if (!a.ring().is_exact() && a.ring().modulus() % m != 0) {
    throw std::invalid_argument("cannot reduce a series over " + a.ring().ToString() +
                                " modulo " + std::to_string(m));
  }
  TruncatedSeries out(target, a.order());
  auto& o = SeriesKernel::residues(out);
  if (a.ring().is_exact()) {
    const auto& x = SeriesKernel::exact(a);
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = target.Reduce(x[i]);
  } else {
    const auto& x = SeriesKernel::residues(a);
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = x[i] % m;
  }
  return out;
}

TruncatedSeries ProductFamily(Ring ring, std::size_t order, const FactorFn& factor_at) {
  TruncatedSeries result = TruncatedSeries::One(ring, order);
  for (std::size_t n = 1; n < order; ++n) {
    TruncatedSeries factor = factor_at(n, order);
    if (!(factor.ring() == ring)) {
      throw std::invalid_argument("factor " + std::to_string(n) + " is over " +
                                  factor.ring().ToString() + ", expected " + ring.ToString());
    }
    if (factor.order() < order) {
      throw std::invalid_argument("factor " + std::to_string(n) + " has order " +
                                  std::to_string(factor.order()) + " < " +
                                  std::to_string(order));
    }
    if (factor[0] != 1) {
      throw std::invalid_argument("factor " + std::to_string(n) +
                                  " does not have constant term 1");
    }
    for (std::size_t i = 1; i < std::min(n, order); ++i) {
      if (!factor.IsZeroAt(i)) {
        throw std::invalid_argument("factor " + std::to_string(n) +
                                    " is not congruent to 1 modulo q^" + std::to_string(n));
      }
    }
    result = Multiply(result, factor);
  }
  return result;
}

TruncatedSeries PentagonalSeries(std::size_t order, Ring ring) {
  TruncatedSeries out(ring, order);
  // Exponents k(3k+1)/2 for k = 0, -1, 1, -2, 2, ...; both signs of k share
  // the sign (-1)^k.
  for (long k = 0;; ++k) {
    const std::size_t e_pos = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    const std::size_t e_neg = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    if (e_neg >= order) break;
    const long sign = k % 2 == 0 ? 1 : -1;
    out.AddTerm(e_pos, sign);
    if (k != 0) out.AddTerm(e_neg, sign);
  }
  return out;
}

TruncatedSeries JacobiCubeSeries(std::size_t order, Ring ring) {
  TruncatedSeries out(ring, order);
  for (long k = 0;; ++k) {
    const std::size_t e = static_cast<std::size_t>(k * (k + 1) / 2);
    if (e >= order) break;
    out.AddTerm(e, (k % 2 == 0 ? 1 : -1) * (2 * k + 1));
  }
  return out;
}

}  // namespace diamond
