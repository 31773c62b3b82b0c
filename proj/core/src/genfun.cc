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

#include <stdexcept>
#include <string>

#include "diamond/polynomial.h"

namespace diamond {

namespace {

void RequireWidth(unsigned d) {
  if (d == 0) throw std::invalid_argument("diamond width d must be >= 1");
}

// 1 - q^e
TruncatedSeries OneMinusPower(Ring ring, std::size_t order, std::size_t e) {
  TruncatedSeries s = TruncatedSeries::One(ring, order);
  s.AddTerm(e, -1);
  return s;
}

}  // namespace

TruncatedSeries RdSeries(unsigned d, std::size_t order, Ring ring) {
  RequireWidth(d);
  const BivariatePolynomial f = FdPolynomial(d);
  return ProductFamily(ring, order, [&](std::size_t n, std::size_t ord) {
    const std::size_t q0_exponent = (n - 1) * (d + 1) + 1;
    // Same exponent read off Q_k w^{dk} with k = n - 1 and all variables q.
    const std::size_t k = n - 1;
    if (q0_exponent != (k + 1) + d * k) {
      throw std::logic_error("factor exponent mismatch at n = " + std::to_string(n));
    }
    TruncatedSeries numerator(ring, ord);
    for (const auto& [e, c] : f.terms()) numerator.AddTerm(e.first * q0_exponent + e.second, c);
    return Multiply(numerator, Invert(OneMinusPower(ring, ord, n)));
  });
}

TruncatedSeries SdSeries(unsigned d, std::size_t order, Ring ring) {
  RequireWidth(d);
  const UnivariatePolynomial eulerian = EulerianPolynomial(d);
  return ProductFamily(ring, order, [&](std::size_t n, std::size_t ord) {
    return Multiply(eulerian.Substitute(n, ord, ring),
                    Pow(OneMinusPower(ring, ord, n), -static_cast<long>(d) - 1));
  });
}

TruncatedSeries SdSeriesFactorwise(unsigned d, std::size_t order, Ring ring) {
  RequireWidth(d);
  return ProductFamily(ring, order, [&](std::size_t n, std::size_t ord) {
    TruncatedSeries factor(ring, ord);
    for (std::size_t j = 0; j * n < ord; ++j) {
      BigInt c;
      mpz_ui_pow_ui(c.get_mpz_t(), j + 1, d);
      factor.AddTerm(j * n, c);
    }
    return factor;
  });
}

TruncatedSeries DdnSeriesClosed(unsigned d, std::size_t n, std::size_t order) {
  RequireWidth(d);
  if (n == 0) throw std::invalid_argument("diamond length n must be >= 1");
  const Ring z = Ring::Integers();
  const BivariatePolynomial f = FdPolynomial(d);
  TruncatedSeries result = TruncatedSeries::One(z, order);
  for (std::size_t k = 0; k < n; ++k) {
    // Q_k w^{dk} = q^{(k+1) + dk}.
    const std::size_t base = k * (d + 1) + 1;
    TruncatedSeries numerator(z, order);
    for (const auto& [e, c] : f.terms()) numerator.AddTerm(e.first * base + e.second, c);
    result = Multiply(result, numerator);
    for (std::size_t t = 0; t <= d; ++t) {
      result = Multiply(result, Invert(OneMinusPower(z, order, base + t)));
    }
  }
  // Q_n w^{dn} = q^{(n+1) + dn}.
  return Multiply(result, Invert(OneMinusPower(z, order, (n + 1) + d * n)));
}

EtaThetaCheck MersmannFSeries(std::size_t order) {
  const Ring z = Ring::Integers();
  TruncatedSeries eta = ProductFamily(z, order, [&](std::size_t n, std::size_t ord) {
    TruncatedSeries num =
        Multiply(OneMinusPower(z, ord, 6 * n), Pow(OneMinusPower(z, ord, n), 2));
    TruncatedSeries den = Multiply(OneMinusPower(z, ord, 3 * n), OneMinusPower(z, ord, 2 * n));
    return Multiply(num, Invert(den));
  });
  TruncatedSeries theta(z, order);
  for (std::size_t t = 0; t * (t + 1) / 2 < order; ++t) theta.AddTerm(t * (t + 1) / 2, 1);
  for (std::size_t t = 0; (3 * t + 1) * (3 * t + 2) / 2 < order; ++t) {
    theta.AddTerm((3 * t + 1) * (3 * t + 2) / 2, -3);
  }
  const bool agree = eta == theta;
  return EtaThetaCheck{std::move(eta), std::move(theta), agree};
}

}  // namespace diamond
