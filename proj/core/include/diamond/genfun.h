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

#ifndef DIAMOND_GENFUN_H_
#define DIAMOND_GENFUN_H_

#include <cstddef>

#include "diamond/ring.h"
#include "diamond/series.h"

namespace diamond {

// sum r_d(n) q^n = prod_{n>=1} F_d(q^{(n-1)(d+1)+1}, q) / (1 - q^n).
TruncatedSeries RdSeries(unsigned d, std::size_t order, Ring ring = Ring::Integers());

// sum s_d(n) q^n = prod_{n>=1} A_d(q^n) / (1 - q^n)^{d+1}.
TruncatedSeries SdSeries(unsigned d, std::size_t order, Ring ring = Ring::Integers());

// prod_{n>=1} sum_{j>=0} (j+1)^d q^{jn}, each factor built as a power sum.
TruncatedSeries SdSeriesFactorwise(unsigned d, std::size_t order, Ring ring = Ring::Integers());

// Closed form for fixed-length diamonds with q_0 = ... = q_n = w = q:
//   prod_{k=0}^{n-1} F_d(q^{k(d+1)+1}, q) / prod_{t=0}^{d} (1 - q^{k(d+1)+1+t})
//   times 1 / (1 - q^{n(d+1)+1}).
TruncatedSeries DdnSeriesClosed(unsigned d, std::size_t n, std::size_t order);

struct EtaThetaCheck {
  TruncatedSeries eta_side;    // prod (1-q^{6n})(1-q^n)^2 / ((1-q^{3n})(1-q^{2n}))
  TruncatedSeries theta_side;  // sum q^{t(t+1)/2} - 3 sum q^{(3t+1)(3t+2)/2}
  bool agree = false;
};

// Computes the weight-1/2 eta quotient F(q) both as a product and as a
// difference of theta-type sums, and compares them below `order`.
EtaThetaCheck MersmannFSeries(std::size_t order);

}  // namespace diamond

#endif  // DIAMOND_GENFUN_H_
