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

#include "diamond/omega.h"

#include <functional>
#include <random>
#include <stdexcept>
#include <string>

#include "diamond/polynomial.h"

namespace diamond {

namespace {

void Validate(const OmegaInstance& inst) {
  if (inst.x_exponents.empty()) throw std::invalid_argument("Omega instance needs d >= 1");
  for (std::size_t a : inst.x_exponents) {
    if (a == 0) throw std::invalid_argument("x exponents must be positive");
  }
  if (inst.y_exponent == 0) throw std::invalid_argument("y exponent must be positive");
}

// 1 / (1 - q^e)
TruncatedSeries Geometric(std::size_t order, std::size_t e) {
  TruncatedSeries s = TruncatedSeries::One(Ring::Integers(), order);
  s.AddTerm(e, -1);
  return Invert(s);
}

}  // namespace

TruncatedSeries OmegaBruteforce(const OmegaInstance& inst, std::size_t order,
                                WorkBudget budget) {
  Validate(inst);
  TruncatedSeries out(Ring::Integers(), order);
  const std::size_t d = inst.d();
  std::function<void(std::size_t, std::size_t, long)> recurse =
      [&](std::size_t i, std::size_t weight, long lambda) {
        if (i == d) {
          // a_{d+1}: the 1/(1 - y/lambda) factor.
          for (std::size_t a = 0; weight + a * inst.y_exponent < order; ++a) {
            budget.Charge();
            if (lambda - static_cast<long>(a) >= 0) out.AddTerm(weight + a * inst.y_exponent, 1);
          }
          return;
        }
        for (std::size_t a = 0; weight + a * inst.x_exponents[i] < order; ++a) {
          budget.Charge();
          recurse(i + 1, weight + a * inst.x_exponents[i], lambda + static_cast<long>(a));
        }
      };
  recurse(0, 0, inst.j);
  return out;
}

TruncatedSeries OmegaClosedForm(const OmegaInstance& inst, std::size_t order) {
  Validate(inst);
  if (inst.j < -1) {
    throw std::invalid_argument("closed form supports j >= -1, got j = " +
                                std::to_string(inst.j));
  }
  const Ring z = Ring::Integers();
  TruncatedSeries first = TruncatedSeries::One(z, order);
  TruncatedSeries second =
      TruncatedSeries::Monomial(z, order, static_cast<std::size_t>(inst.j + 1) * inst.y_exponent);
  for (std::size_t a : inst.x_exponents) {
    first = Multiply(first, Geometric(order, a));
    second = Multiply(second, Geometric(order, a + inst.y_exponent));
  }
  return Multiply(Geometric(order, inst.y_exponent), first - second);
}

std::vector<OmegaInstance> RandomOmegaInstances(std::size_t count, std::uint64_t seed) {
  // Raw engine output reduced by hand, so the stream does not depend on the
  // standard library's distribution implementation.
  std::mt19937_64 engine(seed);
  auto draw = [&](std::uint64_t lo, std::uint64_t hi) { return lo + engine() % (hi - lo + 1); };
  std::vector<OmegaInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    OmegaInstance inst;
    inst.j = static_cast<long>(draw(0, 5)) - 1;
    const std::size_t d = draw(1, 4);
    for (std::size_t t = 0; t < d; ++t) inst.x_exponents.push_back(draw(1, 5));
    inst.y_exponent = draw(1, 5);
    out.push_back(std::move(inst));
  }
  return out;
}

CrudeCheck CrudeDd1Check(unsigned d, std::size_t a0_exponent, std::size_t a1_exponent,
                         std::size_t w_exponent, std::size_t order) {
  if (d == 0) throw std::invalid_argument("diamond width d must be >= 1");
  if (a0_exponent == 0 || a1_exponent == 0 || w_exponent == 0) {
    throw std::invalid_argument("specialization exponents must be positive");
  }
  if (d > 3 || order > 30) {
    throw BudgetExceeded("crude-form check is limited to d <= 3 and order <= 30 (got d = " +
                         std::to_string(d) + ", order = " + std::to_string(order) + ")");
  }
  const Ring z = Ring::Integers();

  // Every node ranges freely; lambda_j carries a_0 - b_j and mu_j carries
  // b_j - a_1, and Omega_>= keeps the terms where all of them are >= 0.
  TruncatedSeries crude(z, order);
  std::vector<std::size_t> fans(d);
  for (std::size_t a0 = 0; a0 * a0_exponent < order; ++a0) {
    for (std::size_t a1 = 0; a0 * a0_exponent + a1 * a1_exponent < order; ++a1) {
      const std::size_t base = a0 * a0_exponent + a1 * a1_exponent;
      std::function<void(unsigned, std::size_t)> fan = [&](unsigned j, std::size_t weight) {
        if (j == d) {
          bool nonnegative = true;
          for (std::size_t b : fans) {
            const long lambda = static_cast<long>(a0) - static_cast<long>(b);
            const long mu = static_cast<long>(b) - static_cast<long>(a1);
            nonnegative = nonnegative && lambda >= 0 && mu >= 0;
          }
          if (nonnegative) crude.AddTerm(weight, 1);
          return;
        }
        for (std::size_t b = 0; weight + b * w_exponent < order; ++b) {
          fans[j] = b;
          fan(j + 1, weight + b * w_exponent);
        }
      };
      fan(0, base);
    }
  }

  TruncatedSeries closed = FdSpecialize(d, a0_exponent, w_exponent, order);
  for (std::size_t t = 0; t <= d; ++t) {
    closed = Multiply(closed, Geometric(order, a0_exponent + t * w_exponent));
  }
  closed = Multiply(closed, Geometric(order, a0_exponent + a1_exponent + d * w_exponent));

  const bool agree = crude == closed;
  return CrudeCheck{std::move(crude), std::move(closed), agree};
}

}  // namespace diamond
