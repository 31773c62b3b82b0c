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

#ifndef DIAMOND_RING_H_
#define DIAMOND_RING_H_

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace diamond {

using BigInt = mpz_class;

// Coefficient ring of a series: the integers, or Z/mZ with 2 <= m < 2^64.
class Ring {
 public:
  static Ring Integers() { return Ring(0); }
  static Ring Modulo(std::uint64_t m);

  bool is_exact() const { return modulus_ == 0; }
  // Zero for the integers.
  std::uint64_t modulus() const { return modulus_; }

  // "Z" or "Z/m".
  std::string ToString() const;

  // Canonical residue of `value`, in [0, m). Requires !is_exact().
  std::uint64_t Reduce(const BigInt& value) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  explicit Ring(std::uint64_t modulus) : modulus_(modulus) {}

  std::uint64_t modulus_;
};

namespace modular {

inline std::uint64_t Add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= m - b ? a - (m - b) : a + b;
}

inline std::uint64_t Sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t Mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Inverse of `a` modulo `m`; throws std::domain_error when gcd(a, m) != 1.
std::uint64_t Inverse(std::uint64_t a, std::uint64_t m);

}  // namespace modular

}  // namespace diamond

#endif  // DIAMOND_RING_H_
