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

#include "diamond/ring.h"

#include <stdexcept>

namespace diamond {

Ring Ring::Modulo(std::uint64_t m) {
  if (m < 2) {
    throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(m));
  }
  return Ring(m);
}

std::string Ring::ToString() const {
  return is_exact() ? "Z" : "Z/" + std::to_string(modulus_);
}

std::uint64_t Ring::Reduce(const BigInt& value) const {
  BigInt m;
  mpz_import(m.get_mpz_t(), 1, -1, sizeof(modulus_), 0, 0, &modulus_);
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

namespace modular {

std::uint64_t Inverse(std::uint64_t a, std::uint64_t m) {
  __int128 old_r = a % m, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 quotient = old_r / r;
    __int128 tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw std::domain_error(std::to_string(a) + " is not invertible modulo " +
                            std::to_string(m));
  }
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

}  // namespace modular

}  // namespace diamond
