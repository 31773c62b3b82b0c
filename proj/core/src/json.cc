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

#include "diamond/json.h"

#include <stdexcept>
#include <string>

namespace diamond {

using nlohmann::json;

json ToJson(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const BigInt& c : s.coefficients()) coeffs.push_back(c.get_str());
  json ring = s.ring().is_exact() ? json("Z") : json{{"mod", s.ring().modulus()}};
  return json{{"ring", ring}, {"order", s.order()}, {"coeffs", coeffs}};
}

TruncatedSeries SeriesFromJson(const json& j) {
  try {
    Ring ring = Ring::Integers();
    const json& r = j.at("ring");
    if (r.is_string()) {
      if (r.get<std::string>() != "Z") throw std::invalid_argument("unknown ring " + r.dump());
    } else {
      ring = Ring::Modulo(r.at("mod").get<std::uint64_t>());
    }
    const auto order = j.at("order").get<std::size_t>();
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != order) {
      throw std::invalid_argument("coeffs must be an array of length order");
    }
    std::vector<BigInt> values;
    values.reserve(order);
    for (const json& c : coeffs) {
      BigInt v;
      if (v.set_str(c.get<std::string>(), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: " + c.dump());
      }
      if (!ring.is_exact() && (v < 0 || v >= BigInt(std::to_string(ring.modulus())))) {
        throw std::invalid_argument("residue out of range: " + c.dump());
      }
      values.push_back(std::move(v));
    }
    return TruncatedSeries::FromCoefficients(ring, values);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
  }
}

json ToJson(const UnivariatePolynomial& p) {
  json coeffs = json::array();
  for (const BigInt& c : p.coefficients()) coeffs.push_back(c.get_str());
  return json{{"var", "q"}, {"coeffs", coeffs}};
}

json ToJson(const BivariatePolynomial& p) {
  json terms = json::array();
  // std::map already orders keys by (i, j).
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(json{{"i", e.first}, {"j", e.second}, {"c", c.get_str()}});
  }
  return json{{"vars", {"q0", "w"}}, {"terms", terms}};
}

json ToJson(const CongruenceClaim& c) {
  json modulus = c.modulus_kind == ModulusKind::kFixed ? json(c.modulus) : json("2^d");
  return json{{"name", c.name},
              {"d_stride", c.d_stride},
              {"d_offset", c.d_offset},
              {"prog_modulus", c.prog_modulus},
              {"residue", c.residue},
              {"modulus", modulus},
              {"conjectural", c.conjectural}};
}

json ToJson(const ClaimReport& r) {
  json witness = nullptr;
  if (r.witness) {
    witness = json{{"d", r.witness->d}, {"index", r.witness->index}, {"value", r.witness->value}};
  }
  return json{{"claim", ToJson(r.claim)},
              {"status", ToString(r.status)},
              {"k_max", r.k_max},
              {"n_max", r.n_max},
              {"witness", witness}};
}

json ToJson(const std::vector<Progression>& progressions) {
  json out = json::array();
  for (const Progression& p : progressions) out.push_back(json::array({p.modulus, p.residue}));
  return out;
}

}  // namespace diamond
