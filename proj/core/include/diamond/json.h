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

#ifndef DIAMOND_JSON_H_
#define DIAMOND_JSON_H_

#include <vector>

#include <nlohmann/json.hpp>

#include "diamond/congruence.h"
#include "diamond/polynomial.h"
#include "diamond/series.h"

namespace diamond {

// {"ring": "Z" | {"mod": m}, "order": N, "coeffs": ["<decimal>", ...]}
nlohmann::json ToJson(const TruncatedSeries& s);
// Inverse of ToJson; throws std::invalid_argument on malformed input.
TruncatedSeries SeriesFromJson(const nlohmann::json& j);

// {"var": "q", "coeffs": [...]}
nlohmann::json ToJson(const UnivariatePolynomial& p);
// {"vars": ["q0", "w"], "terms": [{"i": .., "j": .., "c": ".."}]}, sorted by (i, j).
nlohmann::json ToJson(const BivariatePolynomial& p);

nlohmann::json ToJson(const CongruenceClaim& c);
// {"claim": {...}, "status": ..., "k_max": .., "n_max": .., "witness": {...} | null}
nlohmann::json ToJson(const ClaimReport& r);
nlohmann::json ToJson(const std::vector<Progression>& progressions);

}  // namespace diamond

#endif  // DIAMOND_JSON_H_
