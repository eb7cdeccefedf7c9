// Copyright 2026 The Authors.
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

#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "matflock/algebraic.hpp"
#include "matflock/cells.hpp"
#include "matflock/discrete_convex.hpp"
#include "matflock/flock.hpp"
#include "matflock/matroid.hpp"
#include "matflock/rigidity.hpp"
#include "matflock/valuation.hpp"

// JSON documents for every value type. Labels are written as numbers when
// every label of the ground set is an integer, as strings otherwise. Vectors
// α are arrays in the canonical (natural) order of the ground set. Parse
// failures throw InputError.
namespace matflock::json {

using Json = nlohmann::json;

Json parse_text(std::string_view text);
Json parse_file(const std::string& path);

Json to_json(ExtInt x);
ExtInt ext_int_from_json(const Json& j);

Json to_json(const GroundSet& ground);
Json to_json(const GroundSet& ground, Subset s);
GroundSet ground_from_json(const Json& j);
Subset subset_from_json(const Json& j, const GroundSet& ground);

IntegerVector vector_from_json(const Json& j, int expected_size = -1);
/// "0,-2,-2,0" or "0 -2 -2 0".
IntegerVector parse_vector(std::string_view text, int expected_size = -1);

/// {"ground":[...], "rank":d, "bases":[[...], ...]} or {"name":"fano"}.
Json to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

/// {"ground":[...], "d":d, "values":[{"basis":[...], "value":v}, ...]};
/// omitted d-subsets are ∞. Only finite values are written.
Json to_json(const Valuation& nu);
Valuation valuation_from_json(const Json& j);

/// {"rows":[[...], ...]} or a bare array of rows; entries are integers or
/// strings such as "1/2".
RatMatrix matrix_from_json(const Json& j);
Json to_json(const RatMatrix& a);
Json to_json(const ModMatrix& a);

/// {"n":2, "lo":[...], "hi":[...], "values":[{"x":[...], "v":0}, ...]}.
Json to_json(const WindowFunction& f);
WindowFunction window_from_json(const Json& j);

/// {"radius":r, "entries":[{"alpha":[...], "matroid":{...}}, ...]}.
MatroidFlock explicit_flock_from_json(const Json& j);

/// {"p":2, "params":["s","t"], "coords":[[{"v":0,"k":0,"c":1}], ...],
///  "labels":[...]}; "v" may also name a parameter.
Json to_json(const LinearizedParam& param);
LinearizedParam linearized_from_json(const Json& j, std::uint32_t default_p = 0);

/// {"p":2, "A":[[...], ...], "labels":[...]}.
Json to_json(const ToricRep& rep);
ToricRep toric_from_json(const Json& j, std::uint32_t default_p = 0);

Json to_json(const BasisCheck& check, const GroundSet& ground);
Json to_json(const ValuationCheck& check, const GroundSet& ground);
Json to_json(const TrivialityResult& result);
Json to_json(const LConvexReport& report);
Json to_json(const MConvexReport& report);
Json to_json(const FlockWindowReport& report, const GroundSet& ground);
Json to_json(const Extraction& extraction);
Json to_json(const FrobeniusReport& report);
Json to_json(const CellSystem& cell);
Json to_json(const LeaderScan& scan);
Json to_json(const std::vector<CellSummary>& cells);
Json to_json(const RigidityVerdict& verdict, const Matroid& m);
Json to_json(const LazarsonCharReport& report);

}  // namespace matflock::json
