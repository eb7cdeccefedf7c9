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

#include "matflock/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "matflock/errors.hpp"

namespace matflock::json {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

std::string label_from_json(const Json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  if (j.is_string()) return j.get<std::string>();
  throw InputError("element labels must be integers or strings");
}

Json label_json(const GroundSet& ground, int index) {
  if (ground.numeric()) return std::stoll(ground.label(index));
  return ground.label(index);
}

Json rational_json(const Rational& q) {
  if (denominator(q) == 1) {
    const BigInt n = numerator(q);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return n.convert_to<std::int64_t>();
  }
  return to_string(q);
}

Json big_json(const BigInt& x) { return rational_json(Rational(x)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("matrix entries must be integers or rational strings");
}

Json counts(std::uint64_t checked, std::uint64_t passed) { return {{"checked", checked}, {"passed", passed}}; }

std::uint32_t prime_field(const Json& j, std::uint32_t default_p) {
  std::uint32_t p = default_p;
  if (j.contains("p")) {
    const std::int64_t given = as_int(j.at("p"), "p");
    if (given < 2 || given > std::numeric_limits<std::uint32_t>::max()) throw InputError("p out of range");
    if (default_p != 0 && static_cast<std::uint32_t>(given) != default_p)
      throw InputError("--p " + std::to_string(default_p) + " contradicts \"p\": " + std::to_string(given));
    p = static_cast<std::uint32_t>(given);
  }
  if (p == 0) throw InputError("no prime given (use \"p\" or --p)");
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  return p;
}

std::vector<std::string> labels_from_json(const Json& j) {
  std::vector<std::string> labels;
  for (const auto& l : as_array(j, "labels")) labels.push_back(label_from_json(l));
  return labels;
}

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::exception& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
}

Json to_json(ExtInt x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

ExtInt ext_int_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtInt::infinity();
  return as_int(j, "value");
}

Json to_json(const GroundSet& ground) {
  Json out = Json::array();
  for (int i = 0; i < ground.size(); ++i) out.push_back(label_json(ground, i));
  return out;
}

Json to_json(const GroundSet& ground, Subset s) {
  Json out = Json::array();
  for (int i : elements(s)) out.push_back(label_json(ground, i));
  return out;
}

GroundSet ground_from_json(const Json& j) { return GroundSet(labels_from_json(as_array(j, "ground"))); }

Subset subset_from_json(const Json& j, const GroundSet& ground) {
  std::vector<std::string> labels;
  for (const auto& l : as_array(j, "subset")) labels.push_back(label_from_json(l));
  return ground.subset_of_labels(labels);
}

IntegerVector vector_from_json(const Json& j, int expected_size) {
  IntegerVector v;
  for (const auto& x : as_array(j, "vector")) v.push_back(as_int(x, "vector entry"));
  if (expected_size >= 0 && static_cast<int>(v.size()) != expected_size)
    throw InputError("vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(expected_size));
  return v;
}

IntegerVector parse_vector(std::string_view text, int expected_size) {
  IntegerVector v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ',' && text[end] != ' ' && text[end] != '\t') ++end;
    std::string_view token = text.substr(pos, end - pos);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw InputError("malformed integer '" + std::string(text.substr(pos, end - pos)) + "' in vector");
    v.push_back(x);
    pos = end;
  }
  if (expected_size >= 0 && static_cast<int>(v.size()) != expected_size)
    throw InputError("vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(expected_size));
  return v;
}

Json to_json(const Matroid& m) {
  Json bases = Json::array();
  for (Subset b : m.bases_lex()) bases.push_back(to_json(m.ground(), b));
  return {{"ground", to_json(m.ground())}, {"rank", m.rank()}, {"bases", bases}};
}

Matroid matroid_from_json(const Json& j) {
  if (j.is_object() && j.contains("name")) {
    if (!j.at("name").is_string()) throw InputError("\"name\" must be a string");
    return named_matroid(j.at("name").get<std::string>());
  }
  GroundSet ground = ground_from_json(field(j, "ground"));
  const auto rank = as_int(field(j, "rank"), "rank");
  std::vector<Subset> bases;
  for (const auto& b : as_array(field(j, "bases"), "bases")) bases.push_back(subset_from_json(b, ground));
  return Matroid(std::move(ground), static_cast<int>(rank), std::move(bases));
}

Json to_json(const Valuation& nu) {
  std::vector<std::pair<Subset, std::int64_t>> values = nu.finite_values();
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  Json out = Json::array();
  for (const auto& [b, v] : values) out.push_back({{"basis", to_json(nu.ground(), b)}, {"value", v}});
  return {{"ground", to_json(nu.ground())}, {"d", nu.rank()}, {"values", out}};
}

Valuation valuation_from_json(const Json& j) {
  GroundSet ground = ground_from_json(field(j, "ground"));
  const auto d = as_int(field(j, "d"), "d");
  std::map<Subset, std::int64_t> values;
  std::map<Subset, bool> seen;
  for (const auto& entry : as_array(field(j, "values"), "values")) {
    const Subset b = subset_from_json(field(entry, "basis"), ground);
    if (!seen.emplace(b, true).second) throw InputError("basis " + ground.format(b) + " listed twice");
    const ExtInt v = ext_int_from_json(field(entry, "value"));
    if (v.is_finite()) values[b] = v.value();
    else if (cardinality(b) != d) throw InputError("valuation key " + ground.format(b) + " has the wrong size");
  }
  return Valuation(std::move(ground), static_cast<int>(d), values);
}

RatMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? field(j, "rows") : j;
  std::vector<std::vector<Rational>> data;
  for (const auto& row : as_array(rows, "rows")) {
    std::vector<Rational> r;
    for (const auto& x : as_array(row, "matrix row")) r.push_back(rational_from_json(x));
    data.push_back(std::move(r));
  }
  try {
    return RatMatrix::from_rows(data);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json to_json(const RatMatrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(rational_json(a(r, c)));
    rows.push_back(row);
  }
  return {{"rows", rows}};
}

Json to_json(const ModMatrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
    rows.push_back(row);
  }
  return {{"rows", rows}};
}

Json to_json(const WindowFunction& f) {
  Json values = Json::array();
  for (std::size_t idx = 0; idx < f.point_count(); ++idx)
    if (f.value_at_index(idx).is_finite())
      values.push_back({{"x", f.point(idx)}, {"v", f.value_at_index(idx).value()}});
  return {{"n", f.dimension()}, {"lo", f.lo()}, {"hi", f.hi()}, {"values", values}};
}

WindowFunction window_from_json(const Json& j) {
  const auto n = as_int(field(j, "n"), "n");
  WindowFunction f(vector_from_json(field(j, "lo"), static_cast<int>(n)),
                   vector_from_json(field(j, "hi"), static_cast<int>(n)));
  for (const auto& entry : as_array(field(j, "values"), "values")) {
    const IntegerVector x = vector_from_json(field(entry, "x"), static_cast<int>(n));
    if (!f.in_box(x)) throw InputError("window value outside [lo, hi]");
    f.set(x, ext_int_from_json(field(entry, "v")));
  }
  return f;
}

MatroidFlock explicit_flock_from_json(const Json& j) {
  std::map<IntegerVector, std::vector<Subset>> table;
  std::optional<GroundSet> ground;
  int rank = 0;
  for (const auto& entry : as_array(field(j, "entries"), "entries")) {
    Matroid m = matroid_from_json(field(entry, "matroid"));
    if (!ground) {
      ground = m.ground();
      rank = m.rank();
    } else if (m.ground() != *ground || m.rank() != rank) {
      throw InputError("flock entries disagree on the ground set or rank");
    }
    IntegerVector alpha = vector_from_json(field(entry, "alpha"), ground->size());
    if (!table.emplace(std::move(alpha), m.bases()).second) throw InputError("flock entry listed twice");
  }
  if (!ground) throw InputError("flock table has no entries");
  return flock_from_table(std::move(*ground), rank, std::move(table));
}

Json to_json(const LinearizedParam& param) {
  Json coords = Json::array();
  for (const auto& terms : param.coords()) {
    Json row = Json::array();
    for (const auto& t : terms) row.push_back({{"v", param.params()[t.var]}, {"k", t.level}, {"c", t.coeff}});
    coords.push_back(row);
  }
  Json labels = Json::array();
  GroundSet ground(param.coord_labels());
  for (const auto& l : param.coord_labels()) labels.push_back(label_json(ground, ground.index_of(l)));
  return {{"p", param.p()}, {"params", param.params()}, {"coords", coords}, {"labels", labels}};
}

LinearizedParam linearized_from_json(const Json& j, std::uint32_t default_p) {
  const std::uint32_t p = prime_field(j, default_p);
  std::vector<std::string> params;
  for (const auto& s : as_array(field(j, "params"), "params")) {
    if (!s.is_string()) throw InputError("parameter names must be strings");
    params.push_back(s.get<std::string>());
  }
  std::vector<std::vector<FrobeniusTerm>> coords;
  for (const auto& row : as_array(field(j, "coords"), "coords")) {
    std::vector<FrobeniusTerm> terms;
    for (const auto& t : as_array(row, "coordinate")) {
      FrobeniusTerm term;
      const Json& v = field(t, "v");
      if (v.is_string()) {
        auto it = std::find(params.begin(), params.end(), v.get<std::string>());
        if (it == params.end()) throw InputError("unknown parameter '" + v.get<std::string>() + "'");
        term.var = static_cast<int>(it - params.begin());
      } else {
        term.var = static_cast<int>(as_int(v, "v"));
      }
      term.level = t.contains("k") ? static_cast<int>(as_int(t.at("k"), "k")) : 0;
      const std::int64_t c = t.contains("c") ? as_int(t.at("c"), "c") : 1;
      if (c <= 0 || c >= static_cast<std::int64_t>(p))
        throw InputError("coefficient " + std::to_string(c) + " is not a nonzero element of GF(" + std::to_string(p) + ")");
      term.coeff = static_cast<std::uint32_t>(c);
      terms.push_back(term);
    }
    coords.push_back(std::move(terms));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = labels_from_json(j.at("labels"));
  return LinearizedParam(p, std::move(params), std::move(coords), std::move(labels));
}

Json to_json(const ToricRep& rep) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < rep.a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < rep.a.cols(); ++c) row.push_back(big_json(rep.a(r, c)));
    rows.push_back(row);
  }
  Json out = {{"p", rep.p}, {"A", rows}};
  if (!rep.column_labels.empty()) {
    GroundSet ground(rep.column_labels);
    Json labels = Json::array();
    for (const auto& l : rep.column_labels) labels.push_back(label_json(ground, ground.index_of(l)));
    out["labels"] = labels;
  }
  return out;
}

ToricRep toric_from_json(const Json& j, std::uint32_t default_p) {
  ToricRep rep;
  rep.p = prime_field(j, default_p);
  rep.a = to_int_matrix(matrix_from_json(field(j, "A")));
  if (j.contains("labels")) rep.column_labels = labels_from_json(j.at("labels"));
  return rep;
}

Json to_json(const BasisCheck& check, const GroundSet& ground) {
  switch (check.kind) {
    case BasisCheck::Kind::kValid: return {{"valid", true}};
    case BasisCheck::Kind::kEmpty: return {{"valid", false}, {"reason", "no bases"}};
    case BasisCheck::Kind::kNoExchange:
      return {{"valid", false},
              {"reason", "exchange"},
              {"B", to_json(ground, check.b)},
              {"B_prime", to_json(ground, check.b_prime)},
              {"i", label_json(ground, check.i)}};
  }
  return {};
}

Json to_json(const ValuationCheck& check, const GroundSet& ground) {
  switch (check.kind) {
    case ValuationCheck::Kind::kValid: return {{"valid", true}};
    case ValuationCheck::Kind::kNoFiniteValue: return {{"valid", false}, {"reason", "no finite value"}};
    case ValuationCheck::Kind::kNoExchange:
      return {{"valid", false},
              {"reason", "exchange"},
              {"B", to_json(ground, check.b)},
              {"B_prime", to_json(ground, check.b_prime)},
              {"i", label_json(ground, check.i)}};
  }
  return {};
}

Json to_json(const TrivialityResult& result) {
  if (!result.trivial) return {{"trivial", false}};
  Json rational = Json::array();
  for (const auto& q : result.rational_solution) rational.push_back(rational_json(q));
  return {{"trivial", true}, {"witness", result.witness}, {"rational_solution", rational}};
}

Json to_json(const LConvexReport& report) {
  Json out = {{"valid", report.valid},
              {"pairs_checked", report.pairs_checked},
              {"shifts_checked", report.shifts_checked},
              {"shifts_skipped", report.shifts_skipped}};
  if (report.slope) out["slope"] = *report.slope;
  if (!report.valid) {
    out["violation"] = {{"x", report.x}};
    if (!report.y.empty()) out["violation"]["y"] = report.y;
  }
  return out;
}

Json to_json(const MConvexReport& report) {
  Json out = {{"valid", report.valid}, {"pairs_checked", report.pairs_checked}};
  if (!report.valid) out["violation"] = {{"x", report.x}, {"y", report.y}, {"i", report.i}};
  return out;
}

Json to_json(const FlockWindowReport& report, const GroundSet& ground) {
  Json out = {{"ok", report.ok()},
              {"radius", report.radius},
              {"mf1", counts(report.mf1_checked, report.mf1_passed)},
              {"mf2", counts(report.mf2_checked, report.mf2_passed)},
              {"skipped", report.skipped}};
  if (report.set_checked > 0) out["mf1_set"] = counts(report.set_checked, report.set_passed);
  if (report.first_violation) {
    const auto& v = *report.first_violation;
    out["violation"] = {{"axiom", v.axiom},
                        {"alpha", v.alpha},
                        {"elements", to_json(ground, v.elements)},
                        {"left", to_json(v.left)},
                        {"right", to_json(v.right)}};
  }
  return out;
}

Json to_json(const Extraction& extraction) {
  Json hits = Json::array();
  for (Subset b : extraction.cutoff_hits) hits.push_back(to_json(extraction.valuation.ground(), b));
  return {{"valuation", to_json(extraction.valuation)},
          {"cutoff_hits", hits},
          {"round_trip_ok", extraction.round_trip_ok},
          {"verified_radius", extraction.verified_radius}};
}

Json to_json(const FrobeniusReport& report) {
  Json out = {{"ok", report.ok()},
              {"ff1", counts(report.ff1_checked, report.ff1_passed)},
              {"ff2", counts(report.ff2_checked, report.ff2_passed)},
              {"rank", counts(report.rank_checked, report.rank_passed)}};
  if (report.has_violation) {
    out["violation"] = {{"axiom", report.axiom}, {"alpha", report.alpha}};
    if (report.element >= 0) out["violation"]["element"] = report.element;
  }
  return out;
}

Json to_json(const CellSystem& cell) {
  const GroundSet& ground = cell.reference().ground();
  Json constraints = Json::array();
  for (const auto& c : cell.constraints())
    constraints.push_back({{"i", label_json(ground, c.i)}, {"j", label_json(ground, c.j)}, {"bound", c.bound}});
  return {{"reference", to_json(cell.reference())}, {"constraints", constraints}, {"dimension", cell.dimension()}};
}

Json to_json(const LeaderScan& scan) {
  Json leaders = Json::array();
  for (const auto& l : scan.leaders) leaders.push_back({{"alpha", l.representative}, {"matroid", to_json(l.matroid)}});
  Json anchor = scan.leaders.empty() ? Json(scan.anchor) : label_json(scan.leaders.front().matroid.ground(), scan.anchor);
  return {{"radius", scan.radius}, {"anchor", anchor}, {"complete", scan.complete}, {"leaders", leaders}};
}

Json to_json(const std::vector<CellSummary>& cells) {
  Json out = Json::array();
  for (const auto& c : cells)
    out.push_back({{"alpha", c.leader.representative}, {"dimension", c.dimension}, {"matroid", to_json(c.leader.matroid)}});
  return out;
}

Json to_json(const RigidityVerdict& verdict, const Matroid& m) {
  Json out = {{"verdict", to_string(verdict.kind)},
              {"solution_dimension", verdict.solution_dimension},
              {"trivial_dimension", verdict.trivial_dimension}};
  if (verdict.witness) out["witness"] = to_json(*verdict.witness);
  if (!verdict.direction.empty()) {
    Json dir = Json::array();
    const auto& bases = m.bases();
    for (std::size_t k = 0; k < bases.size() && k < verdict.direction.size(); ++k)
      if (verdict.direction[k] != 0)
        dir.push_back({{"basis", to_json(m.ground(), bases[k])}, {"weight", rational_json(verdict.direction[k])}});
    out["direction"] = dir;
  }
  return out;
}

Json to_json(const LazarsonCharReport& report) {
  return {{"n", report.n},
          {"p", report.p},
          {"determinant", big_json(report.determinant)},
          {"expected", big_json(report.expected)},
          {"formula_holds", report.formula_holds},
          {"divisible", report.divisible},
          {"p_divides_n", report.p_divides_n}};
}

}  // namespace matflock::json
