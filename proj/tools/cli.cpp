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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "matflock/algebraic.hpp"
#include "matflock/cells.hpp"
#include "matflock/discrete_convex.hpp"
#include "matflock/errors.hpp"
#include "matflock/flock.hpp"
#include "matflock/json_io.hpp"
#include "matflock/rigidity.hpp"
#include "matflock/svg.hpp"
#include "matflock/valuation.hpp"

namespace matflock::cli {
namespace {

using json::Json;

struct Options {
  std::string input;
  std::string out;
  std::string alpha;
  std::string beta;
  std::string lo;
  std::string hi;
  std::string anchor;
  std::string fix;
  std::string variant = "full";
  std::optional<int> radius;
  std::uint32_t p = 0;
  int n = 0;
  int cutoff = 16;
  int verify_radius = 2;
  int jobs = 1;
  bool svg = false;
  bool set_version = false;
  bool tangent = false;
  bool cutoff_given = false;
};

Json read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return json::parse_text(buffer.str());
  }
  return json::parse_file(path);
}

bool looks_like_valuation(const Json& j) {
  if (!j.is_object() || !j.contains("values") || !j.contains("d")) return false;
  const Json& v = j.at("values");
  return v.is_array() && (v.empty() || (v.front().is_object() && v.front().contains("basis")));
}

struct LoadedFlock {
  MatroidFlock flock;
  std::string kind;
};

LoadedFlock load_flock(const Json& j, std::uint32_t p) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (j.contains("entries")) return {json::explicit_flock_from_json(j), "explicit"};
  if (j.contains("A")) return {flock_from_toric(json::toric_from_json(j, p)), "toric"};
  if (j.contains("coords")) return {flock_from_linearized(json::linearized_from_json(j, p)), "linearized"};
  if (looks_like_valuation(j)) return {flock_from_valuation(json::valuation_from_json(j)), "valuation"};
  throw InputError("cannot tell the flock source: expected \"entries\", \"A\", \"coords\" or a valuation");
}

int element_index(const GroundSet& ground, const std::string& label, int fallback) {
  return label.empty() ? fallback : ground.index_of(label);
}

IntegerVector box_bound(const std::string& text, int n, std::int64_t fallback) {
  if (text.empty()) return IntegerVector(n, fallback);
  IntegerVector v = json::parse_vector(text);
  if (v.size() == 1 && n != 1) return IntegerVector(n, v.front());
  if (static_cast<int>(v.size()) != n) throw InputError("box bound needs " + std::to_string(n) + " entries");
  return v;
}

IntegerVector alpha_or_zero(const std::string& text, int n) {
  return text.empty() ? IntegerVector(n, 0) : json::parse_vector(text, n);
}

void require_valid(const Valuation& nu) {
  const ValuationCheck check = check_valuation_axioms(nu);
  if (!check.valid()) {
    if (check.kind == ValuationCheck::Kind::kNoFiniteValue) throw DomainError("valuation violates (V1): no finite value");
    throw DomainError("valuation violates (V2) at B = " + nu.ground().format(check.b) + ", B' = " +
                      nu.ground().format(check.b_prime) + ", i = " + nu.ground().label(check.i));
  }
}

Valuation load_valuation(const Options& o, bool validate = true) {
  Valuation nu = json::valuation_from_json(read_input(o.input));
  if (validate) require_valid(nu);
  return nu;
}

// Each command returns the document to print (JSON text or SVG).
using Command = std::function<std::string(const Options&)>;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string cmd_check_matroid(const Options& o) {
  const Json j = read_input(o.input);
  if (j.is_object() && j.contains("name")) {
    const Matroid m = json::matroid_from_json(j);
    return dump(json::to_json(check_basis_axioms(m.ground(), m.rank(), m.bases()), m.ground()));
  }
  const GroundSet ground = json::ground_from_json(j.at("ground"));
  if (!j.contains("rank") || !j.at("rank").is_number_integer()) throw InputError("missing integer field \"rank\"");
  if (!j.contains("bases") || !j.at("bases").is_array()) throw InputError("missing array field \"bases\"");
  std::vector<Subset> bases;
  for (const auto& b : j.at("bases")) bases.push_back(json::subset_from_json(b, ground));
  return dump(json::to_json(check_basis_axioms(ground, j.at("rank").get<int>(), bases), ground));
}

std::string cmd_check_valuation(const Options& o) {
  const Valuation nu = load_valuation(o, false);
  return dump(json::to_json(check_valuation_axioms(nu), nu.ground()));
}

std::string cmd_support(const Options& o) { return dump(json::to_json(support_matroid(load_valuation(o)))); }

std::string cmd_matroid_at(const Options& o) {
  const Valuation nu = load_valuation(o);
  return dump(json::to_json(matroid_at(nu, alpha_or_zero(o.alpha, nu.size()))));
}

std::string cmd_g_value(const Options& o) {
  const Valuation nu = load_valuation(o);
  const IntegerVector alpha = alpha_or_zero(o.alpha, nu.size());
  return dump(Json{{"alpha", alpha}, {"g", g_value(nu, alpha)}});
}

std::string cmd_cells(const Options& o) {
  const Valuation nu = load_valuation(o);
  const int anchor = element_index(nu.ground(), o.anchor, 0);
  if (o.svg) {
    SvgOptions svg;
    svg.anchor = anchor;
    svg.fixed = element_index(nu.ground(), o.fix, -1);
    svg.radius = o.radius.value_or(3);
    return render_cells_svg(nu, svg);
  }
  if (!o.beta.empty()) return dump(json::to_json(cell_inequalities(nu, json::parse_vector(o.beta, nu.size()))));
  const LeaderScan scan = enumerate_leaders(nu, o.radius, anchor);
  Json out = {{"radius", scan.radius}, {"complete", scan.complete}, {"cells", json::to_json(cell_complex(scan, nu))}};
  return dump(out);
}

std::string cmd_leaders(const Options& o) {
  const Valuation nu = load_valuation(o);
  return dump(json::to_json(enumerate_leaders(nu, o.radius, element_index(nu.ground(), o.anchor, 0))));
}

std::string cmd_fenchel(const Options& o) {
  const Json j = read_input(o.input);
  std::optional<WindowFunction> h;
  if (looks_like_valuation(j)) {
    const Valuation nu = json::valuation_from_json(j);
    require_valid(nu);
    h = point_function(nu);
  } else {
    h = json::window_from_json(j);
  }
  const int n = h->dimension();
  return dump(json::to_json(fenchel_dual(*h, box_bound(o.lo, n, -3), box_bound(o.hi, n, 3))));
}

std::string cmd_check_flock(const Options& o) {
  LoadedFlock loaded = load_flock(read_input(o.input), o.p);
  const int radius = o.radius.value_or(2);
  if (radius < 1) throw InputError("--radius must be at least 1");
  Json out = json::to_json(check_flock_axioms(loaded.flock, radius, o.set_version), loaded.flock.ground());
  out["source"] = loaded.kind;
  return dump(out);
}

std::string cmd_extract(const Options& o) {
  LoadedFlock loaded = load_flock(read_input(o.input), o.p);
  ExtractOptions options;
  options.cutoff = o.cutoff_given ? o.cutoff : loaded.flock.suggested_cutoff();
  options.verify_radius = o.verify_radius;
  if (options.cutoff < 1) throw InputError("--cutoff must be at least 1");
  Json out = json::to_json(extract_valuation(loaded.flock, options));
  out["source"] = loaded.kind;
  out["cutoff"] = options.cutoff;
  return dump(out);
}

std::string cmd_lindstrom_toric(const Options& o) {
  return dump(json::to_json(lindstrom_toric(json::toric_from_json(read_input(o.input), o.p))));
}

std::string cmd_toric_matroid_at(const Options& o) {
  const ToricRep rep = json::toric_from_json(read_input(o.input), o.p);
  return dump(json::to_json(toric_matroid_at(rep, alpha_or_zero(o.alpha, static_cast<int>(rep.a.cols())))));
}

std::string cmd_flock_from_linearized(const Options& o) {
  const LinearizedParam param = json::linearized_from_json(read_input(o.input), o.p);
  const MatroidFlock flock = flock_from_linearized(param);
  const IntegerVector alpha = alpha_or_zero(o.alpha, flock.size());
  if (o.tangent) {
    // The tangent and the twisted parametrization are in coordinate order.
    IntegerVector by_coord(alpha.size());
    for (int c = 0; c < param.size(); ++c) by_coord[c] = alpha[flock.ground().index_of(param.coord_labels()[c])];
    const LinearizedParam shifted = linearized_shift(param, by_coord);
    Json out = {{"param", json::to_json(shifted)},
                {"jacobian", json::to_json(linearized_tangent(shifted))},
                {"tangent", json::to_json(tangent_space(shifted))}};
    return dump(out);
  }
  return dump(json::to_json(flock.at(alpha)));
}

std::string cmd_check_ff(const Options& o) {
  const LinearizedParam param = json::linearized_from_json(read_input(o.input), o.p);
  const int radius = o.radius.value_or(2);
  if (radius < 1) throw InputError("--radius must be at least 1");
  return dump(json::to_json(check_frobenius_axioms(param, radius)));
}

std::string cmd_rigidity(const Options& o) {
  const Matroid m = json::matroid_from_json(read_input(o.input));
  const BasisCheck check = check_basis_axioms(m.ground(), m.rank(), m.bases());
  if (!check.valid()) throw DomainError("input is not a matroid (basis exchange fails)");
  return dump(json::to_json(rigidity_certificate(m), m));
}

std::string cmd_lazarson(const Options& o) {
  if (o.variant != "full" && o.variant != "minus") throw InputError("--variant must be full or minus");
  return dump(json::to_json(lazarson(o.n, o.variant == "full" ? LazarsonVariant::kFull : LazarsonVariant::kMinus)));
}

std::string cmd_lazarson_check(const Options& o) {
  if (o.p == 0) throw InputError("--p is required");
  return dump(json::to_json(lazarson_char_check(o.n, o.p)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid flocks, valuations and their algebraic sources", "matflock"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out, "Write the result to this file instead of stdout");
  app.add_option("--jobs", o.jobs, "Worker threads for window scans")->check(CLI::Range(1, 1024));

  std::vector<std::pair<CLI::App*, Command>> commands;
  auto command = [&](const char* name, const char* help, Command fn, bool takes_input = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (takes_input) sub->add_option("input", o.input, "Input JSON file ('-' for stdin)")->required();
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };
  auto alpha_option = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "Integer vector in ground-set order, e.g. \"0,-2,-2,0\"");
  };
  auto prime_option = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Characteristic (prime)");
  };
  auto radius_option = [&](CLI::App* sub, const char* help) { sub->add_option("--radius", o.radius, help); };

  command("check-matroid", "Check the basis axioms", cmd_check_matroid);
  command("check-valuation", "Check the valuation axioms (V1), (V2)", cmd_check_valuation);
  command("support", "Support matroid of a valuation", cmd_support);
  alpha_option(command("matroid-at", "The matroid M^nu_alpha", cmd_matroid_at));
  alpha_option(command("g-value", "g^nu(alpha)", cmd_g_value));
  {
    auto* sub = command("cells", "Cell of --beta, or the cell complex of a leader scan", cmd_cells);
    sub->add_option("--beta", o.beta, "Reference point of a single cell");
    radius_option(sub, "Window radius");
    sub->add_option("--anchor", o.anchor, "Element whose coordinate is fixed to 0");
    sub->add_flag("--svg", o.svg, "Emit an SVG picture of a 2-D slice");
    sub->add_option("--fix", o.fix, "Second element fixed to 0 in the SVG slice (|E| = 4)");
  }
  {
    auto* sub = command("leaders", "Distinct matroids M^nu_alpha on a window", cmd_leaders);
    radius_option(sub, "Window radius (default (n-1)*spread+1)");
    sub->add_option("--anchor", o.anchor, "Element whose coordinate is fixed to 0");
  }
  {
    auto* sub = command("fenchel", "Legendre-Fenchel dual of a window function or valuation", cmd_fenchel);
    sub->add_option("--lo", o.lo, "Lower corner of the dual box (default -3)");
    sub->add_option("--hi", o.hi, "Upper corner of the dual box (default 3)");
  }
  {
    auto* sub = command("check-flock", "Check (MF1), (MF2) on [-r, r]^E", cmd_check_flock);
    radius_option(sub, "Window radius (default 2)");
    sub->add_flag("--set", o.set_version, "Also check M_a / I = M_(a+e_I) \\ I for every I");
    prime_option(sub);
  }
  {
    auto* sub = command("extract-valuation", "The valuation of a matroid flock", cmd_extract);
    sub->add_option("--cutoff", o.cutoff, "Largest k tried along k*e_B")->each([&](const std::string&) {
      o.cutoff_given = true;
    });
    sub->add_option("--verify-radius", o.verify_radius, "Round-trip verification radius (0 skips)")
        ->check(CLI::Range(0, 16));
    prime_option(sub);
  }
  prime_option(command("lindstrom-toric", "nu(B) = val_p(det A_B)", cmd_lindstrom_toric));
  {
    auto* sub = command("toric-matroid-at", "Tangent matroid of the twisted toric variety", cmd_toric_matroid_at);
    alpha_option(sub);
    prime_option(sub);
  }
  {
    auto* sub = command("flock-from-linearized", "Matroid of the tangent space of alpha X", cmd_flock_from_linearized);
    alpha_option(sub);
    prime_option(sub);
    sub->add_flag("--tangent", o.tangent, "Print the twisted parametrization, its Jacobian at 0 and its tangent space instead");
  }
  {
    auto* sub = command("check-ff", "Check (FF1), (FF2) for a linearized parametrization", cmd_check_ff);
    radius_option(sub, "Window radius (default 2)");
    prime_option(sub);
  }
  command("rigidity", "Rigidity certificate from the exchange equations", cmd_rigidity);
  {
    auto* sub = command("lazarson", "The Lazarson matroid M_n or M_n^-", cmd_lazarson, false);
    sub->add_option("--n", o.n, "Index n >= 2")->required();
    sub->add_option("--variant", o.variant, "full or minus");
  }
  {
    auto* sub = command("lazarson-check", "det of the y-columns against n(-1)^n", cmd_lazarson_check, false);
    sub->add_option("--n", o.n, "Index n >= 2")->required();
    sub->add_option("--p", o.p, "Prime")->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string document;
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) document = fn(o);
    if (o.out.empty()) {
      out << document;
    } else {
      std::ofstream file(o.out);
      if (!file) throw InputError("cannot write " + o.out);
      file << document;
    }
    return 0;
  } catch (const InputError& e) {
    err << "matflock: input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "matflock: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "matflock: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace matflock::cli
