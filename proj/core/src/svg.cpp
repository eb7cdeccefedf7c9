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

#include "matflock/svg.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <sstream>

#include "matflock/cells.hpp"
#include "matflock/errors.hpp"

namespace matflock {
namespace {

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
                                    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295"};

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string bases_text(const GroundSet& ground, const std::vector<Subset>& bases) {
  std::string out;
  for (Subset b : bases) {
    if (!out.empty()) out += " ";
    out += ground.format(b);
  }
  return escape(out);
}

}  // namespace

std::string render_cells_svg(const Valuation& nu, const SvgOptions& options) {
  const int n = nu.size();
  if (n < 2 || n > 4) throw InputError("cell pictures need 2 to 4 elements, got " + std::to_string(n));
  if (options.radius < 0 || options.radius > 50) throw InputError("picture radius must lie in [0, 50]");
  if (options.anchor < 0 || options.anchor >= n) throw InputError("anchor out of range");
  int fixed = options.fixed;
  if (n == 4) {
    if (fixed < 0) fixed = options.anchor == n - 1 ? n - 2 : n - 1;
    if (fixed == options.anchor || fixed >= n) throw InputError("fixed coordinate must differ from the anchor");
  } else {
    fixed = -1;
  }
  std::vector<int> free;
  for (int i = 0; i < n; ++i)
    if (i != options.anchor && i != fixed) free.push_back(i);
  const int r = options.radius, cs = options.cell_size;
  const int side = 2 * r + 1;
  const int cols = side, rows = free.size() == 2 ? side : 1;
  const int margin = 50;
  const int legend_top = margin + rows * cs + 30;

  std::map<std::vector<Subset>, int> colour;
  std::map<std::vector<Subset>, int> dimension;
  struct Dot {
    int x, y, c;
    bool vertex;
  };
  std::vector<Dot> dots;
  IntegerVector alpha(n, 0);
  for (int row = 0; row < rows; ++row)
    for (int col = 0; col < cols; ++col) {
      alpha[free[0]] = col - r;
      if (free.size() == 2) alpha[free[1]] = r - row;  // larger values on top
      auto bases = bases_at(nu, alpha);
      auto [it, inserted] = colour.try_emplace(bases, static_cast<int>(colour.size()));
      if (inserted) dimension[bases] = cell_system_for(nu, Matroid(nu.ground(), nu.rank(), bases)).dimension();
      dots.push_back({margin + col * cs + cs / 2, margin + row * cs + cs / 2, it->second, dimension[bases] == 0});
    }

  const int width = 2 * margin + cols * cs + 200;
  const int height = legend_top + 20 * static_cast<int>(colour.size()) + margin;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const GroundSet& ground = nu.ground();
  std::string title = "alpha_" + ground.label(options.anchor) + " = 0";
  if (fixed >= 0) title += ", alpha_" + ground.label(fixed) + " = 0";
  svg << "<text x=\"" << margin << "\" y=\"20\">" << escape(title) << "</text>\n";
  svg << "<text x=\"" << margin + cols * cs / 2 << "\" y=\"" << margin + rows * cs + 20
      << "\" text-anchor=\"middle\">alpha_" << escape(ground.label(free[0])) << "</text>\n";
  if (free.size() == 2)
    svg << "<text x=\"15\" y=\"" << margin + rows * cs / 2 << "\" transform=\"rotate(-90 15 " << margin + rows * cs / 2
        << ")\" text-anchor=\"middle\">alpha_" << escape(ground.label(free[1])) << "</text>\n";
  for (const auto& d : dots) {
    const char* fill = kPalette[d.c % std::size(kPalette)];
    svg << "<circle cx=\"" << d.x << "\" cy=\"" << d.y << "\" r=\"" << cs / 4 << "\" fill=\"" << fill << "\"";
    if (d.vertex) svg << " stroke=\"black\" stroke-width=\"3\"";
    svg << "/>\n";
  }
  std::vector<std::pair<int, std::vector<Subset>>> legend;
  for (const auto& [bases, c] : colour) legend.emplace_back(c, bases);
  std::sort(legend.begin(), legend.end());
  int y = legend_top;
  for (const auto& [c, bases] : legend) {
    svg << "<circle cx=\"" << margin + 6 << "\" cy=\"" << y - 4 << "\" r=\"6\" fill=\""
        << kPalette[c % std::size(kPalette)] << "\"";
    if (dimension[bases] == 0) svg << " stroke=\"black\" stroke-width=\"2\"";
    svg << "/>\n<text x=\"" << margin + 18 << "\" y=\"" << y << "\">" << bases_text(ground, bases) << "</text>\n";
    y += 20;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace matflock
