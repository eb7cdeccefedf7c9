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

#include "matflock/valuation.hpp"

namespace matflock {

struct SvgOptions {
  int anchor = 0;   // α_anchor = 0
  int fixed = -1;   // a second coordinate pinned to 0 when |E| = 4
  int radius = 3;   // free coordinates range over [-radius, radius]
  int cell_size = 36;
};

/// Draws the lattice points of a 2-D slice (1-D when |E| = 2) of α-space,
/// coloured by M^ν_α, with zero-dimensional cells circled. Requires
/// 2 <= |E| <= 4; throws InputError otherwise.
std::string render_cells_svg(const Valuation& nu, const SvgOptions& options);

}  // namespace matflock
