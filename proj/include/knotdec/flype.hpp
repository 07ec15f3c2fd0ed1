// Copyright 2026 The knotdec Authors
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
#include <vector>

#include "knotdec/bs_tree.hpp"
#include "knotdec/decomposition.hpp"

namespace knotdec {

enum class Angle { Ccw, Cw };

// Moves one crossing of sector i at vertex V into sector j. Sectors are
// 0-based here; the text form is 1-based (vertices in preorder).
struct FlypeMove {
  int vertex = 0;
  int from = 0;
  int to = 0;
  Angle angle = Angle::Ccw;
};

// `flype V=<id> i=<sector> j=<sector> angle=<cw|ccw>`; the leading word is
// optional.
FlypeMove parse_move(std::string_view text);
std::string format_move(const FlypeMove& m);

// Tree edges swept by the move, in order.
std::vector<int> angle_edges(const PlanarTree& t, const FlypeMove& m);

// Throws InvalidMove.
PlanarTree apply_flype(const PlanarTree& t, const FlypeMove& m);
PlanarTree old_flype(const PlanarTree& t, int v);

// Vertices reversed by apply_flype: odd distance from V inside the angle.
std::vector<int> flype_reversed_vertices(const PlanarTree& t, const FlypeMove& m);

// All valid efficient moves (both angles).
std::vector<FlypeMove> efficient_moves(const PlanarTree& t);
bool has_flype(const PlanarTree& t);

// Canonical members of the flype class, sorted by literal. Throws
// BudgetExceeded when the class outgrows `budget`.
std::vector<PlanarTree> flype_class(const PlanarTree& t, int budget);

std::vector<int> normalize_rule4(std::vector<int> sectors);
PlanarTree normalize_rule4(const PlanarTree& t);

struct FlypeOrbit {
  int piece = 0;
  std::vector<int> crossings;
};

// One orbit per twisted band piece carrying crossings.
std::vector<FlypeOrbit> flype_orbits(const Decomposition& dec);

}  // namespace knotdec
