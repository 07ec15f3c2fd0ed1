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

#include "knotdec/decomposition.hpp"
#include "knotdec/projection.hpp"

namespace knotdec {

struct TreeVertex {
  std::vector<int> edges;    // counter-clockwise
  std::vector<int> sectors;  // sectors[i] between edges[i-1] and edges[i]

  int degree() const { return static_cast<int>(edges.size()); }
  int weight() const;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

// b == -1 marks a free edge.
struct TreeEdge {
  int a = 0;
  int b = -1;

  bool free() const { return b < 0; }

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

// Weighted planar tree. Sector counts are max(1, degree).
struct PlanarTree {
  std::vector<TreeVertex> vertices;
  std::vector<TreeEdge> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int other_end(int edge, int v) const { return edges[edge].a == v ? edges[edge].b : edges[edge].a; }
  int free_edge_count() const;
  // Throws MalformedInput when the structure is not a weighted planar tree.
  void validate() const;

  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
};

// Tree literal grammar: see docs/tree_literal.md.
PlanarTree parse_tree(std::string_view text);
// Literal rooted at `root`, reading the root's order from `start`.
std::string format_tree(const PlanarTree& t, int root = 0, int start = 0);

// Reverses every cyclic order.
PlanarTree reflect(const PlanarTree& t);
// Reverses the cyclic order at one vertex.
void reverse_vertex(PlanarTree& t, int v);

PlanarTree canonical_tree(const PlanarTree& t);
std::string canonical_literal(const PlanarTree& t);

struct AbstractTree {
  std::vector<int> weight;
  std::vector<std::pair<int, int>> edges;  // internal edges only
  std::vector<int> free_edges;             // per vertex

  friend bool operator==(const AbstractTree&, const AbstractTree&) = default;
};

AbstractTree abstract_tree(const PlanarTree& t);

struct AlternatingVerdict {
  bool alternating = false;
  std::vector<int> signs;  // +1 / -1 per vertex when alternating
};

AlternatingVerdict is_alternating_tree(const AbstractTree& a);
// Throws NotAlternating.
int min_crossing_number(const AbstractTree& a);

enum class TreeShape { SingletonVertex, Bamboo, General };
std::string_view to_string(TreeShape s);
TreeShape classify_shape(const PlanarTree& t);

// Replaces a free edge by a new leaf carrying a twist of the given weight
// (|weight| >= 2). Throws InvalidMove otherwise.
PlanarTree close_free_edge(const PlanarTree& t, int edge, int weight);

// Throws InvalidWeights when a vertex violates the intermediate weight
// properties or Rule 4.
void check_weights(const PlanarTree& t);

// Closed trees only. Throws FreeEdges / InvalidWeights.
LinkProjection realize(const PlanarTree& t);

struct FatPointChoice {
  int piece = 0;
  int domain = 0;  // 0 or 1
};

// Encodes the arborescent component of `dec` that contains choice.piece.
// Throws NotArborescent when that piece is a jewel.
PlanarTree encode(const LinkProjection& p, const Decomposition& dec, FatPointChoice choice = {});

std::string to_dot(const PlanarTree& t);

}  // namespace knotdec
