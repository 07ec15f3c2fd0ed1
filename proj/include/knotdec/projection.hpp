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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "knotdec/error.hpp"

namespace knotdec {

// A dart is one of the four half-edges at a crossing. Dart 4*x+s sits at
// crossing x in slot s; slots run counter-clockwise. Odd slots carry the
// over-thread, even slots the under-thread.
using Dart = int;

constexpr int crossing_of(Dart d) { return d >> 2; }
constexpr int slot_of(Dart d) { return d & 3; }
constexpr Dart dart_at(int crossing, int slot) { return 4 * crossing + (slot & 3); }
constexpr Dart rotate_ccw(Dart d, int steps = 1) {
  return (d & ~3) | ((d + steps) & 3);
}
constexpr bool is_over(Dart d) { return (d & 1) != 0; }

using CrossingSet = boost::dynamic_bitset<>;

enum class Listing : std::uint8_t { Lambda, Delta };

enum class Color : std::uint8_t { Black, White };

// A face of the sphere complement. `boundary` holds the darts d_0, d_1, ...
// whose edges are traversed clockwise around the face; the corner visited
// after edge d_i is the one swept counter-clockwise from opposite(d_i).
struct Face {
  int id = 0;
  std::vector<Dart> boundary;
};

struct Checkerboard {
  std::vector<Color> color;  // indexed by face id
};

// Link projection on S^2: a 4-valent planar combinatorial map with
// over/under data. Immutable once built.
class LinkProjection {
 public:
  // Validates the matching (involution, planar, connected, c >= 1).
  static LinkProjection from_matching(std::vector<Dart> opposite);

  int crossing_count() const { return static_cast<int>(opposite_.size()) / 4; }
  int edge_count() const { return 2 * crossing_count(); }
  Dart opposite(Dart d) const { return opposite_[d]; }
  const std::vector<Dart>& matching() const { return opposite_; }

  // Edges are numbered by the order of their smaller dart.
  int edge_of(Dart d) const { return edge_of_[d]; }
  std::pair<Dart, Dart> edge_darts(int edge) const { return edges_[edge]; }

  const std::vector<Face>& faces() const { return faces_; }
  // Face containing the corner between d and rotate_ccw(d).
  int face_of_corner(Dart d) const { return corner_face_[d]; }
  // Face on the right when walking the edge out of d.
  int face_right_of(Dart d) const { return corner_face_[opposite_[d]]; }

  // Returns a copy with the over/under data of crossing x exchanged.
  LinkProjection with_switched_crossing(int crossing) const;
  // Returns a copy whose crossings alternate along every strand, keeping the
  // shadow. Crossing 0 keeps its data.
  LinkProjection alternating_version() const;
  // Mirror of the underlying sphere: all rotations reversed.
  LinkProjection reflected() const;

  friend bool operator==(const LinkProjection& a, const LinkProjection& b) {
    return a.opposite_ == b.opposite_;
  }

 private:
  explicit LinkProjection(std::vector<Dart> opposite);

  std::vector<Dart> opposite_;
  std::vector<int> edge_of_;
  std::vector<std::pair<Dart, Dart>> edges_;
  std::vector<Face> faces_;
  std::vector<int> corner_face_;
};

// PD text: X(a,b,c,d) records, labels counter-clockwise starting at the
// incoming under-dart. Records may be separated by commas, whitespace or
// newlines; '#' starts a comment; a leading "PD[" / "PD(" wrapper and square
// brackets are accepted.
LinkProjection parse_pd(std::string_view text);

// Deterministic PD emission: edges are numbered along the strands of the
// canonical relabeling so that isomorphic projections print identically.
std::string serialize_pd(const LinkProjection& p);

// Face list (same as p.faces(), provided as a free function for symmetry
// with the other queries).
const std::vector<Face>& faces(const LinkProjection& p);

bool is_connected_matching(const std::vector<Dart>& opposite);
int face_count_of_matching(const std::vector<Dart>& opposite);

// No simple closed curve meets the projection in exactly two points with
// crossings on both sides.
bool is_prime(const LinkProjection& p);

// Label of the corner between d and rotate_ccw(d).
std::vector<Listing> listing_labels(const LinkProjection& p);
bool is_monotyp(const LinkProjection& p, const Face& f);

// Strand-alternation check, cross-validated against the monotyp criterion.
// Throws InternalInconsistency if the two disagree.
bool is_alternating(const LinkProjection& p);

Checkerboard checkerboard(const LinkProjection& p);
bool is_proper_coloring(const LinkProjection& p, const Checkerboard& cb);

// Canonical form of the map (with crossing data) under relabeling and the
// two global orientations. Two projections are isomorphic iff their codes
// are equal.
std::vector<int> canonical_code(const LinkProjection& p);
// Same, ignoring over/under data.
std::vector<int> canonical_shadow_code(const std::vector<Dart>& opposite);
bool isomorphic(const LinkProjection& a, const LinkProjection& b);
// Canonical relabeling: the projection rebuilt in canonical dart order.
LinkProjection canonical_relabeling(const LinkProjection& p);

// ---------------------------------------------------------------------------
// PlanarMap: a 4-valent view of (part of) a projection in which each node
// is either an original crossing or a contracted disc ("hole"). Darts keep
// their original ids; only darts of the view are present.

struct MapNode {
  std::array<Dart, 4> darts{};  // counter-clockwise
  int crossing = -1;            // original crossing id, or -1 for a hole
  int hole = -1;                // caller-defined tag for holes
  CrossingSet members;          // original crossings represented
};

class PlanarMap {
 public:
  PlanarMap(const LinkProjection& p, std::vector<MapNode> nodes);

  // The full projection, one node per crossing.
  static PlanarMap of(const LinkProjection& p);
  // Contracts every set in `holes` (each connected, with exactly 4 outgoing
  // edges) and keeps every other crossing of `keep` as a node.
  static PlanarMap contract(const LinkProjection& p, const CrossingSet& keep,
                            const std::vector<std::pair<CrossingSet, int>>& holes);

  const LinkProjection& projection() const { return *proj_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const MapNode& node(int i) const { return nodes_[i]; }
  const std::vector<MapNode>& nodes() const { return nodes_; }
  bool has_dart(Dart d) const { return node_of_[d] >= 0; }
  int node_of(Dart d) const { return node_of_[d]; }
  int position_of(Dart d) const { return pos_of_[d]; }
  Dart next(Dart d) const {
    return nodes_[node_of_[d]].darts[(pos_of_[d] + 1) & 3];
  }
  Dart prev(Dart d) const {
    return nodes_[node_of_[d]].darts[(pos_of_[d] + 3) & 3];
  }
  Dart opposite(Dart d) const { return proj_->opposite(d); }

  // Faces traced clockwise, as in LinkProjection::faces().
  const std::vector<std::vector<Dart>>& faces() const { return faces_; }
  int face_of_corner(Dart d) const { return corner_face_[d]; }
  // All darts of the view, each edge once (smaller dart first).
  std::vector<std::pair<Dart, Dart>> edges() const;

 private:
  const LinkProjection* proj_;
  std::vector<MapNode> nodes_;
  std::vector<int> node_of_;
  std::vector<int> pos_of_;
  std::vector<std::vector<Dart>> faces_;
  std::vector<int> corner_face_;
};

// Cut darts of a connected crossing set, in counter-clockwise order around
// the set (the rotation of the set contracted to a point).
std::vector<Dart> boundary_rotation(const LinkProjection& p, const CrossingSet& s);

}  // namespace knotdec
