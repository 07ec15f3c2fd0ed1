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
#include <string>
#include <string_view>
#include <vector>

#include "knotdec/projection.hpp"

namespace knotdec {

// A point where a curve crosses the projection: the edge, and the ordinal of
// the point among the curve's points on that edge, counted from the end
// carrying the edge's smaller dart.
struct Door {
  int edge = 0;
  int rank = 0;

  friend auto operator<=>(const Door&, const Door&) = default;
};

// Raw description of a closed curve meeting the projection in a few points:
// doors[i] is followed by faces[i], which must border doors[i] and
// doors[i+1]. Used for literals and for curves that need not be Haseman
// circles (e.g. compressible ones).
struct CurveWalk {
  std::vector<Door> doors;
  std::vector<int> faces;

  friend bool operator==(const CurveWalk&, const CurveWalk&) = default;
};

// An incompressible Haseman circle, up to isotopy respecting the
// projection. In a connected prime projection such a circle crosses each
// edge at most once and is determined by the crossings on either side, so
// `inside` (the side not containing crossing 0) is the isotopy key.
struct HasemanCircle {
  CrossingSet inside;
  std::array<Door, 4> doors{};
  std::array<int, 4> faces{};

  CurveWalk walk() const;
  int inside_size() const { return static_cast<int>(inside.count()); }
  int outside_size() const { return static_cast<int>(inside.size() - inside.count()); }
  // True when one side holds a single crossing.
  bool bounds_singleton() const { return inside_size() == 1 || outside_size() == 1; }

  friend bool operator==(const HasemanCircle& a, const HasemanCircle& b) { return a.inside == b.inside; }
  friend bool operator<(const HasemanCircle& a, const HasemanCircle& b) {
    if (a.doors != b.doors) return a.doors < b.doors;
    return a.inside < b.inside;
  }
};

enum class CircleTag {
  SingletonBoundary,
  CanonicalJewelJewel,
  CanonicalBandBand,
  CanonicalJewelBand,
  BandInterior,
};

std::string_view to_string(CircleTag tag);

struct CircleType {
  CircleTag tag = CircleTag::SingletonBoundary;
  int anchor = -1;  // family circle index, or piece index for BandInterior
};

// Builds the circle separating `side` from the rest. Throws MalformedInput
// unless the cut is a 4-edge bond (both sides connected).
HasemanCircle make_circle(const LinkProjection& p, CrossingSet side);

// All isotopy classes of incompressible Haseman circles of the projection,
// in canonical order.
std::vector<HasemanCircle> enumerate_haseman(const LinkProjection& p);

// Haseman circles living in a map view (crossings and contracted discs).
// With `exclude_boundary`, circles parallel to a contracted disc are dropped.
std::vector<HasemanCircle> enumerate_haseman(const PlanarMap& region, bool exclude_boundary);

// True if some 4-bond of the view has at least two nodes on each side.
bool has_essential_circle(const PlanarMap& region);

bool are_laminar(const HasemanCircle& a, const HasemanCircle& b);

// Throws NotDisjoint if the circles cannot be realized disjointly.
bool are_parallel(const HasemanCircle& a, const HasemanCircle& b);

// Parity-based side computation for an arbitrary curve; returns false if the
// walk is not a closed curve consistent with the projection.
bool walk_is_consistent(const LinkProjection& p, const CurveWalk& w);
// 2-2 separation: some side of the curve meets the projection in a
// disconnected set. Throws MalformedInput for inconsistent walks.
bool is_compressible(const CurveWalk& w, const LinkProjection& p);
inline bool is_compressible(const HasemanCircle& c, const LinkProjection& p) {
  return is_compressible(c.walk(), p);
}
// Converts a walk to a Haseman circle; throws MalformedInput if the walk is
// compressible or not a 4-point curve.
HasemanCircle circle_from_walk(const LinkProjection& p, const CurveWalk& w);

// `H[(e1,r1) f1 (e2,r2) f2 (e3,r3) f3 (e4,r4) f4]`
std::string format_walk(const CurveWalk& w);
CurveWalk parse_walk(std::string_view text);

}  // namespace knotdec
