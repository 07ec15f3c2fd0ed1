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
#include <optional>
#include <string_view>
#include <vector>

#include "knotdec/haseman.hpp"
#include "knotdec/projection.hpp"

namespace knotdec {

enum class FamilyKind { General, Maximal, MinimalConway, Canonical };

// Pairwise laminar, pairwise distinct circles. Stored in canonical order.
struct CircleFamily {
  std::vector<HasemanCircle> circles;
  FamilyKind kind = FamilyKind::General;

  int size() const { return static_cast<int>(circles.size()); }
};

// Throws NotDisjoint / MalformedInput if the circles do not form a family.
void validate_family(const CircleFamily& f);

// Nesting of family circles by their inside sets. parent[k] is the smallest
// circle strictly containing circle k, or -1.
std::vector<int> family_parents(const CircleFamily& f);

enum class RegionKind { Singleton, Band, Basic, Other };
std::string_view to_string(RegionKind kind);

// One complementary region of a family. The region with owner k lies
// directly inside circle k; owner -1 is the region containing crossing 0.
// boundary lists the owner first (if any), then the children.
struct SubDiagram {
  int id = 0;
  int owner = -1;
  std::vector<int> boundary;
  CrossingSet crossings;
  RegionKind kind = RegionKind::Other;

  int v() const { return static_cast<int>(boundary.size()); }
  int c() const { return static_cast<int>(crossings.count()); }
};

// Regions of the family, indexed by id = owner + 1, already classified.
std::vector<SubDiagram> subdiagrams(const LinkProjection& p, const CircleFamily& f);

// Map view of a region: its crossings plus one contracted disc per boundary
// circle (hole tag = family index).
PlanarMap region_view(const LinkProjection& p, const CircleFamily& f, const SubDiagram& d);

RegionKind classify_view(const PlanarMap& view);
RegionKind classify_subdiagram(const LinkProjection& p, const CircleFamily& f, const SubDiagram& d);

bool is_conway(const LinkProjection& p, const CircleFamily& f);

// Crossing sets of maximal twists (chains of bigons through opposite
// corners) that are bounded by a Haseman circle.
std::vector<CrossingSet> spires(const LinkProjection& p);

// A seed of nullopt means canonical order.
CircleFamily maximal_family(const LinkProjection& p, std::optional<std::uint64_t> seed = std::nullopt);
CircleFamily minimize(const LinkProjection& p, const CircleFamily& f,
                      std::optional<std::uint64_t> seed = std::nullopt);
CircleFamily canonical_family(const LinkProjection& p, const CircleFamily& cm);

enum class PieceKind { TwistedBand, Jewel };
std::string_view to_string(PieceKind kind);

// One domain of a twisted band piece, traversed clockwise: the nodes met
// (canonical circle index into C_can, or -1 for an absorbed crossing) and
// the dart by which each node is entered.
struct DomainWalk {
  std::vector<int> circle;
  std::vector<int> crossing;
  std::vector<Dart> arrival;
};

struct Piece {
  PieceKind kind = PieceKind::Jewel;
  int region = 0;  // SubDiagram id in the C_m layout
  CrossingSet crossings;
  // Canonical circles bounding the piece. For twisted bands, in the order
  // met along domain 0; otherwise ascending.
  std::vector<int> circles;
  // Twisted bands: sectors[i] sits between circles[i-1] and circles[i].
  std::vector<int> weights;
  std::vector<std::vector<int>> twists;
  int v = 0;  // boundary count of the underlying C_m region
  std::array<DomainWalk, 2> domains;
  // Inputs of the band's map view: absorbed crossings stay nodes, each
  // canonical circle becomes a disc tagged with its C_can index.
  CrossingSet absorbed;
  std::vector<std::pair<CrossingSet, int>> holes;

  int total_weight() const;
  PlanarMap view(const LinkProjection& p) const { return PlanarMap::contract(p, absorbed, holes); }
};

struct Component {
  bool arborescent = false;
  std::vector<int> pieces;
};

struct Decomposition {
  CircleFamily cm;
  CircleFamily ccan;
  std::vector<SubDiagram> regions;  // regions of C_m
  std::vector<Piece> pieces;
  std::vector<Component> components;
  // For each C_can circle, the two pieces it separates (inside first).
  std::vector<std::array<int, 2>> circle_pieces;
  // Set when the projection is the two-crossing Hopf shadow.
  bool hopf = false;

  int piece_of_crossing(int x) const;
};

Decomposition assemble(const LinkProjection& p, const CircleFamily& cm, const CircleFamily& ccan);

// Rules 1 and 2 checks followed by the full pipeline.
Decomposition decompose(const LinkProjection& p, std::optional<std::uint64_t> seed = std::nullopt);

// Throws NotPrime / CrossingFree when the projection cannot be decomposed.
void check_rule1(const LinkProjection& p);

// Classification of an arbitrary incompressible circle relative to a
// decomposition. Throws Unclassifiable.
CircleType classify_circle(const LinkProjection& p, const Decomposition& dec, const HasemanCircle& h);

}  // namespace knotdec
