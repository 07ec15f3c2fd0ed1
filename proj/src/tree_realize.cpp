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

// Realization of closed trees as projections, and the inverse encoding of
// arborescent components.

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "knotdec/bs_tree.hpp"

namespace knotdec {

namespace {

// Unit ports, counter-clockwise.
enum Port { kNextLow = 0, kNextUp = 1, kPrevUp = 2, kPrevLow = 3 };

struct Unit {
  int crossing = -1;  // -1 for a hole
  int sign = 0;
  int edge = -1;      // tree edge, for holes
};

int slot_for(int sign, int port) {
  // Sign +1 puts the over-thread on the band-interior corners' first darts.
  static constexpr int kPlus[4] = {1, 2, 3, 0};
  static constexpr int kMinus[4] = {0, 1, 2, 3};
  return sign > 0 ? kPlus[port] : kMinus[port];
}

// Hole gluing across a tree edge (symmetric).
int glued_port(int port) {
  static constexpr int kMap[4] = {kNextLow, kPrevLow, kPrevUp, kNextUp};
  return kMap[port];
}

}  // namespace

LinkProjection realize(const PlanarTree& t) {
  t.validate();
  if (t.free_edge_count() > 0) throw Error(ErrorKind::FreeEdges, "realize needs a tree without free edges");
  check_weights(t);

  std::vector<Unit> units;
  std::vector<std::vector<int>> cycle(t.vertex_count());
  std::vector<std::array<int, 2>> hole_units(t.edges.size(), {-1, -1});
  int crossings = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto& vx = t.vertices[v];
    const int m = std::max(1, vx.degree());
    for (int i = 0; i < m; ++i) {
      int a = vx.sectors[i];
      for (int k = 0; k < std::abs(a); ++k) {
        cycle[v].push_back(static_cast<int>(units.size()));
        units.push_back(Unit{crossings++, a > 0 ? 1 : -1, -1});
      }
      if (vx.degree() > 0) {
        int e = vx.edges[i];
        cycle[v].push_back(static_cast<int>(units.size()));
        hole_units[e][t.edges[e].a == v ? 0 : 1] = static_cast<int>(units.size());
        units.push_back(Unit{-1, 0, e});
      }
    }
  }
  if (crossings == 0) throw Error(ErrorKind::InvalidWeights, "tree realizes a crossing-free diagram");

  const int np = 4 * static_cast<int>(units.size());
  std::vector<int> intra(np, -1);
  auto link = [&](int a, int b) {
    intra[a] = b;
    intra[b] = a;
  };
  for (const auto& cyc : cycle) {
    const std::size_t n = cyc.size();
    for (std::size_t i = 0; i < n; ++i) {
      int u = cyc[i], w = cyc[(i + 1) % n];
      link(4 * u + kNextLow, 4 * w + kPrevLow);
      link(4 * u + kNextUp, 4 * w + kPrevUp);
    }
  }
  auto glue = [&](int endpoint) {
    const Unit& h = units[endpoint / 4];
    const auto& pair = hole_units[h.edge];
    int other = pair[0] == endpoint / 4 ? pair[1] : pair[0];
    return 4 * other + glued_port(endpoint % 4);
  };

  std::vector<Dart> opposite(4 * crossings, -1);
  for (int ep = 0; ep < np; ++ep) {
    const Unit& u = units[ep / 4];
    if (u.crossing < 0) continue;
    int cur = intra[ep];
    int steps = 0;
    while (units[cur / 4].crossing < 0) {
      cur = intra[glue(cur)];
      if (++steps > np) throw Error(ErrorKind::InvalidWeights, "tree realizes a crossing-free loop");
    }
    const Unit& w = units[cur / 4];
    opposite[dart_at(u.crossing, slot_for(u.sign, ep % 4))] = dart_at(w.crossing, slot_for(w.sign, cur % 4));
  }
  return LinkProjection::from_matching(std::move(opposite));
}

// ---------------------------------------------------------------------------

namespace {

struct Aster {
  std::vector<int> circles;
  std::vector<int> sectors;
};

Aster aster_of(const DomainWalk& w) {
  Aster a;
  for (int k : w.circle) {
    if (k >= 0) a.circles.push_back(k);
  }
  const std::size_t m = std::max<std::size_t>(1, a.circles.size());
  a.sectors.assign(m, 0);
  std::size_t sector = 0;
  int seen = 0;
  for (std::size_t i = 0; i < w.circle.size(); ++i) {
    if (w.circle[i] >= 0) {
      sector = static_cast<std::size_t>(++seen) % m;
      continue;
    }
    a.sectors[sector] += is_over(rotate_ccw(w.arrival[i])) ? 1 : -1;
  }
  return a;
}

}  // namespace

PlanarTree encode(const LinkProjection& p, const Decomposition& dec, FatPointChoice choice) {
  const int np = static_cast<int>(dec.pieces.size());
  if (choice.piece < 0 || choice.piece >= np) throw Error(ErrorKind::MalformedInput, "no such piece");
  if (dec.pieces[choice.piece].kind != PieceKind::TwistedBand) {
    throw Error(ErrorKind::NotArborescent, "piece " + std::to_string(choice.piece) + " is a jewel");
  }
  if (choice.domain != 0 && choice.domain != 1) throw Error(ErrorKind::MalformedInput, "domain must be 0 or 1");
  PlanarTree t;
  if (dec.hopf) {
    TreeVertex v;
    v.sectors = {dec.pieces[0].weights[0]};
    t.vertices.push_back(v);
    return t;
  }

  std::vector<std::optional<PlanarMap>> views(np);
  auto view = [&](int piece) -> const PlanarMap& {
    if (!views[piece]) views[piece].emplace(dec.pieces[piece].view(p));
    return *views[piece];
  };
  std::vector<int> domain(np, -1), vertex(np, -1);
  std::vector<int> edge_of_circle(dec.ccan.size(), -1);
  std::vector<int> queue{choice.piece};
  domain[choice.piece] = choice.domain;
  vertex[choice.piece] = 0;
  t.vertices.emplace_back();
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int d = queue[qi];
    const DomainWalk& walk = dec.pieces[d].domains[domain[d]];
    Aster aster = aster_of(walk);
    TreeVertex& vx = t.vertices[vertex[d]];
    vx.sectors = aster.sectors;
    for (std::size_t i = 0; i < walk.circle.size(); ++i) {
      const int j = walk.circle[i];
      if (j < 0) continue;
      auto [pa, pb] = dec.circle_pieces[j];
      const int other = pa == d ? pb : pa;
      if (edge_of_circle[j] < 0) {
        edge_of_circle[j] = static_cast<int>(t.edges.size());
        t.edges.push_back(TreeEdge{vertex[d], -1});
        if (dec.pieces[other].kind == PieceKind::TwistedBand) {
          // Carry the fat point across the circle.
          const PlanarMap& wd = view(d);
          const Dart c = walk.arrival[i];
          const Dart q = wd.next(c), r = wd.next(q);
          const PlanarMap& wo = view(other);
          const Dart entry = p.opposite(r);
          if (!wo.has_dart(entry) || wo.next(entry) != p.opposite(q)) {
            throw Error(ErrorKind::InternalInconsistency, "fat point propagation lost the band corner");
          }
          int found = -1;
          for (int dom = 0; dom < 2; ++dom) {
            const auto& arr = dec.pieces[other].domains[dom].arrival;
            if (std::find(arr.begin(), arr.end(), entry) != arr.end()) found = dom;
          }
          if (found < 0) throw Error(ErrorKind::InternalInconsistency, "fat point propagation found no domain");
          domain[other] = found;
          vertex[other] = t.vertex_count();
          t.vertices.emplace_back();
          t.edges.back().b = vertex[other];
          queue.push_back(other);
        }
      }
      t.vertices[vertex[d]].edges.push_back(edge_of_circle[j]);
    }
  }
  t.validate();
  return t;
}

}  // namespace knotdec
