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

#include "knotdec/haseman.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace knotdec {

std::string_view to_string(CircleTag tag) {
  switch (tag) {
    case CircleTag::SingletonBoundary: return "SingletonBoundary";
    case CircleTag::CanonicalJewelJewel: return "CanonicalJewelJewel";
    case CircleTag::CanonicalBandBand: return "CanonicalBandBand";
    case CircleTag::CanonicalJewelBand: return "CanonicalJewelBand";
    case CircleTag::BandInterior: return "BandInterior";
  }
  return "Unknown";
}

CurveWalk HasemanCircle::walk() const {
  CurveWalk w;
  w.doors.assign(doors.begin(), doors.end());
  w.faces.assign(faces.begin(), faces.end());
  return w;
}

namespace {

bool side_connected(const LinkProjection& p, const CrossingSet& side, bool value) {
  const int c = p.crossing_count();
  int start = -1, total = 0;
  for (int x = 0; x < c; ++x) {
    if (side.test(x) == value) {
      ++total;
      if (start < 0) start = x;
    }
  }
  if (total == 0) return false;
  std::vector<char> seen(c, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int k = 0; k < 4; ++k) {
      int y = crossing_of(p.opposite(dart_at(x, k)));
      if (!seen[y] && side.test(y) == value) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == total;
}

// Lexicographically smallest dihedral arrangement of (door, face) cycles.
void canonicalize_cycle(std::array<Door, 4>& doors, std::array<int, 4>& faces) {
  std::array<Door, 4> best_d = doors;
  std::array<int, 4> best_f = faces;
  for (int rev = 0; rev < 2; ++rev) {
    for (int start = 0; start < 4; ++start) {
      std::array<Door, 4> d{};
      std::array<int, 4> f{};
      for (int i = 0; i < 4; ++i) {
        if (!rev) {
          d[i] = doors[(start + i) & 3];
          f[i] = faces[(start + i) & 3];
        } else {
          // reversed: door order start, start-1, ...; face between door k
          // and door k-1 is faces[k-1]
          d[i] = doors[(start - i + 8) & 3];
          f[i] = faces[(start - i - 1 + 8) & 3];
        }
      }
      if (std::tie(d, f) < std::tie(best_d, best_f)) {
        best_d = d;
        best_f = f;
      }
    }
  }
  doors = best_d;
  faces = best_f;
}

}  // namespace

HasemanCircle make_circle(const LinkProjection& p, CrossingSet side) {
  const int c = p.crossing_count();
  if (static_cast<int>(side.size()) != c) throw Error(ErrorKind::MalformedInput, "crossing set has wrong size");
  if (side.test(0)) side.flip();
  std::vector<int> cut;
  for (int e = 0; e < p.edge_count(); ++e) {
    auto [a, b] = p.edge_darts(e);
    if (side.test(crossing_of(a)) != side.test(crossing_of(b))) cut.push_back(e);
  }
  if (cut.size() != 4 || !side_connected(p, side, true) || !side_connected(p, side, false)) {
    throw Error(ErrorKind::MalformedInput, "crossing set is not bounded by a Haseman circle");
  }
  // Order the cut edges along the dual cycle.
  auto is_cut = [&](int e) { return std::find(cut.begin(), cut.end(), e) != cut.end(); };
  HasemanCircle h;
  h.inside = std::move(side);
  int e = cut[0];
  int face = p.face_right_of(p.edge_darts(e).first);
  for (int i = 0; i < 4; ++i) {
    h.doors[i] = Door{e, 0};
    h.faces[i] = face;
    int next = -1;
    for (Dart d : p.faces()[face].boundary) {
      int f = p.edge_of(d);
      if (f != e && is_cut(f)) {
        next = f;
        break;
      }
    }
    if (next < 0) throw Error(ErrorKind::InternalInconsistency, "cut edges do not form a dual cycle");
    auto [a, b] = p.edge_darts(next);
    int other = p.face_right_of(a) == face ? p.face_right_of(b) : p.face_right_of(a);
    e = next;
    face = other;
  }
  if (h.doors[0].edge != e) throw Error(ErrorKind::InternalInconsistency, "dual cycle does not close");
  canonicalize_cycle(h.doors, h.faces);
  return h;
}

namespace {

// Calls `visit` with the four edge indices (into `edges`) of every simple
// 4-cycle of the dual multigraph, each cycle once.
template <typename Visit>
void for_each_dual_4cycle(const PlanarMap& m, const std::vector<std::pair<Dart, Dart>>& edges, Visit visit) {
  const int nf = static_cast<int>(m.faces().size());
  std::vector<std::array<int, 2>> ef(edges.size());
  std::vector<std::vector<std::pair<int, int>>> adj(nf);  // (edge, other face)
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int f = m.face_of_corner(m.opposite(edges[i].first));
    int g = m.face_of_corner(m.opposite(edges[i].second));
    ef[i] = {f, g};
    adj[f].emplace_back(static_cast<int>(i), g);
    if (g != f) adj[g].emplace_back(static_cast<int>(i), f);
  }
  std::set<std::array<int, 4>> seen;
  for (int e1 = 0; e1 < static_cast<int>(edges.size()); ++e1) {
    for (int dir = 0; dir < 2; ++dir) {
      int f0 = ef[e1][dir], f1 = ef[e1][1 - dir];
      if (f0 == f1) continue;
      for (auto [e2, f2] : adj[f1]) {
        if (e2 <= e1 || f2 == f0 || f2 == f1) continue;
        for (auto [e3, f3] : adj[f2]) {
          if (e3 <= e1 || e3 == e2 || f3 == f0 || f3 == f1 || f3 == f2) continue;
          for (auto [e4, f4] : adj[f3]) {
            if (e4 <= e1 || e4 == e2 || e4 == e3 || f4 != f0) continue;
            std::array<int, 4> key{e1, e2, e3, e4};
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) visit(key);
          }
        }
      }
    }
  }
}

// Splits the nodes of the view by removing four edges. Returns the node
// side flags (true = side of node 0) and whether exactly two components
// arose.
bool split_nodes(const PlanarMap& m, const std::vector<std::pair<Dart, Dart>>& edges,
                 const std::array<int, 4>& cut, std::vector<char>& side) {
  std::vector<char> removed(m.projection().matching().size(), 0);
  for (int i : cut) {
    removed[edges[i].first] = removed[edges[i].second] = 1;
  }
  const int n = m.node_count();
  side.assign(n, 0);
  std::vector<int> stack{0};
  side[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (Dart d : m.node(u).darts) {
      if (removed[d]) continue;
      int w = m.node_of(m.opposite(d));
      if (!side[w]) {
        side[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached < n;
}

}  // namespace

std::vector<HasemanCircle> enumerate_haseman(const PlanarMap& region, bool exclude_boundary) {
  const LinkProjection& p = region.projection();
  auto edges = region.edges();
  std::set<CrossingSet> keys;
  std::vector<HasemanCircle> out;
  for_each_dual_4cycle(region, edges, [&](const std::array<int, 4>& cut) {
    std::vector<char> side;
    if (!split_nodes(region, edges, cut, side)) return;
    int count_a = 0, count_b = 0;
    bool hole_a = false, hole_b = false;
    CrossingSet members(p.crossing_count());
    for (int u = 0; u < region.node_count(); ++u) {
      if (side[u]) {
        ++count_a;
        hole_a |= region.node(u).crossing < 0;
        members |= region.node(u).members;
      } else {
        ++count_b;
        hole_b |= region.node(u).crossing < 0;
      }
    }
    if (exclude_boundary && ((count_a == 1 && hole_a) || (count_b == 1 && hole_b))) return;
    if (members.test(0)) members.flip();
    if (!keys.insert(members).second) return;
    out.push_back(make_circle(p, members));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HasemanCircle> enumerate_haseman(const LinkProjection& p) {
  return enumerate_haseman(PlanarMap::of(p), false);
}

bool has_essential_circle(const PlanarMap& region) {
  auto edges = region.edges();
  bool found = false;
  for_each_dual_4cycle(region, edges, [&](const std::array<int, 4>& cut) {
    if (found) return;
    std::vector<char> side;
    if (!split_nodes(region, edges, cut, side)) return;
    int a = static_cast<int>(std::count(side.begin(), side.end(), 1));
    int b = region.node_count() - a;
    if (a >= 2 && b >= 2) found = true;
  });
  return found;
}

bool are_laminar(const HasemanCircle& a, const HasemanCircle& b) {
  return a.inside.is_subset_of(b.inside) || b.inside.is_subset_of(a.inside) ||
         !a.inside.intersects(b.inside);
}

bool are_parallel(const HasemanCircle& a, const HasemanCircle& b) {
  if (!are_laminar(a, b)) throw Error(ErrorKind::NotDisjoint, "circles cannot be realized disjointly");
  return a.inside == b.inside;
}

// ---------------------------------------------------------------------------
// Curve walks

namespace {

struct WalkSides {
  std::vector<int> crossing_side;  // 0/1
  std::vector<int> doors_on_edge;
};

bool compute_sides(const LinkProjection& p, const CurveWalk& w, WalkSides& out) {
  const int c = p.crossing_count();
  if (w.doors.size() != w.faces.size() || w.doors.empty()) return false;
  out.doors_on_edge.assign(p.edge_count(), 0);
  for (const Door& d : w.doors) {
    if (d.edge < 0 || d.edge >= p.edge_count()) return false;
    ++out.doors_on_edge[d.edge];
  }
  // Ranks on each edge must be exactly 0..k-1.
  for (int e = 0; e < p.edge_count(); ++e) {
    std::vector<int> ranks;
    for (const Door& d : w.doors) {
      if (d.edge == e) ranks.push_back(d.rank);
    }
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (ranks[i] != static_cast<int>(i)) return false;
    }
  }
  const int nf = static_cast<int>(p.faces().size());
  const std::size_t n = w.doors.size();
  for (std::size_t i = 0; i < n; ++i) {
    int f = w.faces[i];
    if (f < 0 || f >= nf) return false;
    for (const Door& d : {w.doors[i], w.doors[(i + 1) % n]}) {
      auto [a, b] = p.edge_darts(d.edge);
      if (p.face_right_of(a) != f && p.face_right_of(b) != f) return false;
    }
  }
  out.crossing_side.assign(c, -1);
  out.crossing_side[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int k = 0; k < 4; ++k) {
      Dart d = dart_at(x, k);
      int y = crossing_of(p.opposite(d));
      int want = out.crossing_side[x] ^ (out.doors_on_edge[p.edge_of(d)] & 1);
      if (out.crossing_side[y] < 0) {
        out.crossing_side[y] = want;
        stack.push_back(y);
      } else if (out.crossing_side[y] != want) {
        return false;
      }
    }
  }
  return true;
}

// Number of connected pieces of the projection on each side of the curve.
std::array<int, 2> side_components(const LinkProjection& p, const WalkSides& s) {
  const int c = p.crossing_count();
  std::vector<int> parent(c);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::array<int, 2> count{0, 0};
  for (int e = 0; e < p.edge_count(); ++e) {
    auto [a, b] = p.edge_darts(e);
    int k = s.doors_on_edge[e];
    if (k == 0) {
      parent[find(crossing_of(a))] = find(crossing_of(b));
    } else {
      // middle segments 1..k-1 are isolated arcs, alternating sides
      int base = s.crossing_side[crossing_of(a)];
      for (int j = 1; j < k; ++j) ++count[base ^ (j & 1)];
    }
  }
  for (int x = 0; x < c; ++x) {
    if (find(x) == x) ++count[s.crossing_side[x]];
  }
  return count;
}

}  // namespace

bool walk_is_consistent(const LinkProjection& p, const CurveWalk& w) {
  WalkSides s;
  return compute_sides(p, w, s);
}

bool is_compressible(const CurveWalk& w, const LinkProjection& p) {
  WalkSides s;
  if (!compute_sides(p, w, s)) throw Error(ErrorKind::MalformedInput, "curve walk is not consistent with the projection");
  auto count = side_components(p, s);
  return count[0] >= 2 || count[1] >= 2;
}

HasemanCircle circle_from_walk(const LinkProjection& p, const CurveWalk& w) {
  if (w.doors.size() != 4) throw Error(ErrorKind::MalformedInput, "a Haseman circle has exactly 4 doors");
  if (is_compressible(w, p)) throw Error(ErrorKind::MalformedInput, "curve is compressible");
  WalkSides s;
  compute_sides(p, w, s);
  CrossingSet side(p.crossing_count());
  for (int x = 0; x < p.crossing_count(); ++x) {
    if (s.crossing_side[x]) side.set(x);
  }
  return make_circle(p, side);
}

std::string format_walk(const CurveWalk& w) {
  std::ostringstream os;
  os << "H[";
  for (std::size_t i = 0; i < w.doors.size(); ++i) {
    if (i) os << ' ';
    os << '(' << w.doors[i].edge << ',' << w.doors[i].rank << ") " << w.faces[i];
  }
  os << ']';
  return os.str();
}

CurveWalk parse_walk(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const char* msg) -> void {
    std::ostringstream os;
    os << "circle literal error at offset " << pos << ": " << msg;
    throw Error(ErrorKind::Parse, os.str());
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip();
    if (pos >= text.size() || text[pos] != ch) fail("unexpected character");
    ++pos;
  };
  auto number = [&]() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 9) fail("expected a non-negative integer");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  CurveWalk w;
  expect('H');
  expect('[');
  for (;;) {
    skip();
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    expect('(');
    Door d;
    d.edge = number();
    expect(',');
    d.rank = number();
    expect(')');
    w.doors.push_back(d);
    w.faces.push_back(number());
  }
  skip();
  if (pos != text.size()) fail("trailing characters");
  if (w.doors.empty()) fail("empty circle");
  return w;
}

}  // namespace knotdec
