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

#include "knotdec/flype.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace knotdec {

namespace {

[[noreturn]] void invalid(const FlypeMove& m, const std::string& why) {
  throw Error(ErrorKind::InvalidMove, format_move(m) + ": " + why);
}

// Distances from v, computed through the tree; free edges are skipped.
std::vector<int> distances(const PlanarTree& t, int from, int first_edge = -1) {
  std::vector<int> dist(t.vertex_count(), -1);
  std::vector<int> queue;
  if (first_edge < 0) {
    dist[from] = 0;
    queue.push_back(from);
  } else {
    int w = t.other_end(first_edge, from);
    if (w < 0) return dist;
    dist[from] = 0;
    dist[w] = 1;
    queue.push_back(w);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    for (int e : t.vertices[u].edges) {
      int w = t.other_end(e, u);
      if (w >= 0 && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  if (first_edge >= 0) dist[from] = -1;
  return dist;
}

}  // namespace

FlypeMove parse_move(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  FlypeMove m;
  bool have_v = false, have_i = false, have_j = false;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Parse, "move literal '" + std::string(text) + "': " + why);
  };
  while (in >> tok) {
    if (tok == "flype") continue;
    auto eq = tok.find('=');
    if (eq == std::string::npos) fail("expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "angle") {
      if (value == "ccw") m.angle = Angle::Ccw;
      else if (value == "cw") m.angle = Angle::Cw;
      else fail("angle must be cw or ccw");
      continue;
    }
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(value, &used);
      if (used != value.size()) fail("bad number '" + value + "'");
    } catch (const std::logic_error&) {
      fail("bad number '" + value + "'");
    }
    if (key == "V") {
      m.vertex = n - 1;
      have_v = true;
    } else if (key == "i") {
      m.from = n - 1;
      have_i = true;
    } else if (key == "j") {
      m.to = n - 1;
      have_j = true;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!have_i || !have_j) fail("i and j are required");
  if (!have_v) m.vertex = 0;
  if (m.vertex < 0 || m.from < 0 || m.to < 0) fail("indices are 1-based");
  return m;
}

std::string format_move(const FlypeMove& m) {
  std::ostringstream os;
  os << "flype V=" << m.vertex + 1 << " i=" << m.from + 1 << " j=" << m.to + 1
     << " angle=" << (m.angle == Angle::Ccw ? "ccw" : "cw");
  return os.str();
}

std::vector<int> angle_edges(const PlanarTree& t, const FlypeMove& m) {
  const auto& vx = t.vertices[m.vertex];
  const int deg = vx.degree();
  std::vector<int> out;
  if (m.angle == Angle::Ccw) {
    for (int k = m.from; k != m.to; k = (k + 1) % deg) out.push_back(vx.edges[k]);
  } else {
    for (int k = m.from; k != m.to; k = (k + deg - 1) % deg) out.push_back(vx.edges[(k + deg - 1) % deg]);
  }
  return out;
}

std::vector<int> flype_reversed_vertices(const PlanarTree& t, const FlypeMove& m) {
  std::vector<int> out;
  for (int e : angle_edges(t, m)) {
    auto dist = distances(t, m.vertex, e);
    for (int w = 0; w < t.vertex_count(); ++w) {
      if (dist[w] > 0 && dist[w] % 2 == 1) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlanarTree apply_flype(const PlanarTree& t, const FlypeMove& m) {
  if (m.vertex < 0 || m.vertex >= t.vertex_count()) invalid(m, "no such vertex");
  const auto& vx = t.vertices[m.vertex];
  const int deg = vx.degree();
  if (deg < 2) invalid(m, "vertex has a single sector");
  if (m.from < 0 || m.from >= deg || m.to < 0 || m.to >= deg) invalid(m, "no such sector");
  if (m.from == m.to) invalid(m, "source and target sectors coincide");
  const int a = vx.sectors[m.from];
  if (a == 0) invalid(m, "source sector carries no crossing");
  const int eps = a > 0 ? 1 : -1;
  PlanarTree out = t;
  out.vertices[m.vertex].sectors[m.from] -= eps;
  out.vertices[m.vertex].sectors[m.to] += eps;
  for (int w : flype_reversed_vertices(t, m)) reverse_vertex(out, w);
  return out;
}

PlanarTree old_flype(const PlanarTree& t, int v) {
  if (v < 0 || v >= t.vertex_count()) {
    throw Error(ErrorKind::InvalidMove, "old flype: no vertex " + std::to_string(v));
  }
  auto dist = distances(t, v);
  PlanarTree out = t;
  for (int w = 0; w < t.vertex_count(); ++w) {
    if (dist[w] % 2 == 0) reverse_vertex(out, w);
  }
  return out;
}

std::vector<FlypeMove> efficient_moves(const PlanarTree& t) {
  std::vector<FlypeMove> out;
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto& vx = t.vertices[v];
    if (vx.degree() < 2) continue;
    for (int i = 0; i < vx.degree(); ++i) {
      if (vx.sectors[i] == 0) continue;
      for (int j = 0; j < vx.degree(); ++j) {
        if (j == i) continue;
        out.push_back(FlypeMove{v, i, j, Angle::Ccw});
        out.push_back(FlypeMove{v, i, j, Angle::Cw});
      }
    }
  }
  return out;
}

bool has_flype(const PlanarTree& t) {
  for (const auto& vx : t.vertices) {
    if (vx.degree() < 2) continue;
    for (int a : vx.sectors) {
      if (a != 0) return true;
    }
  }
  return false;
}

std::vector<PlanarTree> flype_class(const PlanarTree& t, int budget) {
  std::set<std::string> seen{canonical_literal(t)};
  std::vector<std::string> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& lit : frontier) {
      PlanarTree cur = parse_tree(lit);
      for (const auto& m : efficient_moves(cur)) {
        std::string c = canonical_literal(apply_flype(cur, m));
        if (seen.insert(c).second) {
          if (static_cast<int>(seen.size()) > budget) {
            throw Error(ErrorKind::BudgetExceeded,
                        "flype class exceeds the budget of " + std::to_string(budget) + " trees");
          }
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<PlanarTree> out;
  for (const auto& lit : seen) out.push_back(parse_tree(lit));
  return out;
}

std::vector<int> normalize_rule4(std::vector<int> sectors) {
  for (;;) {
    auto i = std::find_if(sectors.begin(), sectors.end(), [](int a) { return a > 0; });
    auto j = std::find_if(sectors.begin(), sectors.end(), [](int a) { return a < 0; });
    if (i == sectors.end() || j == sectors.end()) return sectors;
    --*i;
    ++*j;
  }
}

PlanarTree normalize_rule4(const PlanarTree& t) {
  PlanarTree out = t;
  for (auto& vx : out.vertices) vx.sectors = normalize_rule4(vx.sectors);
  return out;
}

std::vector<FlypeOrbit> flype_orbits(const Decomposition& dec) {
  std::vector<FlypeOrbit> out;
  for (int i = 0; i < static_cast<int>(dec.pieces.size()); ++i) {
    const Piece& piece = dec.pieces[i];
    if (piece.kind != PieceKind::TwistedBand || piece.crossings.none()) continue;
    FlypeOrbit orbit{i, {}};
    for (auto x = piece.crossings.find_first(); x != CrossingSet::npos; x = piece.crossings.find_next(x)) {
      orbit.crossings.push_back(static_cast<int>(x));
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace knotdec
