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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "knotdec/bs_tree.hpp"
#include "knotdec/decomposition.hpp"
#include "knotdec/flype.hpp"
#include "knotdec/haseman.hpp"
#include "knotdec/projection.hpp"
#include "knotdec/report.hpp"

using namespace knotdec;

namespace {

// ---------------------------------------------------------------------------
// Planar maps as rotation systems. Half-edges 2e and 2e+1 form edge e;
// sigma is the counter-clockwise successor around a vertex.

struct Map {
  std::vector<int> sigma;

  int edges() const { return static_cast<int>(sigma.size()) / 2; }
};

int orbit_count(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int n = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++n;
    for (int x = static_cast<int>(s); !seen[x]; x = perm[x]) seen[x] = 1;
  }
  return n;
}

bool is_planar(const Map& m) {
  const int n = static_cast<int>(m.sigma.size());
  std::vector<int> phi(n);
  for (int h = 0; h < n; ++h) phi[h] = m.sigma[h ^ 1];
  return orbit_count(m.sigma) - m.edges() + orbit_count(phi) == 2;
}

// Orientation-preserving canonical code: BFS relabelling from every root.
std::vector<int> map_code(const Map& m) {
  const int n = static_cast<int>(m.sigma.size());
  std::vector<int> best;
  std::vector<int> label(n), order;
  for (int root = 0; root < n; ++root) {
    std::fill(label.begin(), label.end(), -1);
    order.assign(1, root);
    label[root] = 0;
    std::vector<int> code;
    code.reserve(2 * n);
    bool worse = false;
    for (std::size_t i = 0; i < order.size() && !worse; ++i) {
      for (int y : {m.sigma[order[i]], order[i] ^ 1}) {
        if (label[y] < 0) {
          label[y] = static_cast<int>(order.size());
          order.push_back(y);
        }
        code.push_back(label[y]);
        const std::size_t k = code.size() - 1;
        if (!best.empty() && k < best.size()) {
          if (code[k] > best[k] && std::equal(code.begin(), code.begin() + k, best.begin())) worse = true;
        }
      }
    }
    if (worse) continue;
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// Inserts half-edge h directly after `after` in the rotation.
void insert_after(Map& m, int after, int h) {
  m.sigma[h] = m.sigma[after];
  m.sigma[after] = h;
}

// All connected planar maps with up to `max_edges` edges, grouped by size,
// one representative per isomorphism class.
std::vector<std::vector<Map>> planar_maps(int max_edges) {
  std::vector<std::vector<Map>> out(max_edges + 1);
  out[0].push_back(Map{});
  for (int e = 0; e < max_edges; ++e) {
    std::set<std::vector<int>> seen;
    auto keep = [&](Map&& m) {
      if (!is_planar(m)) return;
      if (seen.insert(map_code(m)).second) out[e + 1].push_back(std::move(m));
    };
    for (const Map& base : out[e]) {
      const int a = 2 * e, b = 2 * e + 1;
      if (e == 0) {
        Map loop{{b, a}};
        keep(std::move(loop));
        Map bridge{{a, b}};
        keep(std::move(bridge));
        continue;
      }
      for (int k = 0; k < 2 * e; ++k) {
        // Pendant edge to a new vertex.
        Map p = base;
        p.sigma.resize(2 * e + 2);
        insert_after(p, k, a);
        p.sigma[b] = b;
        keep(std::move(p));
        // Edge between two corners (loops included).
        for (int m = 0; m <= 2 * e; ++m) {
          Map q = base;
          q.sigma.resize(2 * e + 2);
          insert_after(q, k, a);
          insert_after(q, m == 2 * e ? a : m, b);
          keep(std::move(q));
        }
      }
    }
  }
  return out;
}

// Medial graph of a map: one crossing per edge, one strand piece per corner.
// Corners leave from an odd slot and arrive at an even slot, so the
// resulting diagram is alternating.
LinkProjection medial(const Map& m) {
  const int n = static_cast<int>(m.sigma.size());
  std::vector<Dart> opposite(2 * n, -1);
  for (int k = 0; k < n; ++k) {
    const int j = m.sigma[k];
    Dart from = dart_at(k / 2, (k & 1) ? 3 : 1);
    Dart to = dart_at(j / 2, (j & 1) ? 0 : 2);
    opposite[from] = to;
    opposite[to] = from;
  }
  return LinkProjection::from_matching(std::move(opposite));
}

// Corpus (a): prime connected shadows with 2..max crossings, one per class.
std::vector<LinkProjection> exhaustive_shadows(int max_crossings) {
  auto maps = planar_maps(max_crossings);
  std::set<std::vector<int>> seen;
  std::vector<LinkProjection> out;
  for (int e = 2; e <= max_crossings; ++e) {
    for (const Map& m : maps[e]) {
      LinkProjection p = medial(m);
      if (!is_prime(p)) continue;
      if (seen.insert(canonical_shadow_code(p.matching())).second) out.push_back(p);
    }
  }
  return out;
}

bool same_vertex(const Map& m, int x, int y) {
  for (int h = m.sigma[x]; h != x; h = m.sigma[h]) {
    if (h == y) return true;
  }
  return x == y;
}

// Corpus (b): random 2-connected planar maps built from a digon by edge
// subdivisions and chords between distinct vertices of a face, followed by
// random crossing choices. Kept when the projection is prime.
std::vector<LinkProjection> random_projections(int count, int max_crossings, std::mt19937_64& rng) {
  std::vector<LinkProjection> out;
  while (static_cast<int>(out.size()) < count) {
    const int edges = std::uniform_int_distribution<int>(2, max_crossings)(rng);
    Map m{{2, 3, 0, 1}};
    while (m.edges() < edges) {
      const int e = m.edges(), a = 2 * e, b = 2 * e + 1;
      Map q = m;
      q.sigma.resize(2 * e + 2);
      if (rng() & 1) {
        // Subdivide the edge of half-edge h: its twin moves to a new vertex.
        const int h = std::uniform_int_distribution<int>(0, 2 * e - 1)(rng), twin = h ^ 1;
        int pred = twin;
        while (q.sigma[pred] != twin) pred = q.sigma[pred];
        q.sigma[pred] = b;
        q.sigma[b] = q.sigma[twin];
        q.sigma[twin] = a;
        q.sigma[a] = twin;
      } else {
        const int k = std::uniform_int_distribution<int>(0, 2 * e - 1)(rng);
        const int j = std::uniform_int_distribution<int>(0, 2 * e - 1)(rng);
        if (same_vertex(m, k, j)) continue;
        insert_after(q, k, a);
        insert_after(q, j, b);
      }
      if (is_planar(q)) m = std::move(q);
    }
    LinkProjection p = medial(m);
    if (!is_prime(p)) continue;
    for (int x = 0; x < p.crossing_count(); ++x) {
      if (rng() & 1) p = p.with_switched_crossing(x);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::set<std::vector<int>> family_key(const CircleFamily& f) {
  std::set<std::vector<int>> key;
  for (const auto& c : f.circles) {
    std::vector<int> side;
    for (auto x = c.inside.find_first(); x != CrossingSet::npos; x = c.inside.find_next(x)) {
      side.push_back(static_cast<int>(x));
    }
    key.insert(side);
  }
  return key;
}

// ---------------------------------------------------------------------------
// Tree corpus: closed planar trees built from ordered rooted trees.

struct Shape {
  std::vector<std::vector<int>> children;
};

void ordered_trees(int n, std::vector<Shape>& out) {
  // Parent sequences in preorder: vertex v > 0 attaches to a vertex on the
  // current rightmost path.
  std::function<void(Shape&, std::vector<int>&)> grow = [&](Shape& s, std::vector<int>& path) {
    out.push_back(s);
    if (static_cast<int>(s.children.size()) == n) return;
    const int v = static_cast<int>(s.children.size());
    for (std::size_t depth = 0; depth < path.size(); ++depth) {
      const int parent = path[depth];
      std::vector<int> saved(path.begin() + depth + 1, path.end());
      path.resize(depth + 1);
      path.push_back(v);
      s.children.emplace_back();
      s.children[parent].push_back(v);
      grow(s, path);
      s.children[parent].pop_back();
      s.children.pop_back();
      path.pop_back();
      path.insert(path.end(), saved.begin(), saved.end());
    }
  };
  Shape s;
  s.children.emplace_back();
  std::vector<int> path{0};
  grow(s, path);
}

int degree_in(const Shape& s, int v) { return static_cast<int>(s.children[v].size()) + (v == 0 ? 0 : 1); }

// Valid sector vectors for one vertex: Rule 4 plus the per-degree weight
// properties, with total magnitude at most `budget`.
std::vector<std::vector<int>> sector_options(int degree, int budget) {
  const int m = std::max(1, degree);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      bool pos = false, neg = false;
      int mag = 0;
      for (int a : cur) {
        pos = pos || a > 0;
        neg = neg || a < 0;
        mag += std::abs(a);
      }
      if (pos && neg) return;
      if (mag > budget) return;
      if (degree <= 1 && mag < 2) return;
      if (degree == 2 && mag == 0) return;
      out.push_back(cur);
      return;
    }
    for (int a = -3; a <= 3; ++a) {
      cur[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::string literal_of(const Shape& s, const std::vector<std::vector<int>>& sectors, int v) {
  std::ostringstream os;
  os << "V(";
  const auto& kids = s.children[v];
  const auto& sec = sectors[v];
  if (v == 0) {
    if (kids.empty()) {
      os << sec[0];
    }
    for (std::size_t i = 0; i < kids.size(); ++i) {
      os << (i ? "," : "") << sec[i] << "," << literal_of(s, sectors, kids[i]);
    }
  } else {
    // Sectors after the parent edge, ending with the one before it.
    for (std::size_t i = 0; i < kids.size(); ++i) os << sec[i] << "," << literal_of(s, sectors, kids[i]) << ",";
    os << sec[kids.size()];
  }
  os << ")";
  return os.str();
}

std::vector<PlanarTree> tree_corpus(int max_vertices, int max_degree, int max_crossings) {
  std::vector<Shape> shapes;
  ordered_trees(max_vertices, shapes);
  std::set<std::string> seen;
  std::vector<PlanarTree> out;
  for (const Shape& s : shapes) {
    const int n = static_cast<int>(s.children.size());
    bool ok = true;
    for (int v = 0; v < n; ++v) ok = ok && degree_in(s, v) <= max_degree;
    if (!ok) continue;
    std::vector<std::vector<int>> sectors(n);
    std::function<void(int, int)> assign = [&](int v, int left) {
      if (v == n) {
        PlanarTree t = parse_tree(literal_of(s, sectors, 0));
        if (seen.insert(canonical_literal(t)).second) out.push_back(std::move(t));
        return;
      }
      for (const auto& opt : sector_options(degree_in(s, v), left)) {
        int mag = 0;
        for (int a : opt) mag += std::abs(a);
        sectors[v] = opt;
        assign(v + 1, left - mag);
      }
    };
    assign(0, max_crossings);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Outcome {
  bool pass = true;
  int checked = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    pass = false;
    if (failures++ == 0) first_failure = what;
  }
};

int g_failed = 0;

void emit(int criterion, const std::string& title, const Outcome& o, const std::string& extra = "") {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << title << " (" << o.checked
            << " checked, " << o.failures << " failures" << (extra.empty() ? "" : ", " + extra) << ")";
  if (!o.pass) std::cout << " first: " << o.first_failure;
  std::cout << std::endl;
  if (!o.pass) ++g_failed;
}

Outcome uniqueness(const std::vector<LinkProjection>& corpus, int seeds, std::uint64_t base) {
  Outcome o;
  for (const auto& p : corpus) {
    ++o.checked;
    try {
      auto ref = family_key(minimize(p, maximal_family(p)));
      for (int s = 0; s < seeds; ++s) {
        const std::uint64_t seed = base + static_cast<std::uint64_t>(s);
        if (family_key(minimize(p, maximal_family(p, seed), seed)) != ref) {
          o.fail(serialize_pd(p) + " seed " + std::to_string(seed));
          break;
        }
      }
    } catch (const Error& e) {
      o.fail(serialize_pd(p) + ": " + e.what());
    }
  }
  return o;
}

// Independent reversal of one cyclic order.
TreeVertex reversed(const TreeVertex& v) {
  const int d = v.degree();
  if (d == 0) return v;
  TreeVertex r;
  for (int k = 0; k < d; ++k) {
    r.edges.push_back(v.edges[d - 1 - k]);
    r.sectors.push_back(v.sectors[(d - k) % d]);
  }
  return r;
}

bool same_rotation(const TreeVertex& a, const TreeVertex& b) {
  const int d = std::max(1, a.degree());
  if (a.degree() != b.degree() || a.sectors.size() != b.sectors.size()) return false;
  for (int r = 0; r < d; ++r) {
    bool eq = true;
    for (int k = 0; k < d && eq; ++k) {
      if (a.degree() > 0 && a.edges[(k + r) % d] != b.edges[k]) eq = false;
      if (a.sectors[(k + r) % d] != b.sectors[k]) eq = false;
    }
    if (eq) return true;
  }
  return false;
}

// Vertices at odd distance from v inside the subtrees hanging off `edges`.
std::set<int> odd_vertices(const PlanarTree& t, int v, const std::vector<int>& edges) {
  std::set<int> out;
  std::vector<std::pair<int, int>> stack;  // vertex, distance
  std::set<int> seen{v};
  for (int e : edges) {
    int w = t.other_end(e, v);
    if (w >= 0 && seen.insert(w).second) stack.push_back({w, 1});
  }
  while (!stack.empty()) {
    auto [u, d] = stack.back();
    stack.pop_back();
    if (d % 2 == 1) out.insert(u);
    for (int e : t.vertices[u].edges) {
      int w = t.other_end(e, u);
      if (w >= 0 && seen.insert(w).second) stack.push_back({w, d + 1});
    }
  }
  return out;
}

std::vector<int> angle_oracle(const PlanarTree& t, const FlypeMove& m) {
  const auto& vx = t.vertices[m.vertex];
  const int d = vx.degree();
  std::vector<int> out;
  if (m.angle == Angle::Ccw) {
    for (int k = m.from; k != m.to; k = (k + 1) % d) out.push_back(vx.edges[k]);
  } else {
    for (int k = m.from; k != m.to; k = (k + d - 1) % d) out.push_back(vx.edges[(k + d - 1) % d]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::mt19937_64 rng(20260416);

  const int kShadowMax = argc > 1 ? std::atoi(argv[1]) : 8;
  const auto corpus_a = exhaustive_shadows(kShadowMax);
  const auto corpus_b = random_projections(200, 12, rng);
  std::map<int, int> by_size;
  for (const auto& p : corpus_a) ++by_size[p.crossing_count()];
  std::ostringstream sizes;
  for (auto [c, n] : by_size) sizes << (c > 2 ? " " : "") << c << ":" << n;
  std::cout << "corpus (a): " << corpus_a.size() << " prime shadows [" << sizes.str() << "]" << std::endl;
  std::cout << "corpus (b): " << corpus_b.size() << " random projections" << std::endl;

  // 1. Uniqueness of the minimal Conway family.
  {
    Outcome a = uniqueness(corpus_a, 20, 1000);
    Outcome b = uniqueness(corpus_b, 20, 5000);
    Outcome o;
    o.checked = a.checked + b.checked;
    o.failures = a.failures + b.failures;
    o.pass = a.pass && b.pass;
    o.first_failure = !a.pass ? a.first_failure : b.first_failure;
    emit(1, "minimal Conway family independent of 20 seeds", o);
  }

  // 2. Classification totality.
  {
    Outcome o;
    for (const auto& p : corpus_a) {
      try {
        Decomposition dec = decompose(p);
        for (const auto& h : enumerate_haseman(p)) {
          ++o.checked;
          try {
            classify_circle(p, dec, h);
          } catch (const Error& e) {
            o.fail(serialize_pd(p) + " " + format_walk(h.walk()) + ": " + e.what());
          }
        }
      } catch (const Error& e) {
        o.fail(serialize_pd(p) + ": " + e.what());
      }
    }
    emit(2, "every incompressible circle classifies", o);
  }

  // Tree corpus shared by criteria 3, 4 and 6.
  constexpr int kMaxCrossings = 10;
  const auto trees = tree_corpus(6, 4, kMaxCrossings);
  std::cout << "tree corpus: " << trees.size() << " closed trees (<= 6 vertices, degree <= 4, |a| <= 3, "
            << "at most " << kMaxCrossings << " crossings)" << std::endl;

  // 3. Round trip through projections.
  std::vector<std::optional<LinkProjection>> realized(trees.size());
  {
    Outcome o;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      ++o.checked;
      const auto& t = trees[i];
      try {
        realized[i] = realize(t);
        Decomposition dec = decompose(*realized[i]);
        PlanarTree back = encode(*realized[i], dec);
        if (canonical_literal(back) != canonical_literal(t)) {
          o.fail(format_tree(t) + " -> " + format_tree(back));
        }
      } catch (const Error& e) {
        o.fail(format_tree(t) + ": " + e.what());
      }
    }
    emit(3, "canonical(encode(decompose(realize(T)))) = canonical(T)", o);
  }

  // 4. Alternating criterion on abstract trees.
  {
    Outcome o;
    int alternating = 0;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (!realized[i]) continue;
      ++o.checked;
      AbstractTree a = abstract_tree(trees[i]);
      const bool tree_alt = is_alternating_tree(a).alternating;
      const bool proj_alt = is_alternating(*realized[i]);
      if (tree_alt != proj_alt) {
        o.fail(format_tree(trees[i]) + " tree=" + std::to_string(tree_alt) + " projection=" + std::to_string(proj_alt));
        continue;
      }
      if (tree_alt) {
        ++alternating;
        if (min_crossing_number(a) != realized[i]->crossing_count()) {
          o.fail(format_tree(trees[i]) + " min crossing number " + std::to_string(min_crossing_number(a)));
        }
      }
    }
    emit(4, "tree alternating verdict matches the projection", o, std::to_string(alternating) + " alternating");
  }

  // 5. Flype laws on random moves.
  {
    Outcome o;
    std::vector<const PlanarTree*> movable;
    for (const auto& t : trees) {
      if (has_flype(t)) movable.push_back(&t);
    }
    int attempts = 0;
    while (o.checked < 1000 && !movable.empty() && ++attempts < 100000) {
      const PlanarTree& t = *movable[std::uniform_int_distribution<std::size_t>(0, movable.size() - 1)(rng)];
      const int v = std::uniform_int_distribution<int>(0, t.vertex_count() - 1)(rng);
      const auto& vx = t.vertices[v];
      const int d = vx.degree();
      if (d < 2) continue;
      FlypeMove m;
      m.vertex = v;
      m.from = std::uniform_int_distribution<int>(0, d - 1)(rng);
      m.to = std::uniform_int_distribution<int>(0, d - 1)(rng);
      m.angle = (rng() & 1) ? Angle::Cw : Angle::Ccw;
      if (m.from == m.to || vx.sectors[m.from] == 0) continue;
      ++o.checked;
      const std::string tag = format_tree(t) + " " + format_move(m);
      try {
        PlanarTree u = apply_flype(t, m);
        if (!(abstract_tree(u) == abstract_tree(t))) o.fail(tag + ": abstract tree changed");

        // Exact F3 oracle: reverse the odd-distance vertices, move one crossing.
        const auto odd = odd_vertices(t, v, angle_oracle(t, m));
        const int s = vx.sectors[m.from] > 0 ? 1 : -1;
        for (int w = 0; w < t.vertex_count(); ++w) {
          TreeVertex want = odd.count(w) ? reversed(t.vertices[w]) : t.vertices[w];
          if (w == v) {
            want.sectors[m.from] -= s;
            want.sectors[m.to] += s;
          }
          if (!same_rotation(want, u.vertices[w])) {
            o.fail(tag + ": vertex " + std::to_string(w + 1) + " has the wrong cyclic order");
            break;
          }
        }

        FlypeMove other = m;
        other.angle = m.angle == Angle::Ccw ? Angle::Cw : Angle::Ccw;
        PlanarTree w = apply_flype(t, other);
        const PlanarTree& ccw = m.angle == Angle::Ccw ? u : w;
        const PlanarTree& cw = m.angle == Angle::Ccw ? w : u;
        if (canonical_literal(old_flype(ccw, v)) != canonical_literal(cw)) {
          o.fail(tag + ": angle choices not related by an old flype");
        }
        if (canonical_literal(old_flype(old_flype(u, v), v)) != canonical_literal(u)) {
          o.fail(tag + ": old flype is not an involution");
        }
      } catch (const Error& e) {
        o.fail(tag + ": " + e.what());
      }
    }
    if (o.checked < 1000) o.fail("only " + std::to_string(o.checked) + " moves generated");
    emit(5, "flype laws on random moves", o);
  }

  // 6. No-flype criterion.
  {
    Outcome o;
    int rigid = 0;
    for (const auto& t : trees) {
      ++o.checked;
      bool expect = false;
      for (const auto& vx : t.vertices) {
        int weight = 0;
        for (int a : vx.sectors) weight += a;
        if (vx.degree() >= 2 && weight != 0) expect = true;
      }
      if (has_flype(t) != expect) {
        o.fail(format_tree(t) + ": has_flype disagrees");
        continue;
      }
      if (!expect) {
        ++rigid;
        try {
          auto cls = flype_class(t, 1000);
          if (cls.size() != 1 || !(cls[0] == canonical_tree(t))) o.fail(format_tree(t) + ": class is not a singleton");
        } catch (const Error& e) {
          o.fail(format_tree(t) + ": " + e.what());
        }
      }
    }
    emit(6, "has_flype matches the weight criterion", o, std::to_string(rigid) + " without flypes");
  }

  // 7. Named instances.
  {
    Outcome o;
    auto expect = [&](bool cond, const std::string& what) {
      ++o.checked;
      if (!cond) o.fail(what);
    };
    try {
      Report tre = build_report(parse_pd(fixtures::kTrefoil), {"trefoil", 0});
      expect(tre.components.size() == 1 && (tre.components[0].tree == "V(3)" || tre.components[0].tree == "V(-3)"),
             "trefoil tree");
      expect(tre.orbits.size() == 1 && tre.orbits[0].crossings.size() == 3, "trefoil orbit");
      expect(tre.alternating && tre.prop1_alternating == true, "trefoil alternating");
      expect(tre.min_crossing_number == 3, "trefoil min crossing number");

      Report hopf = build_report(parse_pd(fixtures::kHopf), {"hopf", 0});
      expect(hopf.pieces.size() == 1 && hopf.pieces[0].weights.size() == 1 &&
                 std::abs(hopf.pieces[0].weights[0]) == 2,
             "hopf weight");
      expect(hopf.orbits.size() == 1 && hopf.orbits[0].crossings.size() == 2, "hopf orbit");

      Report six = build_report(parse_pd(fixtures::kBorromean), {"6*", 0});
      expect(six.components.size() == 1 && !six.components[0].arborescent, "6* polyhedral");
      expect(six.pieces.size() == 1 && six.pieces[0].kind == PieceKind::Jewel, "6* single jewel");
      expect(six.orbits.empty(), "6* orbits");
      expect(to_json(six)["flypes"]["summary"] == "no flypes", "6* reported without flypes");
    } catch (const Error& e) {
      o.fail(e.what());
    }
    emit(7, "trefoil, Hopf and 6* reports", o);
  }

  // 8. Rule 4 normalization.
  {
    Outcome o;
    for (int len = 2; len <= 4; ++len) {
      std::vector<int> a(len, -3);
      while (true) {
        const bool pos = std::any_of(a.begin(), a.end(), [](int x) { return x > 0; });
        const bool neg = std::any_of(a.begin(), a.end(), [](int x) { return x < 0; });
        if (pos && neg) {
          ++o.checked;
          auto b = normalize_rule4(a);
          const int total = std::accumulate(a.begin(), a.end(), 0);
          const bool bpos = std::any_of(b.begin(), b.end(), [](int x) { return x > 0; });
          const bool bneg = std::any_of(b.begin(), b.end(), [](int x) { return x < 0; });
          if (b.size() != a.size() || std::accumulate(b.begin(), b.end(), 0) != total || (bpos && bneg)) {
            std::ostringstream os;
            for (int x : a) os << x << ' ';
            o.fail(os.str());
          }
        }
        int k = 0;
        while (k < len && a[k] == 3) a[k++] = -3;
        if (k == len) break;
        ++a[k];
      }
    }
    emit(8, "normalize_rule4 on mixed-sign vectors", o);
  }

  const double secs = std::chrono::duration<double>(clock::now() - start).count();
  std::cout << (g_failed == 0 ? "all criteria passed" : std::to_string(g_failed) + " criteria failed") << " in "
            << secs << " s" << std::endl;
  return g_failed == 0 ? 0 : 1;
}
