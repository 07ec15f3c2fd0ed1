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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "knotdec/decomposition.hpp"

namespace knotdec {

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Singleton: return "singleton";
    case RegionKind::Band: return "band";
    case RegionKind::Basic: return "basic";
    case RegionKind::Other: return "other";
  }
  return "other";
}

void validate_family(const CircleFamily& f) {
  for (int i = 0; i < f.size(); ++i) {
    for (int j = i + 1; j < f.size(); ++j) {
      if (are_parallel(f.circles[i], f.circles[j])) {
        throw Error(ErrorKind::MalformedInput, "family contains parallel circles");
      }
    }
  }
}

std::vector<int> family_parents(const CircleFamily& f) {
  const int n = f.size();
  std::vector<int> parent(n, -1);
  for (int k = 0; k < n; ++k) {
    const auto& ik = f.circles[k].inside;
    std::size_t best = ~std::size_t{0};
    for (int j = 0; j < n; ++j) {
      const auto& ij = f.circles[j].inside;
      if (j == k || ij == ik || !ik.is_subset_of(ij)) continue;
      if (ij.count() < best) {
        best = ij.count();
        parent[k] = j;
      }
    }
  }
  return parent;
}

namespace {

struct RegionShape {
  CrossingSet crossings;
  std::vector<int> boundary;
  std::vector<std::pair<CrossingSet, int>> holes;
};

RegionShape region_shape(const LinkProjection& p, const CircleFamily& f, const std::vector<int>& parent,
                         int owner) {
  RegionShape r;
  const int c = p.crossing_count();
  if (owner >= 0) {
    r.crossings = f.circles[owner].inside;
    r.boundary.push_back(owner);
    r.holes.emplace_back(~f.circles[owner].inside, owner);
  } else {
    r.crossings = CrossingSet(c);
    r.crossings.set();
  }
  for (int k = 0; k < f.size(); ++k) {
    if (parent[k] != owner) continue;
    r.crossings -= f.circles[k].inside;
    r.boundary.push_back(k);
    r.holes.emplace_back(f.circles[k].inside, k);
  }
  return r;
}

RegionKind classify_shape(const LinkProjection& p, const RegionShape& r) {
  return classify_view(PlanarMap::contract(p, r.crossings, r.holes));
}

// Doubled cycle of holes with v bigons and two v-gons.
bool is_band_view(const PlanarMap& m) {
  const int v = m.node_count();
  if (v < 3) return false;
  for (int u = 0; u < v; ++u) {
    std::map<int, int> nbr;
    for (Dart d : m.node(u).darts) ++nbr[m.node_of(m.opposite(d))];
    if (nbr.size() != 2 || nbr.count(u)) return false;
    for (auto [w, mult] : nbr) {
      if (mult != 2) return false;
    }
  }
  // connected: walk the cycle
  std::vector<char> seen(v, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (Dart d : m.node(u).darts) {
      int w = m.node_of(m.opposite(d));
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != v) return false;
  int bigons = 0, big = 0;
  for (const auto& face : m.faces()) {
    if (face.size() == 2) ++bigons;
    else if (static_cast<int>(face.size()) == v) ++big;
    else return false;
  }
  return bigons == v && big == 2;
}

}  // namespace

RegionKind classify_view(const PlanarMap& view) {
  int c = 0, v = 0;
  for (const auto& node : view.nodes()) {
    if (node.crossing >= 0) ++c;
    else ++v;
  }
  if (c == 1 && v == 1) return RegionKind::Singleton;
  if (c != 0 || v < 3) return RegionKind::Other;
  if (is_band_view(view)) return RegionKind::Band;
  if (!has_essential_circle(view)) return RegionKind::Basic;
  return RegionKind::Other;
}

std::vector<SubDiagram> subdiagrams(const LinkProjection& p, const CircleFamily& f) {
  auto parent = family_parents(f);
  std::vector<SubDiagram> out;
  for (int owner = -1; owner < f.size(); ++owner) {
    auto shape = region_shape(p, f, parent, owner);
    SubDiagram d;
    d.id = owner + 1;
    d.owner = owner;
    d.boundary = shape.boundary;
    d.crossings = shape.crossings;
    d.kind = classify_shape(p, shape);
    out.push_back(std::move(d));
  }
  return out;
}

PlanarMap region_view(const LinkProjection& p, const CircleFamily& f, const SubDiagram& d) {
  auto parent = family_parents(f);
  auto shape = region_shape(p, f, parent, d.owner);
  return PlanarMap::contract(p, shape.crossings, shape.holes);
}

RegionKind classify_subdiagram(const LinkProjection& p, const CircleFamily& f, const SubDiagram& d) {
  return classify_view(region_view(p, f, d));
}

bool is_conway(const LinkProjection& p, const CircleFamily& f) {
  for (const auto& d : subdiagrams(p, f)) {
    if (d.kind == RegionKind::Other) return false;
  }
  return true;
}

std::vector<CrossingSet> spires(const LinkProjection& p) {
  // Bigon corners, keyed by the first dart of the corner.
  std::vector<int> bigon_at(p.matching().size(), -1);
  std::vector<std::array<Dart, 2>> corners;
  for (const auto& face : p.faces()) {
    if (face.boundary.size() != 2) continue;
    int id = static_cast<int>(corners.size());
    std::array<Dart, 2> cs{p.opposite(face.boundary[0]), p.opposite(face.boundary[1])};
    corners.push_back(cs);
    for (Dart g : cs) bigon_at[g] = id;
  }
  const int nb = static_cast<int>(corners.size());
  std::vector<int> comp(nb, -1);
  std::vector<CrossingSet> out;
  for (int b = 0; b < nb; ++b) {
    if (comp[b] >= 0) continue;
    CrossingSet set(p.crossing_count());
    std::vector<int> stack{b};
    comp[b] = b;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (Dart g : corners[u]) {
        set.set(crossing_of(g));
        int w = bigon_at[rotate_ccw(g, 2)];
        if (w >= 0 && comp[w] < 0) {
          comp[w] = b;
          stack.push_back(w);
        }
      }
    }
    try {
      auto h = make_circle(p, set);
      (void)h;
      out.push_back(set);
    } catch (const Error&) {
      // closed twist or a chain whose ends touch: no spire circle
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool laminar_with_all(const HasemanCircle& h, const std::vector<HasemanCircle>& fam) {
  for (const auto& g : fam) {
    if (g == h || !are_laminar(g, h)) return false;
  }
  return true;
}

bool strictly_inside_spire(const HasemanCircle& h, const std::vector<CrossingSet>& sp) {
  const CrossingSet out = ~h.inside;
  for (const auto& s : sp) {
    for (const CrossingSet* side : {&h.inside, &out}) {
      if (side->count() >= 2 && side->is_subset_of(s) && *side != s) return true;
    }
  }
  return false;
}

}  // namespace

CircleFamily maximal_family(const LinkProjection& p, std::optional<std::uint64_t> seed) {
  CircleFamily f;
  f.kind = FamilyKind::Maximal;
  auto sp = spires(p);
  std::vector<CrossingSet> accepted;
  for (const auto& s : sp) {
    auto h = make_circle(p, s);
    if (laminar_with_all(h, f.circles)) {
      f.circles.push_back(h);
      accepted.push_back(s);
    }
  }
  auto candidates = enumerate_haseman(p);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }
  for (const auto& h : candidates) {
    if (strictly_inside_spire(h, accepted)) continue;
    if (laminar_with_all(h, f.circles)) f.circles.push_back(h);
  }
  std::sort(f.circles.begin(), f.circles.end());
  return f;
}

CircleFamily minimize(const LinkProjection& p, const CircleFamily& f, std::optional<std::uint64_t> seed) {
  if (!is_conway(p, f)) throw Error(ErrorKind::NotConway, "family is not a Conway family");
  std::vector<HasemanCircle> cur = f.circles;
  std::mt19937_64 rng(seed.value_or(0));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<HasemanCircle> order = cur;
    if (seed) std::shuffle(order.begin(), order.end(), rng);
    for (const auto& h : order) {
      CircleFamily trial;
      for (const auto& g : cur) {
        if (!(g == h)) trial.circles.push_back(g);
      }
      auto parent = family_parents(trial);
      // Parent of h in the trial family owns the merged region.
      int owner = -1;
      std::size_t best = ~std::size_t{0};
      for (int j = 0; j < trial.size(); ++j) {
        const auto& ij = trial.circles[j].inside;
        if (h.inside.is_subset_of(ij) && ij.count() < best) {
          best = ij.count();
          owner = j;
        }
      }
      auto shape = region_shape(p, trial, parent, owner);
      RegionKind kind = classify_shape(p, shape);
      if (kind != RegionKind::Other) {
        cur = std::move(trial.circles);
        changed = true;
      }
    }
  }
  CircleFamily out;
  out.circles = std::move(cur);
  std::sort(out.circles.begin(), out.circles.end());
  out.kind = FamilyKind::MinimalConway;
  return out;
}

CircleFamily canonical_family(const LinkProjection& p, const CircleFamily& cm) {
  (void)p;
  CircleFamily out;
  out.kind = FamilyKind::Canonical;
  for (const auto& h : cm.circles) {
    if (!h.bounds_singleton()) out.circles.push_back(h);
  }
  return out;
}

}  // namespace knotdec
