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
#include <numeric>

#include "knotdec/decomposition.hpp"

namespace knotdec {

std::string_view to_string(PieceKind kind) {
  return kind == PieceKind::TwistedBand ? "twisted_band" : "jewel";
}

int Piece::total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0); }

int Decomposition::piece_of_crossing(int x) const {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].crossings.test(x)) return static_cast<int>(i);
  }
  return -1;
}

void check_rule1(const LinkProjection& p) {
  if (p.crossing_count() == 0) throw Error(ErrorKind::CrossingFree, "projection has no crossings");
  if (p.crossing_count() == 1) {
    throw Error(ErrorKind::NotPrime, "Rule 1: a one-crossing projection is not reduced");
  }
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "Rule 1: projection is not prime");
}

namespace {

int singleton_crossing(const SubDiagram& r) { return static_cast<int>(r.crossings.find_first()); }

DomainWalk walk_face(const PlanarMap& w, const std::vector<Dart>& face) {
  DomainWalk out;
  for (Dart d : face) {
    Dart c = w.opposite(d);
    const MapNode& node = w.node(w.node_of(c));
    out.circle.push_back(node.crossing >= 0 ? -1 : node.hole);
    out.crossing.push_back(node.crossing);
    out.arrival.push_back(c);
  }
  // Start at a canonical circle when there is one.
  auto it = std::find_if(out.circle.begin(), out.circle.end(), [](int k) { return k >= 0; });
  if (it != out.circle.end()) {
    auto shift = it - out.circle.begin();
    std::rotate(out.circle.begin(), out.circle.begin() + shift, out.circle.end());
    std::rotate(out.crossing.begin(), out.crossing.begin() + shift, out.crossing.end());
    std::rotate(out.arrival.begin(), out.arrival.begin() + shift, out.arrival.end());
  }
  return out;
}

void fill_band(const LinkProjection& p, Piece& piece, const CrossingSet& absorbed,
               const std::vector<std::pair<CrossingSet, int>>& holes) {
  PlanarMap w = PlanarMap::contract(p, absorbed, holes);
  const auto n = static_cast<std::size_t>(w.node_count());
  std::vector<const std::vector<Dart>*> domains;
  for (const auto& face : w.faces()) {
    if (face.size() == n) domains.push_back(&face);
  }
  if (domains.size() != 2) throw Error(ErrorKind::InternalInconsistency, "band piece does not have two domains");
  auto min_dart = [](const std::vector<Dart>* f) { return *std::min_element(f->begin(), f->end()); };
  if (min_dart(domains[1]) < min_dart(domains[0])) std::swap(domains[0], domains[1]);
  for (int i = 0; i < 2; ++i) piece.domains[i] = walk_face(w, *domains[i]);

  const DomainWalk& dw = piece.domains[0];
  for (int k : dw.circle) {
    if (k >= 0) piece.circles.push_back(k);
  }
  const std::size_t m = std::max<std::size_t>(1, piece.circles.size());
  piece.weights.assign(m, 0);
  piece.twists.assign(m, {});
  std::size_t sector = 0;
  int seen = 0;
  for (std::size_t i = 0; i < dw.circle.size(); ++i) {
    if (dw.circle[i] >= 0) {
      ++seen;
      sector = static_cast<std::size_t>(seen) % m;
      continue;
    }
    int sign = is_over(w.next(dw.arrival[i])) ? 1 : -1;
    auto& tw = piece.twists[sector];
    if (!tw.empty() && (piece.weights[sector] > 0) != (sign > 0)) {
      throw Error(ErrorKind::Rule3Violation,
                  "Rule 3: adjacent singletons along one band have opposite signs (crossings " +
                      std::to_string(tw.back()) + " and " + std::to_string(dw.crossing[i]) + ")");
    }
    tw.push_back(dw.crossing[i]);
    piece.weights[sector] += sign;
  }
}

Piece hopf_piece(const LinkProjection& p) {
  Piece piece;
  piece.kind = PieceKind::TwistedBand;
  piece.crossings = CrossingSet(2);
  piece.crossings.set();
  piece.v = 2;
  // Band faces: those of the corners after the odd slots of crossing 1.
  int band_face = p.face_of_corner(dart_at(1, 1));
  Dart g = -1;
  for (int k = 0; k < 4; ++k) {
    if (p.face_of_corner(dart_at(0, k)) == band_face) g = dart_at(0, k);
  }
  if (g < 0) throw Error(ErrorKind::InternalInconsistency, "Hopf shadow has no shared face");
  if (!is_over(g)) {
    throw Error(ErrorKind::Rule3Violation, "Rule 3: the two crossings of the Hopf band have opposite signs");
  }
  piece.weights = {2};
  piece.twists = {{0, 1}};
  return piece;
}

}  // namespace

Decomposition assemble(const LinkProjection& p, const CircleFamily& cm, const CircleFamily& ccan) {
  Decomposition dec;
  dec.cm = cm;
  dec.ccan = ccan;
  dec.regions = subdiagrams(p, cm);
  for (const auto& r : dec.regions) {
    if (r.kind == RegionKind::Other) throw Error(ErrorKind::NotConway, "family is not a Conway family");
  }
  auto parent = family_parents(cm);
  std::vector<int> ccan_index(cm.size(), -1);
  for (int k = 0; k < cm.size(); ++k) {
    for (int j = 0; j < ccan.size(); ++j) {
      if (cm.circles[k] == ccan.circles[j]) ccan_index[k] = j;
    }
    if (ccan_index[k] < 0 && !cm.circles[k].bounds_singleton()) {
      throw Error(ErrorKind::InternalInconsistency, "canonical family is not C_m minus singleton circles");
    }
  }

  bool all_singletons = std::all_of(dec.regions.begin(), dec.regions.end(),
                                    [](const SubDiagram& r) { return r.kind == RegionKind::Singleton; });
  if (all_singletons) {
    if (p.crossing_count() != 2) throw Error(ErrorKind::InternalInconsistency, "unexpected all-singleton layout");
    dec.hopf = true;
    dec.pieces.push_back(hopf_piece(p));
    dec.components.push_back(Component{true, {0}});
    return dec;
  }

  std::vector<int> region_piece(dec.regions.size(), -1);
  for (const auto& r : dec.regions) {
    if (r.kind == RegionKind::Singleton) continue;
    Piece piece;
    piece.kind = r.kind == RegionKind::Band ? PieceKind::TwistedBand : PieceKind::Jewel;
    piece.region = r.id;
    piece.v = r.v();
    piece.crossings = r.crossings;
    CrossingSet absorbed(p.crossing_count());
    std::vector<std::pair<CrossingSet, int>> holes;
    for (int k : r.boundary) {
      const bool outer = k == r.owner;
      if (cm.circles[k].bounds_singleton()) {
        const SubDiagram& across = dec.regions[outer ? parent[k] + 1 : k + 1];
        if (across.kind != RegionKind::Singleton) {
          throw Error(ErrorKind::InternalInconsistency, "singleton circle does not border a singleton");
        }
        absorbed.set(singleton_crossing(across));
      } else {
        holes.emplace_back(outer ? ~cm.circles[k].inside : cm.circles[k].inside, ccan_index[k]);
      }
    }
    piece.crossings |= absorbed;
    piece.absorbed = absorbed;
    piece.holes = holes;
    if (piece.kind == PieceKind::TwistedBand) {
      fill_band(p, piece, absorbed, holes);
    } else {
      for (const auto& h : holes) piece.circles.push_back(h.second);
      std::sort(piece.circles.begin(), piece.circles.end());
    }
    region_piece[r.id] = static_cast<int>(dec.pieces.size());
    dec.pieces.push_back(std::move(piece));
  }

  dec.circle_pieces.assign(ccan.size(), {-1, -1});
  for (int k = 0; k < cm.size(); ++k) {
    int j = ccan_index[k];
    if (j < 0) continue;
    dec.circle_pieces[j] = {region_piece[k + 1], region_piece[parent[k] + 1]};
    if (dec.circle_pieces[j][0] < 0 || dec.circle_pieces[j][1] < 0) {
      throw Error(ErrorKind::InternalInconsistency, "canonical circle borders a singleton");
    }
  }

  const int np = static_cast<int>(dec.pieces.size());
  std::vector<int> root(np);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [a, b] : dec.circle_pieces) {
    if (dec.pieces[a].kind == dec.pieces[b].kind) {
      int ra = find(a), rb = find(b);
      if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  for (int i = 0; i < np; ++i) {
    if (find(i) != i) continue;
    Component comp;
    comp.arborescent = dec.pieces[i].kind == PieceKind::TwistedBand;
    for (int j = 0; j < np; ++j) {
      if (find(j) == i) comp.pieces.push_back(j);
    }
    dec.components.push_back(std::move(comp));
  }
  return dec;
}

Decomposition decompose(const LinkProjection& p, std::optional<std::uint64_t> seed) {
  check_rule1(p);
  CircleFamily maximal = maximal_family(p, seed);
  CircleFamily cm = minimize(p, maximal, seed);
  CircleFamily ccan = canonical_family(p, cm);
  return assemble(p, cm, ccan);
}

CircleType classify_circle(const LinkProjection& p, const Decomposition& dec, const HasemanCircle& h) {
  (void)p;
  if (h.bounds_singleton()) {
    CircleType t{CircleTag::SingletonBoundary, -1};
    for (int k = 0; k < dec.cm.size(); ++k) {
      if (dec.cm.circles[k] == h) t.anchor = k;
    }
    return t;
  }
  for (int j = 0; j < dec.ccan.size(); ++j) {
    if (!(dec.ccan.circles[j] == h)) continue;
    auto [a, b] = dec.circle_pieces[j];
    bool ja = dec.pieces[a].kind == PieceKind::Jewel, jb = dec.pieces[b].kind == PieceKind::Jewel;
    CircleTag tag = ja && jb   ? CircleTag::CanonicalJewelJewel
                    : !ja && !jb ? CircleTag::CanonicalBandBand
                                 : CircleTag::CanonicalJewelBand;
    return CircleType{tag, j};
  }
  for (const auto& g : dec.cm.circles) {
    if (!are_laminar(g, h)) {
      throw Error(ErrorKind::Unclassifiable, "circle crosses a circle of the minimal Conway family");
    }
  }
  for (const auto& r : dec.regions) {
    if (r.kind == RegionKind::Singleton) continue;
    int in = 0, out = 0;
    bool split = false;
    for (auto x = r.crossings.find_first(); x != CrossingSet::npos; x = r.crossings.find_next(x)) {
      (h.inside.test(x) ? in : out) += 1;
    }
    for (int k : r.boundary) {
      CrossingSet s = k == r.owner ? ~dec.cm.circles[k].inside : dec.cm.circles[k].inside;
      if (s.is_subset_of(h.inside)) ++in;
      else if (!s.intersects(h.inside)) ++out;
      else split = true;
    }
    if (split || in < 2 || out < 2) continue;
    for (std::size_t i = 0; i < dec.pieces.size(); ++i) {
      if (dec.pieces[i].region == r.id && dec.pieces[i].kind == PieceKind::TwistedBand) {
        return CircleType{CircleTag::BandInterior, static_cast<int>(i)};
      }
    }
    throw Error(ErrorKind::Unclassifiable, "essential circle inside a basic diagram");
  }
  throw Error(ErrorKind::Unclassifiable, "circle lies in no region of the minimal Conway family");
}

}  // namespace knotdec
