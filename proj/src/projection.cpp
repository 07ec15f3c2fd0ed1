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

#include "knotdec/projection.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace knotdec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::CrossingFree: return "CrossingFree";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::Unclassifiable: return "Unclassifiable";
    case ErrorKind::NotConway: return "NotConway";
    case ErrorKind::Rule3Violation: return "Rule3Violation";
    case ErrorKind::NotArborescent: return "NotArborescent";
    case ErrorKind::FreeEdges: return "FreeEdges";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::InvalidMove: return "InvalidMove";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

// Orbits of d -> rotate_ccw(opposite(d)).
int trace_faces(const std::vector<Dart>& opposite, std::vector<Face>* out,
                std::vector<int>* corner_face) {
  const int n = static_cast<int>(opposite.size());
  std::vector<int> face_of(n, -1);
  int count = 0;
  for (Dart start = 0; start < n; ++start) {
    if (face_of[start] >= 0) continue;
    Face f;
    f.id = count;
    Dart d = start;
    do {
      face_of[d] = count;
      f.boundary.push_back(d);
      d = rotate_ccw(opposite[d]);
    } while (d != start);
    if (out) out->push_back(std::move(f));
    ++count;
  }
  if (corner_face) {
    corner_face->assign(n, -1);
    for (Dart d = 0; d < n; ++d) (*corner_face)[opposite[d]] = face_of[d];
  }
  return count;
}

}  // namespace

bool is_connected_matching(const std::vector<Dart>& opposite) {
  const int c = static_cast<int>(opposite.size()) / 4;
  if (c == 0) return false;
  std::vector<char> seen(c, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      int y = crossing_of(opposite[dart_at(x, s)]);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == c;
}

int face_count_of_matching(const std::vector<Dart>& opposite) {
  return trace_faces(opposite, nullptr, nullptr);
}

LinkProjection::LinkProjection(std::vector<Dart> opposite) : opposite_(std::move(opposite)) {
  const int n = static_cast<int>(opposite_.size());
  edge_of_.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (edge_of_[d] >= 0) continue;
    edge_of_[d] = edge_of_[opposite_[d]] = static_cast<int>(edges_.size());
    edges_.emplace_back(d, opposite_[d]);
  }
  trace_faces(opposite_, &faces_, &corner_face_);
}

LinkProjection LinkProjection::from_matching(std::vector<Dart> opposite) {
  const int n = static_cast<int>(opposite.size());
  if (n == 0) throw Error(ErrorKind::CrossingFree, "projection has no crossings");
  if (n % 4 != 0) throw Error(ErrorKind::MalformedInput, "dart count is not a multiple of 4");
  for (Dart d = 0; d < n; ++d) {
    Dart e = opposite[d];
    if (e < 0 || e >= n || e == d || opposite[e] != d) {
      throw Error(ErrorKind::MalformedInput, "dart matching is not a fixed-point-free involution");
    }
  }
  if (!is_connected_matching(opposite)) {
    throw Error(ErrorKind::Disconnected, "projection is disconnected (Rule 1)");
  }
  const int c = n / 4;
  if (face_count_of_matching(opposite) != c + 2) {
    throw Error(ErrorKind::NonPlanar, "rotation system is not planar (V - E + F != 2)");
  }
  return LinkProjection(std::move(opposite));
}

namespace {

std::vector<Dart> remap(const std::vector<Dart>& opposite, const std::vector<Dart>& to) {
  std::vector<Dart> out(opposite.size());
  for (std::size_t d = 0; d < opposite.size(); ++d) out[to[d]] = to[opposite[d]];
  return out;
}

}  // namespace

LinkProjection LinkProjection::with_switched_crossing(int crossing) const {
  std::vector<Dart> to(opposite_.size());
  std::iota(to.begin(), to.end(), 0);
  for (int s = 0; s < 4; ++s) to[dart_at(crossing, s)] = dart_at(crossing, s + 1);
  return LinkProjection(remap(opposite_, to));
}

LinkProjection LinkProjection::alternating_version() const {
  const int c = crossing_count();
  std::vector<int> flip(c, -1);
  flip[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      Dart d = dart_at(x, s);
      Dart e = opposite_[d];
      int y = crossing_of(e);
      // want (over(d) ^ flip x) != (over(e) ^ flip y)
      int want = (is_over(d) ? 1 : 0) ^ flip[x] ^ (is_over(e) ? 1 : 0) ^ 1;
      if (flip[y] < 0) {
        flip[y] = want;
        stack.push_back(y);
      } else if (flip[y] != want) {
        throw Error(ErrorKind::InternalInconsistency, "no alternating assignment for a planar shadow");
      }
    }
  }
  std::vector<Dart> to(opposite_.size());
  for (Dart d = 0; d < static_cast<Dart>(to.size()); ++d) {
    to[d] = rotate_ccw(d, flip[crossing_of(d)]);
  }
  return LinkProjection(remap(opposite_, to));
}

LinkProjection LinkProjection::reflected() const {
  std::vector<Dart> to(opposite_.size());
  for (Dart d = 0; d < static_cast<Dart>(to.size()); ++d) {
    to[d] = dart_at(crossing_of(d), (4 - slot_of(d)) & 3);
  }
  return LinkProjection(remap(opposite_, to));
}

// ---------------------------------------------------------------------------
// PD text

namespace {

class PdLexer {
 public:
  explicit PdLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';') {
        ++pos_;
      } else {
        break;
      }
    }
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char a, char b) {
    char ch = peek();
    if (ch != a && ch != b) fail(std::string("expected '") + a + "'");
    ++pos_;
  }
  long number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer edge label");
    if (pos_ - start > 9) fail("edge label too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }
  bool try_keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) == kw) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << "PD parse error at line " << line << ", column " << col << ": " << msg;
    throw Error(ErrorKind::MalformedInput, os.str());
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LinkProjection parse_pd(std::string_view text) {
  PdLexer lex(text);
  std::vector<std::array<long, 4>> records;
  bool wrapped = false;
  if (lex.try_keyword("PD")) {
    lex.expect('[', '(');
    wrapped = true;
  }
  while (!lex.done()) {
    char ch = lex.peek();
    if (wrapped && (ch == ']' || ch == ')')) {
      lex.expect(']', ')');
      wrapped = false;
      continue;
    }
    if (!lex.try_keyword("X")) lex.fail("expected a crossing record X(a,b,c,d)");
    lex.expect('(', '[');
    std::array<long, 4> rec{};
    for (auto& v : rec) {
      v = lex.number();
      if (v <= 0) lex.fail("edge labels must be positive");
    }
    lex.expect(')', ']');
    records.push_back(rec);
  }
  if (wrapped) lex.fail("unterminated PD[...] wrapper");
  if (records.empty()) throw Error(ErrorKind::CrossingFree, "PD code has no crossings");

  std::map<long, std::vector<Dart>> occurrences;
  for (std::size_t x = 0; x < records.size(); ++x) {
    for (int s = 0; s < 4; ++s) occurrences[records[x][s]].push_back(dart_at(static_cast<int>(x), s));
  }
  std::vector<Dart> opposite(records.size() * 4, -1);
  for (const auto& [label, darts] : occurrences) {
    if (darts.size() != 2) {
      std::ostringstream os;
      os << "edge label " << label << " occurs " << darts.size() << " time(s), expected exactly 2";
      throw Error(ErrorKind::MalformedInput, os.str());
    }
    opposite[darts[0]] = darts[1];
    opposite[darts[1]] = darts[0];
  }
  return LinkProjection::from_matching(std::move(opposite));
}

std::string serialize_pd(const LinkProjection& input) {
  const LinkProjection p = canonical_relabeling(input);
  const int n = static_cast<int>(p.matching().size());
  // Orient strands: walk each component from its smallest unvisited dart.
  std::vector<int> label(n, 0);
  std::vector<char> incoming(n, 0);
  int next_label = 1;
  for (Dart start = 0; start < n; ++start) {
    if (label[start]) continue;
    Dart d = start;
    while (!label[d]) {
      Dart e = p.opposite(d);
      label[d] = label[e] = next_label++;
      incoming[e] = 1;
      d = rotate_ccw(e, 2);
    }
  }
  std::ostringstream os;
  for (int x = 0; x < p.crossing_count(); ++x) {
    int s0 = incoming[dart_at(x, 0)] ? 0 : 2;
    if (x) os << ",";
    os << "X(";
    for (int k = 0; k < 4; ++k) {
      if (k) os << ",";
      os << label[dart_at(x, s0 + k)];
    }
    os << ")";
  }
  return os.str();
}

const std::vector<Face>& faces(const LinkProjection& p) { return p.faces(); }

bool is_prime(const LinkProjection& p) {
  // A 2-point curve separating crossings is a dual 2-cycle: two distinct
  // edges bordering the same pair of faces.
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < p.edge_count(); ++e) {
    auto [a, b] = p.edge_darts(e);
    int f = p.face_right_of(a), g = p.face_right_of(b);
    auto key = std::minmax(f, g);
    if (!seen.insert(key).second) return false;
  }
  return true;
}

std::vector<Listing> listing_labels(const LinkProjection& p) {
  std::vector<Listing> out(p.matching().size());
  for (Dart d = 0; d < static_cast<Dart>(out.size()); ++d) {
    out[d] = is_over(d) ? Listing::Lambda : Listing::Delta;
  }
  return out;
}

bool is_monotyp(const LinkProjection& p, const Face& f) {
  bool first = true;
  bool label = false;
  for (Dart d : f.boundary) {
    bool l = is_over(p.opposite(d));
    if (first) {
      label = l;
      first = false;
    } else if (l != label) {
      return false;
    }
  }
  return true;
}

bool is_alternating(const LinkProjection& p) {
  bool by_strand = true;
  for (int e = 0; e < p.edge_count(); ++e) {
    auto [a, b] = p.edge_darts(e);
    if (is_over(a) == is_over(b)) by_strand = false;
  }
  bool by_regions = std::all_of(p.faces().begin(), p.faces().end(),
                                [&](const Face& f) { return is_monotyp(p, f); });
  if (by_strand != by_regions) {
    throw Error(ErrorKind::InternalInconsistency,
                "strand alternation and monotyp regions disagree");
  }
  return by_strand;
}

Checkerboard checkerboard(const LinkProjection& p) {
  const int nf = static_cast<int>(p.faces().size());
  std::vector<int> color(nf, -1);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (Dart d : p.faces()[f].boundary) {
      int g = p.face_right_of(p.opposite(d));
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        throw Error(ErrorKind::InternalInconsistency, "face 2-colouring failed");
      }
    }
  }
  Checkerboard cb;
  for (int c : color) cb.color.push_back(c == 0 ? Color::Black : Color::White);
  return cb;
}

bool is_proper_coloring(const LinkProjection& p, const Checkerboard& cb) {
  if (cb.color.size() != p.faces().size()) return false;
  for (int e = 0; e < p.edge_count(); ++e) {
    auto [a, b] = p.edge_darts(e);
    if (cb.color[p.face_right_of(a)] == cb.color[p.face_right_of(b)]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

// Breadth-first relabeling from `start` in orientation `dir` (+1 / -1).
// Writes the code into `code`; aborts early (returning false) once the code
// is known to exceed `best`.
bool bfs_code(const std::vector<Dart>& opposite, Dart start, int dir, bool with_crossings,
              const std::vector<int>* best, std::vector<int>& code,
              std::vector<Dart>* order = nullptr) {
  const int c = static_cast<int>(opposite.size()) / 4;
  std::vector<int> label(c, -1);
  std::vector<Dart> entry;
  entry.reserve(c);
  code.clear();
  label[crossing_of(start)] = 0;
  entry.push_back(start);
  bool tied = best != nullptr;
  auto push = [&](int v) {
    if (tied) {
      int b = (*best)[code.size()];
      if (v > b) return false;
      if (v < b) tied = false;
    }
    code.push_back(v);
    return true;
  };
  for (std::size_t i = 0; i < entry.size(); ++i) {
    Dart base = entry[i];
    if (with_crossings && !push(is_over(base) ? 1 : 0)) return false;
    for (int k = 0; k < 4; ++k) {
      Dart d = rotate_ccw(base, dir * k);
      Dart e = opposite[d];
      int y = crossing_of(e);
      if (label[y] < 0) {
        label[y] = static_cast<int>(entry.size());
        entry.push_back(e);
      }
      int rel = ((slot_of(e) - slot_of(entry[label[y]])) * dir) & 3;
      if (!push(label[y] * 4 + rel)) return false;
    }
  }
  if (order) {
    order->clear();
    for (Dart b : entry) {
      for (int k = 0; k < 4; ++k) order->push_back(rotate_ccw(b, dir * k));
    }
  }
  return true;
}

std::pair<Dart, int> best_start(const std::vector<Dart>& opposite, bool with_crossings,
                                 bool allow_reflection, std::vector<int>& best) {
  std::vector<int> code;
  std::pair<Dart, int> arg{-1, 0};
  best.clear();
  for (Dart s = 0; s < static_cast<Dart>(opposite.size()); ++s) {
    for (int dir : {1, -1}) {
      if (dir < 0 && !allow_reflection) continue;
      bool have = arg.first >= 0;
      if (bfs_code(opposite, s, dir, with_crossings, have ? &best : nullptr, code)) {
        if (!have || code < best) {
          best = code;
          arg = {s, dir};
        }
      }
    }
  }
  return arg;
}

}  // namespace

std::vector<int> canonical_code(const LinkProjection& p) {
  std::vector<int> best;
  best_start(p.matching(), true, true, best);
  return best;
}

std::vector<int> canonical_shadow_code(const std::vector<Dart>& opposite) {
  std::vector<int> best;
  best_start(opposite, false, true, best);
  return best;
}

bool isomorphic(const LinkProjection& a, const LinkProjection& b) {
  return a.crossing_count() == b.crossing_count() && canonical_code(a) == canonical_code(b);
}

LinkProjection canonical_relabeling(const LinkProjection& p) {
  std::vector<int> best;
  auto [start, dir] = best_start(p.matching(), true, false, best);
  std::vector<int> code;
  std::vector<Dart> order;
  bfs_code(p.matching(), start, dir, true, nullptr, code, &order);
  // order[k] is the old dart receiving new id k; over-darts must land on odd
  // slots, so shift a crossing's block by one when its entry dart is over.
  std::vector<Dart> to(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    Dart entry = order[k & ~std::size_t{3}];
    int shift = is_over(entry) ? 1 : 0;
    to[order[k]] = rotate_ccw(static_cast<Dart>(k), shift);
  }
  std::vector<Dart> out(order.size());
  for (std::size_t d = 0; d < order.size(); ++d) out[to[d]] = to[p.opposite(static_cast<Dart>(d))];
  return LinkProjection::from_matching(std::move(out));
}

// ---------------------------------------------------------------------------
// PlanarMap

std::vector<Dart> boundary_rotation(const LinkProjection& p, const CrossingSet& s) {
  auto inside = [&](Dart d) { return s.test(static_cast<std::size_t>(crossing_of(d))); };
  Dart first = -1;
  int cut_total = 0;
  for (auto x = s.find_first(); x != CrossingSet::npos; x = s.find_next(x)) {
    for (int k = 0; k < 4; ++k) {
      Dart d = dart_at(static_cast<int>(x), k);
      if (!inside(p.opposite(d))) {
        ++cut_total;
        if (first < 0) first = d;
      }
    }
  }
  std::vector<Dart> out;
  if (first < 0) return out;
  Dart d = first;
  do {
    out.push_back(d);
    Dart y = rotate_ccw(d);
    while (inside(p.opposite(y))) y = rotate_ccw(p.opposite(y));
    d = y;
  } while (d != first && static_cast<int>(out.size()) <= cut_total);
  if (static_cast<int>(out.size()) != cut_total) {
    throw Error(ErrorKind::InternalInconsistency, "crossing set boundary is not a single curve");
  }
  return out;
}

PlanarMap::PlanarMap(const LinkProjection& p, std::vector<MapNode> nodes)
    : proj_(&p), nodes_(std::move(nodes)) {
  const int n = static_cast<int>(p.matching().size());
  node_of_.assign(n, -1);
  pos_of_.assign(n, -1);
  for (int i = 0; i < node_count(); ++i) {
    for (int k = 0; k < 4; ++k) {
      Dart d = nodes_[i].darts[k];
      if (node_of_[d] >= 0) throw Error(ErrorKind::InternalInconsistency, "dart used twice in a map view");
      node_of_[d] = i;
      pos_of_[d] = k;
    }
  }
  std::vector<int> face_of(n, -1);
  corner_face_.assign(n, -1);
  for (Dart start = 0; start < n; ++start) {
    if (node_of_[start] < 0 || face_of[start] >= 0) continue;
    if (node_of_[p.opposite(start)] < 0) {
      throw Error(ErrorKind::InternalInconsistency, "map view is not closed under the edge matching");
    }
    std::vector<Dart> face;
    int id = static_cast<int>(faces_.size());
    Dart d = start;
    do {
      face_of[d] = id;
      face.push_back(d);
      d = next(p.opposite(d));
    } while (d != start);
    faces_.push_back(std::move(face));
  }
  for (Dart d = 0; d < n; ++d) {
    if (face_of[d] >= 0) corner_face_[p.opposite(d)] = face_of[d];
  }
}

PlanarMap PlanarMap::of(const LinkProjection& p) {
  std::vector<MapNode> nodes(p.crossing_count());
  for (int x = 0; x < p.crossing_count(); ++x) {
    for (int k = 0; k < 4; ++k) nodes[x].darts[k] = dart_at(x, k);
    nodes[x].crossing = x;
    nodes[x].members.resize(p.crossing_count());
    nodes[x].members.set(x);
  }
  return PlanarMap(p, std::move(nodes));
}

PlanarMap PlanarMap::contract(const LinkProjection& p, const CrossingSet& keep,
                              const std::vector<std::pair<CrossingSet, int>>& holes) {
  std::vector<MapNode> nodes;
  for (auto x = keep.find_first(); x != CrossingSet::npos; x = keep.find_next(x)) {
    MapNode node;
    for (int k = 0; k < 4; ++k) node.darts[k] = dart_at(static_cast<int>(x), k);
    node.crossing = static_cast<int>(x);
    node.members.resize(p.crossing_count());
    node.members.set(x);
    nodes.push_back(std::move(node));
  }
  for (const auto& [set, tag] : holes) {
    std::vector<Dart> rot = boundary_rotation(p, set);
    if (rot.size() != 4) {
      throw Error(ErrorKind::InternalInconsistency, "contracted disc does not meet the projection in 4 points");
    }
    MapNode node;
    std::copy(rot.begin(), rot.end(), node.darts.begin());
    node.hole = tag;
    node.members = set;
    nodes.push_back(std::move(node));
  }
  return PlanarMap(p, std::move(nodes));
}

std::vector<std::pair<Dart, Dart>> PlanarMap::edges() const {
  std::vector<std::pair<Dart, Dart>> out;
  for (const auto& node : nodes_) {
    for (Dart d : node.darts) {
      Dart e = proj_->opposite(d);
      if (d < e) out.emplace_back(d, e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace knotdec
