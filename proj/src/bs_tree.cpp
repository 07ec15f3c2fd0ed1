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

#include "knotdec/bs_tree.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <sstream>
#include <variant>

namespace knotdec {

int TreeVertex::weight() const { return std::accumulate(sectors.begin(), sectors.end(), 0); }

int PlanarTree::free_edge_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const TreeEdge& e) { return e.free(); }));
}

void PlanarTree::validate() const {
  auto bad = [](const std::string& msg) { throw Error(ErrorKind::MalformedInput, "invalid tree: " + msg); };
  const int n = vertex_count();
  if (n == 0) bad("no vertices");
  std::vector<int> uses(edges.size(), 0);
  int internal = 0;
  for (const auto& e : edges) {
    if (e.a < 0 || e.a >= n || e.b >= n || e.a == e.b) bad("edge endpoint out of range");
    internal += !e.free();
  }
  for (int v = 0; v < n; ++v) {
    const auto& vx = vertices[v];
    if (static_cast<int>(vx.sectors.size()) != std::max(1, vx.degree())) bad("sector count differs from degree");
    for (int e : vx.edges) {
      if (e < 0 || e >= static_cast<int>(edges.size())) bad("edge index out of range");
      if (edges[e].a != v && edges[e].b != v) bad("edge listed at a vertex it does not touch");
      ++uses[e];
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (uses[e] != (edges[e].free() ? 1 : 2)) bad("edge not listed at each endpoint exactly once");
  }
  if (internal != n - 1) bad("not a tree");
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : vertices[v].edges) {
      int w = other_end(e, v);
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) bad("not connected");
}

// ---------------------------------------------------------------------------
// Literal

namespace {

struct LitNode;
using LitItem = std::variant<int, char, std::unique_ptr<LitNode>>;  // weight, '*', child
struct LitNode {
  std::vector<LitItem> items;
};

class LitParser {
 public:
  explicit LitParser(std::string_view s) : s_(s) {}

  std::unique_ptr<LitNode> parse() {
    auto n = node();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return n;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "tree literal error at offset " + std::to_string(pos_) + ": " + msg);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::unique_ptr<LitNode> node() {
    expect('V');
    expect('(');
    auto n = std::make_unique<LitNode>();
    for (;;) {
      n->items.push_back(item());
      skip();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      return n;
    }
  }
  LitItem item() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '*') {
      ++pos_;
      return LitItem(std::in_place_index<1>, '*');
    }
    if (c == 'V') return LitItem(node());
    std::size_t start = pos_;
    if (c == '-' || c == '+') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits || pos_ - digits > 6) fail("expected a weight, '*' or V(...)");
    return LitItem(std::in_place_index<0>, std::stoi(std::string(s_.substr(start, pos_ - start))));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

class TreeBuilder {
 public:
  PlanarTree tree;

  void root(const LitNode& n) {
    std::vector<const LitItem*> items;
    for (const auto& it : n.items) items.push_back(&it);
    int v = new_vertex();
    if (items.size() == 1) {
      tree.vertices[v].sectors = {weight_of(*items[0])};
      return;
    }
    static const LitItem star(std::in_place_index<1>, '*');
    if (items.size() % 2 == 1) items.push_back(&star);
    std::vector<int> sectors;
    std::vector<const LitItem*> edge_items;
    for (std::size_t i = 0; i < items.size(); i += 2) {
      sectors.push_back(weight_of(*items[i]));
      edge_items.push_back(items[i + 1]);
    }
    tree.vertices[v].sectors = sectors;
    for (const LitItem* e : edge_items) {
      int id = attach(v, *e);  // may grow tree.vertices
      tree.vertices[v].edges.push_back(id);
    }
  }

 private:
  int new_vertex() {
    tree.vertices.emplace_back();
    return tree.vertex_count() - 1;
  }

  static int weight_of(const LitItem& it) {
    if (it.index() != 0) throw Error(ErrorKind::Parse, "tree literal error: expected a weight between edges");
    return std::get<0>(it);
  }

  int attach(int v, const LitItem& it) {
    if (it.index() == 0) throw Error(ErrorKind::Parse, "tree literal error: expected an edge after a weight");
    int e = static_cast<int>(tree.edges.size());
    tree.edges.push_back(TreeEdge{v, -1});
    if (it.index() == 2) {
      int w = child(*std::get<2>(it), e);
      tree.edges[e].b = w;
    }
    return e;
  }

  int child(const LitNode& n, int parent_edge) {
    if (n.items.size() % 2 == 0) {
      throw Error(ErrorKind::Parse, "tree literal error: a nested vertex must end with a weight");
    }
    int v = new_vertex();
    const std::size_t m = 1 + (n.items.size() - 1) / 2;
    std::vector<int> sectors(m);
    sectors[0] = weight_of(n.items.back());
    tree.vertices[v].edges.push_back(parent_edge);
    tree.vertices[v].sectors = sectors;
    for (std::size_t i = 1; i < m; ++i) {
      tree.vertices[v].sectors[i] = weight_of(n.items[2 * (i - 1)]);
      int e = attach(v, n.items[2 * (i - 1) + 1]);
      tree.vertices[v].edges.push_back(e);
    }
    return v;
  }
};

void format_child(const PlanarTree& t, int v, int via, std::string& out);

void format_edge(const PlanarTree& t, int v, int e, std::string& out) {
  int w = t.other_end(e, v);
  if (w < 0) out += '*';
  else format_child(t, w, e, out);
}

void format_child(const PlanarTree& t, int v, int via, std::string& out) {
  const auto& vx = t.vertices[v];
  const int m = vx.degree();
  int at = static_cast<int>(std::find(vx.edges.begin(), vx.edges.end(), via) - vx.edges.begin());
  out += "V(";
  for (int i = 1; i < m; ++i) {
    out += std::to_string(vx.sectors[(at + i) % m]);
    out += ',';
    format_edge(t, v, vx.edges[(at + i) % m], out);
    out += ',';
  }
  out += std::to_string(vx.sectors[at]);
  out += ')';
}

}  // namespace

PlanarTree parse_tree(std::string_view text) {
  LitParser parser(text);
  auto root = parser.parse();
  TreeBuilder b;
  b.root(*root);
  try {
    b.tree.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return std::move(b.tree);
}

std::string format_tree(const PlanarTree& t, int root, int start) {
  const auto& vx = t.vertices[root];
  const int m = vx.degree();
  std::string out = "V(";
  if (m == 0) {
    out += std::to_string(vx.sectors[0]);
  } else {
    for (int i = 0; i < m; ++i) {
      if (i) out += ',';
      out += std::to_string(vx.sectors[(start + i) % m]);
      out += ',';
      format_edge(t, root, vx.edges[(start + i) % m], out);
    }
  }
  out += ')';
  return out;
}

void reverse_vertex(PlanarTree& t, int v) {
  auto& vx = t.vertices[v];
  const int m = vx.degree();
  if (m <= 1) return;
  std::vector<int> edges(vx.edges.rbegin(), vx.edges.rend());
  std::vector<int> sectors(m);
  for (int j = 0; j < m; ++j) sectors[j] = vx.sectors[(m - j) % m];
  vx.edges = std::move(edges);
  vx.sectors = std::move(sectors);
}

PlanarTree reflect(const PlanarTree& t) {
  PlanarTree r = t;
  for (int v = 0; v < r.vertex_count(); ++v) reverse_vertex(r, v);
  return r;
}

std::string canonical_literal(const PlanarTree& t) {
  // A closed two-twist is the Hopf band seen along either axis.
  if (t.vertex_count() == 1 && t.vertices[0].degree() == 0 && t.vertices[0].sectors[0] == -2) return "V(2)";
  std::string best;
  const PlanarTree mirrored = reflect(t);
  for (const PlanarTree* cand : {&t, &mirrored}) {
    for (int r = 0; r < cand->vertex_count(); ++r) {
      const int m = std::max(1, cand->vertices[r].degree());
      for (int s = 0; s < m; ++s) {
        std::string lit = format_tree(*cand, r, s);
        if (best.empty() || lit < best) best = std::move(lit);
      }
    }
  }
  return best;
}

PlanarTree canonical_tree(const PlanarTree& t) { return parse_tree(canonical_literal(t)); }

AbstractTree abstract_tree(const PlanarTree& t) {
  AbstractTree a;
  a.free_edges.assign(t.vertex_count(), 0);
  for (const auto& v : t.vertices) a.weight.push_back(v.weight());
  for (const auto& e : t.edges) {
    if (e.free()) ++a.free_edges[e.a];
    else a.edges.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
  }
  std::sort(a.edges.begin(), a.edges.end());
  return a;
}

AlternatingVerdict is_alternating_tree(const AbstractTree& a) {
  const int n = static_cast<int>(a.weight.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : a.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> parity(n, -1);
  std::vector<int> queue{0};
  parity[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    for (int w : adj[u]) {
      if (parity[w] < 0) {
        parity[w] = parity[u] ^ 1;
        queue.push_back(w);
      }
    }
  }
  int sigma = 0;
  for (int v = 0; v < n; ++v) {
    if (a.weight[v] == 0) continue;
    int want = (a.weight[v] > 0 ? 1 : -1) * (parity[v] ? -1 : 1);
    if (sigma == 0) sigma = want;
    else if (sigma != want) return {};
  }
  if (sigma == 0) sigma = 1;
  AlternatingVerdict out;
  out.alternating = true;
  for (int v = 0; v < n; ++v) out.signs.push_back(sigma * (parity[v] ? -1 : 1));
  return out;
}

int min_crossing_number(const AbstractTree& a) {
  if (!is_alternating_tree(a).alternating) {
    throw Error(ErrorKind::NotAlternating, "adjacent vertices carry weights of the same sign");
  }
  int total = 0;
  for (int w : a.weight) total += std::abs(w);
  return total;
}

std::string_view to_string(TreeShape s) {
  switch (s) {
    case TreeShape::SingletonVertex: return "singleton-vertex";
    case TreeShape::Bamboo: return "bamboo";
    case TreeShape::General: return "general";
  }
  return "general";
}

TreeShape classify_shape(const PlanarTree& t) {
  if (t.vertex_count() == 1 && t.vertices[0].degree() == 0) return TreeShape::SingletonVertex;
  for (const auto& v : t.vertices) {
    if (v.degree() > 2) return TreeShape::General;
  }
  return TreeShape::Bamboo;
}

PlanarTree close_free_edge(const PlanarTree& t, int edge, int weight) {
  if (edge < 0 || edge >= static_cast<int>(t.edges.size()) || !t.edges[edge].free()) {
    throw Error(ErrorKind::InvalidMove, "edge " + std::to_string(edge) + " is not a free edge");
  }
  if (std::abs(weight) < 2) throw Error(ErrorKind::InvalidMove, "a closing twist needs |weight| >= 2");
  PlanarTree out = t;
  TreeVertex leaf;
  leaf.edges = {edge};
  leaf.sectors = {weight};
  out.vertices.push_back(leaf);
  out.edges[edge].b = out.vertex_count() - 1;
  return out;
}

void check_weights(const PlanarTree& t) {
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto& vx = t.vertices[v];
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorKind::InvalidWeights, "vertex " + std::to_string(v) + ": " + msg);
    };
    if (vx.degree() <= 1 && std::abs(vx.sectors[0]) < 2) fail("a twisted band without canonical circles needs |a| >= 2");
    if (vx.degree() == 2 && vx.sectors[0] == 0 && vx.sectors[1] == 0) fail("two-edge vertex needs a nonzero sector");
    bool pos = false, neg = false;
    for (int a : vx.sectors) {
      pos |= a > 0;
      neg |= a < 0;
    }
    if (pos && neg) fail("Rule 4: nonzero intermediate weights must share one sign");
  }
}

std::string to_dot(const PlanarTree& t) {
  std::ostringstream os;
  os << "graph tree {\n  node [shape=ellipse];\n";
  for (int v = 0; v < t.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"";
    for (std::size_t i = 0; i < t.vertices[v].sectors.size(); ++i) {
      if (i) os << ',';
      os << t.vertices[v].sectors[i];
    }
    os << "\"];\n";
  }
  auto port = [&](int v, int e) {
    const auto& es = t.vertices[v].edges;
    return std::find(es.begin(), es.end(), e) - es.begin();
  };
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    const auto& ed = t.edges[e];
    if (ed.free()) {
      os << "  f" << e << " [shape=point];\n";
      os << "  v" << ed.a << " -- f" << e << " [taillabel=\"" << port(ed.a, e) << "\"];\n";
    } else {
      os << "  v" << ed.a << " -- v" << ed.b << " [taillabel=\"" << port(ed.a, e) << "\", headlabel=\""
         << port(ed.b, e) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace knotdec
