// Copyright 2026 The qfw Authors
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

#include "qfw/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "qfw/error.hpp"

namespace qfw {

namespace {

void require_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw OutOfRangeError("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(g.vertex_count()) + ")");
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw InvalidSizeError("negative vertex count");
  if (n > kMaxVertices)
    throw InvalidSizeError("vertex count " + std::to_string(n) +
                           " exceeds supported maximum " +
                           std::to_string(kMaxVertices));
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

void Graph::add_edge(int u, int v) {
  require_vertex(*this, u);
  require_vertex(*this, v);
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  adj_[u] |= VertexSet{1} << v;
  adj_[v] |= VertexSet{1} << u;
  ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || !has_edge(u, v)) return -1;
  int idx = 0;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (!has_edge(a, b)) continue;
      if (a == u && b == v) return idx;
      ++idx;
    }
  }
  return -1;
}

GraphMap identity_graph_map(const Graph& g) {
  std::vector<int> img(static_cast<std::size_t>(g.vertex_count()));
  std::iota(img.begin(), img.end(), 0);
  return GraphMap{g, g, std::move(img)};
}

GraphMap compose(const GraphMap& outer, const GraphMap& inner) {
  if (inner.target != outer.source)
    throw Error("graph map composition: inner target != outer source");
  std::vector<int> img(inner.image.size());
  for (std::size_t v = 0; v < inner.image.size(); ++v)
    img[v] = outer.image[static_cast<std::size_t>(inner.image[v])];
  return GraphMap{inner.source, outer.target, std::move(img)};
}

bool is_combinatorial_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  if (g.edge_count() != n - 1) return false;
  // Connected with n-1 edges implies acyclic.
  VertexSet seen = 1;
  VertexSet frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v) & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return std::popcount(seen) == n;
}

bool has_no_complete_vertex(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return false;
  return true;
}

bool check_graph_embedding(const GraphMap& m) {
  const int ns = m.source.vertex_count();
  const int nt = m.target.vertex_count();
  if (static_cast<int>(m.image.size()) != ns)
    throw OutOfRangeError("image length does not match source vertex count");
  VertexSet used = 0;
  for (int v = 0; v < ns; ++v) {
    const int w = m.image[static_cast<std::size_t>(v)];
    if (w < 0 || w >= nt)
      throw OutOfRangeError("image entry " + std::to_string(w) +
                            " out of range [0, " + std::to_string(nt) + ")");
    const VertexSet bit = VertexSet{1} << w;
    if (used & bit) return false;  // not injective
    used |= bit;
  }
  for (int u = 0; u < ns; ++u)
    for (int v = u + 1; v < ns; ++v)
      if (m.source.has_edge(u, v) !=
          m.target.has_edge(m.image[static_cast<std::size_t>(u)],
                            m.image[static_cast<std::size_t>(v)]))
        return false;
  return true;
}

namespace {

// Backtracking over source vertices in index order with ascending target
// candidates, so the first complete assignment is the lexicographically
// least image array. `emit` returns true to stop the search.
bool embed_dfs(const Graph& s, const Graph& t, int pos, std::vector<int>& img,
               VertexSet& used,
               const std::function<bool(const std::vector<int>&)>& emit) {
  const int ns = s.vertex_count();
  if (pos == ns) return emit(img);
  const int nt = t.vertex_count();
  for (int w = 0; w < nt; ++w) {
    const VertexSet bit = VertexSet{1} << w;
    if (used & bit) continue;
    bool ok = true;
    for (int u = 0; u < pos; ++u) {
      if (s.has_edge(u, pos) !=
          t.has_edge(img[static_cast<std::size_t>(u)], w)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    img[static_cast<std::size_t>(pos)] = w;
    used |= bit;
    if (embed_dfs(s, t, pos + 1, img, used, emit)) return true;
    used &= ~bit;
  }
  return false;
}

}  // namespace

std::optional<GraphMap> find_graph_embedding(const Graph& s, const Graph& t) {
  if (s.vertex_count() > t.vertex_count()) return std::nullopt;
  std::vector<int> img(static_cast<std::size_t>(s.vertex_count()), -1);
  VertexSet used = 0;
  std::optional<GraphMap> found;
  embed_dfs(s, t, 0, img, used, [&](const std::vector<int>& image) {
    found = GraphMap{s, t, image};
    return true;
  });
  return found;
}

std::int64_t count_graph_embeddings(const Graph& s, const Graph& t) {
  if (s.vertex_count() > t.vertex_count()) return 0;
  std::vector<int> img(static_cast<std::size_t>(s.vertex_count()), -1);
  VertexSet used = 0;
  std::int64_t count = 0;
  embed_dfs(s, t, 0, img, used, [&](const std::vector<int>&) {
    ++count;
    return false;
  });
  return count;
}

std::vector<GraphMap> graph_automorphisms(const Graph& g) {
  std::vector<int> img(static_cast<std::size_t>(g.vertex_count()), -1);
  VertexSet used = 0;
  std::vector<GraphMap> out;
  embed_dfs(g, g, 0, img, used, [&](const std::vector<int>& image) {
    out.push_back(GraphMap{g, g, image});
    return false;
  });
  return out;
}

bool graphs_isomorphic(const Graph& s, const Graph& t) {
  if (s.vertex_count() != t.vertex_count()) return false;
  // An injective induced map between equal-sized graphs is an isomorphism;
  // both directions are searched anyway.
  return find_graph_embedding(s, t).has_value() &&
         find_graph_embedding(t, s).has_value();
}

std::uint64_t random_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidSizeError("random_below: bound must be > 0");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Graph prufer_decode(int n, const std::vector<int>& seq) {
  if (n < 2) throw InvalidSizeError("prufer_decode: need n >= 2");
  if (static_cast<int>(seq.size()) != n - 2)
    throw InvalidSizeError("prufer_decode: sequence length must be n-2");
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int x : seq) {
    if (x < 0 || x >= n)
      throw OutOfRangeError("prufer_decode: entry out of range");
    ++deg[static_cast<std::size_t>(x)];
  }
  Graph g(n);
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (deg[static_cast<std::size_t>(leaf)] == 1) {
        g.add_edge(leaf, x);
        deg[static_cast<std::size_t>(leaf)] = 0;
        --deg[static_cast<std::size_t>(x)];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        g.add_edge(a, v);
      }
    }
  }
  return g;
}

Graph random_ct_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_ct_tree(n, rng);
}

Graph random_ct_tree(int n, std::mt19937_64& rng) {
  if (n < 4)
    throw InvalidSizeError(
        "random_ct_tree: no tree on fewer than 4 vertices has a non-neighbor "
        "for every vertex");
  if (n > Graph::kMaxVertices)
    throw InvalidSizeError("random_ct_tree: n exceeds supported maximum");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& x : seq)
      x = static_cast<int>(random_below(rng, static_cast<std::uint64_t>(n)));
    Graph g = prufer_decode(n, seq);
    if (has_no_complete_vertex(g)) return g;
  }
  throw Error("random_ct_tree: rejection sampling exceeded 1000 retries");
}

Graph random_su_graph(int n, std::mt19937_64& rng) {
  if (n < 2 || n > 11)
    throw InvalidSizeError("random_su_graph: need 2 <= n <= 11");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::uint64_t mask =
        random_below(rng, std::uint64_t{1} << slots.size());
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
    if (has_no_complete_vertex(g)) return g;
  }
  throw Error("random_su_graph: rejection sampling exceeded 1000 retries");
}

void enumerate_ct_trees(int n, const std::function<void(const Graph&)>& emit) {
  if (n < 4) return;  // every tree on <= 3 vertices has a complete vertex
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  for (;;) {
    Graph g = prufer_decode(n, seq);
    if (has_no_complete_vertex(g)) emit(g);
    int i = n - 3;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
      seq[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++seq[static_cast<std::size_t>(i)];
  }
}

std::vector<Graph> all_ct_trees(int n) {
  std::vector<Graph> out;
  enumerate_ct_trees(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> all_su_graphs(int n) {
  if (n < 0 || n > 10)
    throw InvalidSizeError("all_su_graphs: intended for 0 <= n <= 10");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
    if (has_no_complete_vertex(g)) out.push_back(g);
  }
  return out;
}

std::pair<Graph, GraphMap> random_subtree_embedding(const Graph& t, int k,
                                                    std::mt19937_64& rng) {
  const int n = t.vertex_count();
  if (k < 4 || k > n)
    throw InvalidSizeError("random_subtree_embedding: need 4 <= k <= n");
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<int> picked;
    VertexSet in_set = 0;
    int start =
        static_cast<int>(random_below(rng, static_cast<std::uint64_t>(n)));
    picked.push_back(start);
    in_set |= VertexSet{1} << start;
    while (static_cast<int>(picked.size()) < k) {
      VertexSet boundary = 0;
      for (int v : picked) boundary |= t.neighbors(v);
      boundary &= ~in_set;
      std::vector<int> options;
      while (boundary) {
        options.push_back(std::countr_zero(boundary));
        boundary &= boundary - 1;
      }
      int v = options[random_below(rng, options.size())];
      picked.push_back(v);
      in_set |= VertexSet{1} << v;
    }
    std::sort(picked.begin(), picked.end());
    Graph s(k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (t.has_edge(picked[static_cast<std::size_t>(i)],
                       picked[static_cast<std::size_t>(j)]))
          s.add_edge(i, j);
    if (!has_no_complete_vertex(s)) continue;
    return {s, GraphMap{s, t, picked}};
  }
  // A (⊔) subtree of this size may be hard to hit; the whole tree always works.
  return {t, identity_graph_map(t)};
}

std::string graph_digest(const Graph& g) {
  std::string out = "g" + std::to_string(g.vertex_count()) + ":";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

}  // namespace qfw
