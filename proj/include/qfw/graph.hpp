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

#ifndef QFW_GRAPH_HPP
#define QFW_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qfw {

/// Subset of vertices 0..63 as a bitmask.
using VertexSet = std::uint64_t;

/// Finite simple undirected graph on vertices 0..n-1 with one adjacency
/// bitmask per vertex. No self-loops; edges are unordered pairs.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;

  void add_edge(int u, int v);

  /// Edge list as (u, v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  /// Index of {u, v} in the sorted edge list, or -1 if not an edge.
  int edge_index(int u, int v) const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Total vertex map between two graphs; `image[v]` is the target vertex.
/// The embedding/automorphism predicates below define which maps are valid.
struct GraphMap {
  Graph source;
  Graph target;
  std::vector<int> image;

  int operator()(int v) const { return image[v]; }
  bool operator==(const GraphMap& other) const = default;
};

GraphMap identity_graph_map(const Graph& g);

/// Composition (outer after inner). Requires inner.target == outer.source.
GraphMap compose(const GraphMap& outer, const GraphMap& inner);

/// Connected acyclic graph. n = 0 is not a tree; n = 1 is.
bool is_combinatorial_tree(const Graph& g);

/// True iff every vertex has a non-neighbor, i.e. no vertex of degree n-1.
/// False for n <= 1 (a lone vertex has no non-neighbor).
bool has_no_complete_vertex(const Graph& g);

/// True iff m is injective and induced: {u,v} in S iff {m(u),m(v)} in T.
/// Throws OutOfRangeError if an image entry is out of range.
bool check_graph_embedding(const GraphMap& m);

/// Lexicographically least (by image array) induced embedding of s into t,
/// or nullopt. Deterministic.
std::optional<GraphMap> find_graph_embedding(const Graph& s, const Graph& t);

/// Exact number of induced embeddings of s into t.
std::int64_t count_graph_embeddings(const Graph& s, const Graph& t);

/// All automorphisms in lexicographic image order. Contains the identity.
std::vector<GraphMap> graph_automorphisms(const Graph& g);

/// Two-sided bijective-embedding isomorphism test.
bool graphs_isomorphic(const Graph& s, const Graph& t);

/// Uniform draw from [0, bound) by rejection; stable across platforms since
/// mt19937_64 output is pinned by the standard.
std::uint64_t random_below(std::mt19937_64& rng, std::uint64_t bound);

/// Labeled tree on n >= 2 vertices from a Pruefer sequence of length n-2
/// with entries in [0, n).
Graph prufer_decode(int n, const std::vector<int>& seq);

/// Uniformly random labeled tree on n vertices with no complete vertex
/// (rejection-resamples stars). Deterministic given seed.
/// Throws InvalidSizeError if n < 4.
Graph random_ct_tree(int n, std::uint64_t seed);
Graph random_ct_tree(int n, std::mt19937_64& rng);

/// Random graph on n >= 2 vertices with no complete vertex (uniform edge
/// mask, rejection-resampled).
Graph random_su_graph(int n, std::mt19937_64& rng);

/// Emits, in Pruefer lexicographic order, every labeled tree on n vertices
/// that has no complete vertex. Empty for n < 4.
void enumerate_ct_trees(int n, const std::function<void(const Graph&)>& emit);

std::vector<Graph> all_ct_trees(int n);

/// All graphs on n vertices with no complete vertex, in edge-mask order.
/// Intended for small n (the mask has n(n-1)/2 bits).
std::vector<Graph> all_su_graphs(int n);

/// Random induced subtree of size k of a tree t (grown by adjacency), plus
/// the inclusion map relabeled to vertices 0..k-1. Resamples until the
/// subtree has no complete vertex; falls back to the whole tree.
std::pair<Graph, GraphMap> random_subtree_embedding(const Graph& t, int k,
                                                    std::mt19937_64& rng);

/// Compact canonical text form, e.g. "g4:0-1,1-2,2-3".
std::string graph_digest(const Graph& g);

}  // namespace qfw

#endif  // QFW_GRAPH_HPP
