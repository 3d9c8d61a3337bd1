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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "qfw/error.hpp"
#include "qfw/graph.hpp"

using namespace qfw;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph rigid7() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
}

// Oracle: walks every injective map and applies the full induced condition
// at the leaves; shares nothing with the pruned search.
void oracle_walk(const Graph& s, const Graph& t, std::vector<int>& img,
                 std::vector<bool>& used, long& count) {
  const int pos = static_cast<int>(img.size());
  if (pos == s.vertex_count()) {
    for (int u = 0; u < pos; ++u)
      for (int v = u + 1; v < pos; ++v)
        if (s.has_edge(u, v) !=
            t.has_edge(img[static_cast<std::size_t>(u)],
                       img[static_cast<std::size_t>(v)]))
          return;
    ++count;
    return;
  }
  for (int w = 0; w < t.vertex_count(); ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = true;
    img.push_back(w);
    oracle_walk(s, t, img, used, count);
    img.pop_back();
    used[static_cast<std::size_t>(w)] = false;
  }
}

long oracle_count_embeddings(const Graph& s, const Graph& t) {
  std::vector<int> img;
  std::vector<bool> used(static_cast<std::size_t>(t.vertex_count()), false);
  long count = 0;
  oracle_walk(s, t, img, used, count);
  return count;
}

std::vector<std::vector<int>> oracle_automorphisms(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.has_edge(u, v) !=
            g.has_edge(perm[static_cast<std::size_t>(u)],
                       perm[static_cast<std::size_t>(v)]))
          ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("combinatorial tree predicate") {
  CHECK(is_combinatorial_tree(path(4)));
  CHECK_FALSE(is_combinatorial_tree(cycle(4)));
  CHECK_FALSE(is_combinatorial_tree(Graph(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(is_combinatorial_tree(Graph(0)));
  CHECK(is_combinatorial_tree(Graph(1)));
  CHECK(is_combinatorial_tree(star(3)));
}

TEST_CASE("no-complete-vertex predicate") {
  CHECK(has_no_complete_vertex(path(4)));
  CHECK_FALSE(has_no_complete_vertex(path(3)));
  CHECK_FALSE(has_no_complete_vertex(star(3)));
  CHECK_FALSE(has_no_complete_vertex(Graph(1)));
  CHECK_FALSE(has_no_complete_vertex(Graph(0)));
  CHECK(has_no_complete_vertex(Graph(2)));  // edgeless pair
}

TEST_CASE("embedding check") {
  GraphMap id45{path(4), path(5), {0, 1, 2, 3}};
  CHECK(check_graph_embedding(id45));

  GraphMap to_cycle{path(4), cycle(4), {0, 1, 2, 3}};
  CHECK_FALSE(check_graph_embedding(to_cycle));  // {0,3} becomes an edge

  CHECK(check_graph_embedding(identity_graph_map(rigid7())));

  GraphMap not_injective{path(3), path(4), {0, 1, 0}};
  CHECK_FALSE(check_graph_embedding(not_injective));

  GraphMap out_of_range{path(3), path(4), {0, 1, 7}};
  CHECK_THROWS_AS(check_graph_embedding(out_of_range), OutOfRangeError);
}

TEST_CASE("embedding search returns the least witness") {
  const auto m = find_graph_embedding(path(4), path(5));
  REQUIRE(m.has_value());
  CHECK(m->image == std::vector<int>{0, 1, 2, 3});
  CHECK(check_graph_embedding(*m));

  CHECK_FALSE(find_graph_embedding(path(5), path(4)).has_value());
  CHECK_FALSE(find_graph_embedding(path(4), cycle(4)).has_value());
  CHECK(oracle_count_embeddings(path(4), cycle(4)) == 0);
}

TEST_CASE("embedding counts match the exhaustive oracle") {
  CHECK(count_graph_embeddings(path(4), path(5)) == 4);
  CHECK(oracle_count_embeddings(path(4), path(5)) == 4);
  CHECK(count_graph_embeddings(path(1), path(4)) == 4);
  CHECK(count_graph_embeddings(path(4), cycle(4)) == 0);

  // Sweep small pairs.
  const std::vector<Graph> zoo = {path(3), path(4), cycle(4),
                                  star(3),  rigid7(), Graph(2)};
  for (const Graph& s : zoo)
    for (const Graph& t : zoo)
      CHECK(count_graph_embeddings(s, t) == oracle_count_embeddings(s, t));
}

TEST_CASE("search agrees with counting on all small tree pairs") {
  std::vector<Graph> pool;
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : all_ct_trees(n)) pool.push_back(g);
  // Subsample deterministically to keep the sweep quick.
  for (std::size_t i = 0; i < pool.size(); i += 17)
    for (std::size_t j = 0; j < pool.size(); j += 13) {
      const auto found = find_graph_embedding(pool[i], pool[j]);
      const long count = count_graph_embeddings(pool[i], pool[j]);
      CHECK(found.has_value() == (count > 0));
      if (found) CHECK(check_graph_embedding(*found));
    }
}

TEST_CASE("automorphism groups of the fixtures") {
  const auto p4 = graph_automorphisms(path(4));
  REQUIRE(p4.size() == 2);
  CHECK(p4[0].image == std::vector<int>{0, 1, 2, 3});
  CHECK(p4[1].image == std::vector<int>{3, 2, 1, 0});

  CHECK(graph_automorphisms(rigid7()).size() == 1);
  CHECK(graph_automorphisms(Graph(1)).size() == 1);

  for (const Graph& g : {path(4), cycle(4), star(3), rigid7()}) {
    const auto got = graph_automorphisms(g);
    const auto want = oracle_automorphisms(g);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(got[i].image == want[i]);
  }
}

TEST_CASE("automorphism lists are groups") {
  std::vector<Graph> pool = {path(4), cycle(4), star(3), rigid7()};
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : all_ct_trees(n)) pool.push_back(g);
  for (const Graph& g : pool) {
    const auto auts = graph_automorphisms(g);
    std::set<std::vector<int>> members;
    for (const auto& a : auts) members.insert(a.image);
    CHECK(members.count(identity_graph_map(g).image) == 1);
    for (const auto& a : auts) {
      // inverse
      std::vector<int> inv(a.image.size());
      for (std::size_t v = 0; v < a.image.size(); ++v)
        inv[static_cast<std::size_t>(a.image[v])] = static_cast<int>(v);
      CHECK(members.count(inv) == 1);
      // closure
      for (const auto& b : auts)
        CHECK(members.count(compose(a, b).image) == 1);
    }
  }
}

TEST_CASE("embeddability is a quasi-order on samples") {
  std::vector<Graph> pool;
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : all_ct_trees(n)) pool.push_back(g);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph& s = pool[random_below(rng, pool.size())];
    const Graph& t = pool[random_below(rng, pool.size())];
    const Graph& u = pool[random_below(rng, pool.size())];
    CHECK(check_graph_embedding(identity_graph_map(s)));
    const auto f = find_graph_embedding(s, t);
    const auto g = find_graph_embedding(t, u);
    if (f && g) CHECK(check_graph_embedding(compose(*g, *f)));
  }
}

TEST_CASE("random tree generation") {
  const Graph a = random_ct_tree(4, 42);
  const Graph b = random_ct_tree(4, 42);
  CHECK(a == b);
  CHECK_THROWS_AS(random_ct_tree(3, 1), InvalidSizeError);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_ct_tree(4, seed);
    CHECK(is_combinatorial_tree(g));
    CHECK(has_no_complete_vertex(g));
    // The only trees on 4 vertices with no complete vertex are paths.
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) <= 2);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_ct_tree(7, seed ^ 0x9e3779b9);
    CHECK(is_combinatorial_tree(g));
    CHECK(has_no_complete_vertex(g));
  }
}

TEST_CASE("tree enumeration") {
  CHECK(all_ct_trees(1).empty());
  CHECK(all_ct_trees(2).empty());
  CHECK(all_ct_trees(3).empty());
  const auto t4 = all_ct_trees(4);
  CHECK(t4.size() == 12);  // 16 labeled trees minus 4 stars
  const auto t5 = all_ct_trees(5);
  CHECK(t5.size() == 120);  // 125 minus 5 stars
  for (const Graph& g : t4) {
    CHECK(is_combinatorial_tree(g));
    CHECK(has_no_complete_vertex(g));
    CHECK(g.edge_count() == 3);
  }
  // All 12 are distinct.
  std::set<std::string> digests;
  for (const Graph& g : t4) digests.insert(graph_digest(g));
  CHECK(digests.size() == 12);
}

TEST_CASE("graphs with no complete vertex, exhaustively") {
  CHECK(all_su_graphs(2).size() == 1);  // only the edgeless pair
  CHECK(all_su_graphs(3).size() == 4);  // edgeless plus the three one-edge graphs
  for (const Graph& g : all_su_graphs(4)) CHECK(has_no_complete_vertex(g));
}

TEST_CASE("random subtree embeddings are induced") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph t = random_ct_tree(7, rng);
    const auto [s, f] = random_subtree_embedding(t, 4, rng);
    CHECK(is_combinatorial_tree(s));
    CHECK(has_no_complete_vertex(s));
    CHECK(check_graph_embedding(f));
  }
}

TEST_CASE("graph digest is canonical") {
  CHECK(graph_digest(path(4)) == "g4:0-1,1-2,2-3");
  CHECK(graph_digest(Graph(2)) == "g2:");
}
