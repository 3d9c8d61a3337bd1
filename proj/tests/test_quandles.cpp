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

#include <set>

#include "qfw/error.hpp"
#include "qfw/graph.hpp"
#include "qfw/ldmonoid.hpp"
#include "qfw/quandle.hpp"

using namespace qfw;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph rigid7() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
}

Quandle trivial_quandle(int n) {
  Quandle q;
  q.size = n;
  q.table.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      q.table[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(y)] = y;
  return q;
}

Quandle conjugation_quandle(const BinTable& g) {
  const auto gc = check_group(g);
  REQUIRE(gc.ok);
  std::vector<int> inv(static_cast<std::size_t>(g.size));
  for (int a = 0; a < g.size; ++a)
    for (int b = 0; b < g.size; ++b)
      if (g.at(a, b) == gc.identity && g.at(b, a) == gc.identity)
        inv[static_cast<std::size_t>(a)] = b;
  Quandle q;
  q.size = g.size;
  q.table.resize(static_cast<std::size_t>(g.size) *
                 static_cast<std::size_t>(g.size));
  for (int x = 0; x < g.size; ++x)
    for (int y = 0; y < g.size; ++y)
      q.table[static_cast<std::size_t>(x) * static_cast<std::size_t>(g.size) +
              static_cast<std::size_t>(y)] =
          g.at(g.at(x, y), inv[static_cast<std::size_t>(x)]);
  return q;
}

// Lemma-shaped oracle for automorphisms of a graph quandle: every
// involution-after-lift composite, generated directly from subsets and
// graph automorphisms.
std::set<std::vector<int>> involution_lift_family(const Graph& t) {
  std::set<std::vector<int>> out;
  const auto graph_auts = graph_automorphisms(t);
  const int n = t.vertex_count();
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
    for (const GraphMap& h : graph_auts)
      out.insert(compose(involution(t, a), lift_embedding(h)).image);
  return out;
}

}  // namespace

TEST_CASE("quandle axiom checking") {
  const Quandle triv = trivial_quandle(3);
  CHECK(check_quandle_axioms(triv.size, triv.table).ok);

  const Quandle qp4 = build_quandle(path(4));
  CHECK(check_quandle_axioms(qp4.size, qp4.table).ok);

  // x*y = x: rows are constant, so left translations are not bijective.
  const std::vector<int> proj_rows = {0, 0, 1, 1};
  const auto r = check_quandle_axioms(2, proj_rows);
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == QuandleAxiom::kLeftTranslationsBijective);
  CHECK(r.witness[0] == 0);

  CHECK_THROWS_AS(check_quandle_axioms(2, {0, 1, 5, 0}), OutOfRangeError);
}

TEST_CASE("kei identity") {
  CHECK(check_kei(build_quandle(path(4))));
  CHECK(check_kei(trivial_quandle(4)));
  // Conjugation quandle of a nonabelian group is a quandle but not a kei.
  const Quandle conj = conjugation_quandle(symmetric_group(3));
  CHECK(check_quandle_axioms(conj.size, conj.table).ok);
  CHECK_FALSE(check_kei(conj));
}

TEST_CASE("graph quandle table values") {
  const Quandle q = build_quandle(path(4));
  CHECK(q.size == 8);
  // (v0,0)*(v1,1): adjacent, so the right operand is fixed.
  CHECK(q.op(0, 3) == 3);
  // (v0,0)*(v2,0): not adjacent, so the bit flips.
  CHECK(q.op(0, 4) == 5);
  for (int e = 0; e < q.size; ++e) CHECK(q.op(e, e) == e);
}

TEST_CASE("quandle functor is sound on all small trees and sampled graphs") {
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : all_ct_trees(n)) {
      const Quandle q = build_quandle(g);
      CHECK(check_quandle_axioms(q.size, q.table).ok);
      CHECK(check_kei(q));
    }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_su_graph(2 + static_cast<int>(random_below(rng, 6)),
                                    rng);
    const Quandle q = build_quandle(g);
    CHECK(check_quandle_axioms(q.size, q.table).ok);
    CHECK(check_kei(q));
  }
}

TEST_CASE("lifting graph embeddings") {
  const auto f = find_graph_embedding(path(4), path(5));
  REQUIRE(f.has_value());
  const QuandleMap theta = lift_embedding(*f);
  for (int e = 0; e < 8; ++e) CHECK(theta.image[e] == e);
  CHECK(check_quandle_map(theta));

  const GraphMap reversal{path(4), path(4), {3, 2, 1, 0}};
  const QuandleMap lifted = lift_embedding(reversal);
  CHECK(lifted.image == std::vector<int>{6, 7, 4, 5, 2, 3, 0, 1});
  CHECK(check_quandle_map(lifted));

  const GraphMap non_embedding{path(4), Graph(4, {{0, 1}, {1, 2}, {2, 3},
                                                  {0, 3}}),
                               {0, 1, 2, 3}};
  CHECK_THROWS_AS(lift_embedding(non_embedding), InvalidEmbeddingError);
}

TEST_CASE("recovering graph embeddings from quandle embeddings") {
  const Graph s = path(4);
  const Graph t = path(5);
  const auto f = find_graph_embedding(s, t);
  REQUIRE(f.has_value());
  CHECK(recover_graph_embedding(lift_embedding(*f), s, t) == *f);

  // The all-flip involution is a self-embedding fixing every vertex slot.
  const QuandleMap flip = involution(s, 0);
  const GraphMap h = recover_graph_embedding(flip, s, s);
  CHECK(h == identity_graph_map(s));

  const auto rho = find_quandle_embedding(build_quandle(s), build_quandle(t));
  REQUIRE(rho.has_value());
  const GraphMap recovered = recover_graph_embedding(*rho, s, t);
  CHECK(check_graph_embedding(recovered));
  // Claim: both bits over a vertex land over one target vertex.
  for (int v = 0; v < s.vertex_count(); ++v)
    CHECK(vert(rho->image[2 * v]) == vert(rho->image[2 * v + 1]));
}

TEST_CASE("quandle embedding search") {
  const Quandle qs = build_quandle(path(4));
  const Quandle qt = build_quandle(path(5));
  CHECK(find_quandle_embedding(qs, qt).has_value());
  CHECK_FALSE(find_quandle_embedding(qt, qs).has_value());
  const auto self = find_quandle_embedding(qs, qs);
  REQUIRE(self.has_value());
  CHECK(*self == identity_quandle_map(qs));
}

TEST_CASE("involutions") {
  const Graph t = path(4);
  CHECK(involution(t, 0b1111).image ==
        identity_quandle_map(build_quandle(t)).image);
  CHECK(involution(t, 0).image ==
        std::vector<int>{1, 0, 3, 2, 5, 4, 7, 6});
  CHECK_THROWS_AS(involution(t, 0b10000), OutOfRangeError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph tree = random_ct_tree(4 + static_cast<int>(random_below(rng, 4)),
                                      rng);
    const VertexSet a =
        random_below(rng, std::uint64_t{1} << tree.vertex_count());
    const QuandleMap ia = involution(tree, a);
    CHECK(check_quandle_map(ia));
    CHECK(compose(ia, ia) == identity_quandle_map(build_quandle(tree)));
  }
}

TEST_CASE("automorphism groups of graph quandles") {
  const Graph t7 = rigid7();
  const auto auts7 = quandle_automorphisms(build_quandle(t7));
  CHECK(auts7.size() == 128);  // 2^7 involutions, rigid tree
  const auto family7 = involution_lift_family(t7);
  REQUIRE(family7.size() == 128);
  std::set<std::vector<int>> got7;
  for (const auto& a : auts7) got7.insert(a.image);
  CHECK(got7 == family7);

  const Graph p4 = path(4);
  const auto auts4 = quandle_automorphisms(build_quandle(p4));
  CHECK(auts4.size() == 32);  // 2 graph automorphisms x 2^4 involutions
  std::set<std::vector<int>> got4;
  for (const auto& a : auts4) got4.insert(a.image);
  CHECK(got4 == involution_lift_family(p4));

  CHECK(quandle_automorphisms(trivial_quandle(3)).size() == 6);
}

TEST_CASE("decomposing quandle automorphisms") {
  const Graph p4 = path(4);

  const auto [h1, a1] = decompose_automorphism(involution(p4, 0b0011), p4);
  CHECK(h1 == identity_graph_map(p4));
  CHECK(a1 == 0b0011);

  const GraphMap reversal{p4, p4, {3, 2, 1, 0}};
  const auto [h2, a2] = decompose_automorphism(lift_embedding(reversal), p4);
  CHECK(h2 == reversal);
  CHECK(a2 == 0b1111);

  for (const QuandleMap& rho : quandle_automorphisms(build_quandle(rigid7()))) {
    const auto [h, a] = decompose_automorphism(rho, rigid7());
    CHECK(h == identity_graph_map(rigid7()));
  }

  // The triangle collapses to the trivial quandle, whose generic
  // permutations do not decompose; the reconstruction check must notice.
  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  QuandleMap bad = identity_quandle_map(build_quandle(k3));
  bad.image[0] = 2;
  bad.image[2] = 0;
  CHECK(check_quandle_map(bad));  // it is an automorphism of Q_K3
  CHECK_THROWS_AS(decompose_automorphism(bad, k3), DecompositionError);
}

TEST_CASE("embedding biconditional on sampled tree pairs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph s = random_ct_tree(4 + static_cast<int>(random_below(rng, 3)),
                                   rng);
    const Graph t = random_ct_tree(4 + static_cast<int>(random_below(rng, 4)),
                                   rng);
    const bool graph_side = find_graph_embedding(s, t).has_value();
    const bool quandle_side =
        find_quandle_embedding(build_quandle(s), build_quandle(t)).has_value();
    CHECK(graph_side == quandle_side);
  }
}

TEST_CASE("quandle isomorphism mirrors graph isomorphism") {
  const Graph p4 = path(4);
  const Graph relabeled(4, {{0, 2}, {1, 2}, {1, 3}});  // a path in disguise
  CHECK(graphs_isomorphic(p4, relabeled));
  CHECK(quandles_isomorphic(build_quandle(p4), build_quandle(relabeled)));
  const Graph disjoint(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(graphs_isomorphic(p4, disjoint));
  CHECK_FALSE(quandles_isomorphic(build_quandle(p4), build_quandle(disjoint)));
}
