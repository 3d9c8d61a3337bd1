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

#ifndef QFW_TOWER_HPP
#define QFW_TOWER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfw/graph.hpp"
#include "qfw/k0.hpp"

namespace qfw {

// Presentation of the radical field tower over a combinatorial tree T.
// Level 0 is the base fraction field over the vertex variables with a
// p_0-th root tower on each variable; its generator set H_0 materializes
// one element v_u + v_v per edge. Each further level k adjoins a fresh
// transcendental t_k with a p_{k+1}-th root tower and one square root
// r_a of t_k - a per a in H_k, giving H_{k+1} = { r_a : a in H_k }.
//
// Because every level keeps exactly one root per generator, the level-k
// generators are identified by (level, edge index): the root chains never
// branch. Elements above level 0 stay formal handles with the single
// rewrite r_a^2 -> t_k - a; only H_0 carries normal-form arithmetic.

/// First tower prime for a characteristic (0 or an odd prime).
long k0_prime_for(long characteristic);

/// The first `count` odd primes, skipping the characteristic.
std::vector<long> prime_schedule(long characteristic, int count);

struct TowerPresentation {
  Graph base;
  int depth = 0;        // levels of relations built
  int root_depth = 0;   // materialized root-tower depth bound
  long characteristic = 0;
  std::vector<long> primes;  // p_0 .. p_depth
  std::vector<K0Elem> h0;    // H_0 in sorted edge order

  long p0() const { return primes.front(); }
  std::size_t generator_count() const { return h0.size(); }
  bool same_shape(const TowerPresentation& other) const {
    return depth == other.depth && root_depth == other.root_depth &&
           characteristic == other.characteristic && primes == other.primes;
  }
};

/// Builds the presentation for a combinatorial tree.
/// Throws BadCharacteristicError unless the characteristic is 0 or an odd
/// prime, and NotATreeError when t is not a combinatorial tree.
TowerPresentation build_tower(const Graph& t, int depth, int root_depth,
                              long characteristic);

/// The homomorphism induced by a graph embedding: vertex variables map by
/// f, every t_k is fixed, and the root chain over edge j maps to the chain
/// over the image edge at every level.
struct TowerHom {
  GraphMap vertex_map;
  std::vector<int> h_index_map;  // source edge index -> target edge index
  int depth = 0;
};

/// Throws NotAnEmbeddingError when f fails the induced-embedding check and
/// TowerMismatchError when the towers disagree on shape or on f's endpoints.
/// Validates that the image of every H_0 generator lands in H_0 of dst.
TowerHom induced_hom(const GraphMap& f, const TowerPresentation& src,
                     const TowerPresentation& dst);

/// Applies the level-0 action (vertex-variable renaming) to an element.
K0Elem apply_hom(const TowerHom& hom, const K0Elem& e);

/// If w equals v_u + v_v for distinct vertices with {u,v} an edge of t,
/// returns that edge.
std::optional<std::pair<int, int>> recover_edge(const K0Elem& w,
                                                const Graph& t);

/// Recovers the vertex map from the images of the vertex variables under a
/// field homomorphism, using the p0-high gate and the edge-sum matching.
/// Errors: NotPHigh (monomial image with coefficient != +-1), NotAVariable
/// (image not a pure vertex variable of t), EdgeNotPreserved, NotEmbedding.
GraphMap recover_graph_from_hom(const std::vector<K0Elem>& vertex_images,
                                const Graph& s, const Graph& t);

/// Shape test for p_{level+1}-high formal t-monomials +-t_level^(m/p^l)
/// within the materialized root range: true iff the level exists, m != 0,
/// and the reduced depth does not exceed the tower's root depth.
bool is_pn_high_t_form(const TowerPresentation& tower, int level,
                       std::int64_t m, int l);

}  // namespace qfw

#endif  // QFW_TOWER_HPP
