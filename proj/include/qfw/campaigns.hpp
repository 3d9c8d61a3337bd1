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

#ifndef QFW_CAMPAIGNS_HPP
#define QFW_CAMPAIGNS_HPP

#include <cstdint>

#include "qfw/campaign.hpp"
#include "qfw/graph.hpp"

namespace qfw {

// Seeded verification campaigns. Every campaign is a deterministic function
// of its parameters and seed; the records output is byte-reproducible.

/// Checks S embeds-into T  iff  Q_S embeds-into Q_T, with both sides decided
/// by independent backtracking searches, plus the lift/recover round trips
/// on the yes side. Exhaustive over all ordered pairs of qualifying trees
/// when max_n <= 5; otherwise `trials` random pairs with sizes in [4,max_n].
/// With general_graphs the pool is graphs with no complete vertex instead of
/// trees (the theorem's proof only appears to need that property); such runs
/// are exploratory and their report records observations, not assertions.
/// Requires 4 <= max_n <= 8.
CampaignReport verify_embedding_theorem(int max_n, int trials,
                                        std::uint64_t seed,
                                        bool general_graphs = false);

/// Checks S isomorphic T iff Q_S isomorphic Q_T over graphs with no
/// complete vertex, both sides by two-sided bijective embedding search.
/// Exhaustive when the pooled pair count stays below 10^4, else `trials`
/// sampled pairs. Requires 2 <= max_n <= 6.
CampaignReport verify_iso_theorem(int max_n, int trials, std::uint64_t seed);

/// Enumerates Aut(Q_T) for a tree with no complete vertex, decomposes every
/// automorphism as involution-after-lift, and checks
/// |Aut(Q_T)| == 2^n * |Aut(T)|. Throws NotCTSquareError when the input
/// fails the predicates.
CampaignReport verify_aut_structure(const Graph& tree);

/// Field-layer campaign: seeded known-embedding round trips through
/// induced_hom and recover_graph_from_hom on towers of depth 2, generator
/// cardinality checks, and the p0-high classifier-versus-oracle battery.
/// Requires 4 <= max_n <= 8 and trials >= 1.
CampaignReport verify_field_layer(int max_n, int trials, std::uint64_t seed);

/// The rigid 7-vertex tree used as the standard automorphism fixture
/// (a 6-path with one extra leaf making three distinct branch lengths).
Graph rigid7_tree();

}  // namespace qfw

#endif  // QFW_CAMPAIGNS_HPP
