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

#ifndef QFW_QUANDLE_HPP
#define QFW_QUANDLE_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfw/graph.hpp"

namespace qfw {

/// Finite binary-operation table; a quandle when the three axioms hold
/// (checked by check_quandle_axioms, not enforced by the type).
struct Quandle {
  int size = 0;
  std::vector<int> table;  // row-major; table[x*size + y] = x * y

  int op(int x, int y) const {
    return table[static_cast<std::size_t>(x) * static_cast<std::size_t>(size) +
                 static_cast<std::size_t>(y)];
  }
  bool operator==(const Quandle& other) const = default;
};

/// Elements of a graph quandle are coded as 2*v + i for (v, i) in V x {0,1}.
inline int vert(int e) { return e / 2; }
inline int bit(int e) { return e % 2; }

enum class QuandleAxiom {
  kLeftDistributive,          // x*(y*z) == (x*y)*(x*z)
  kLeftTranslationsBijective, // for each x, y -> x*y is a bijection
  kIdempotent,                // x*x == x
};

struct QuandleCheckResult {
  bool ok = true;
  QuandleAxiom axiom = QuandleAxiom::kLeftDistributive;
  // Violating triple (x,y,z) for distributivity, pair (x,z,-1) for
  // translations, (x,-1,-1) for idempotence; first in lexicographic order.
  std::array<int, 3> witness = {-1, -1, -1};
  std::string message;
};

/// Validates the three quandle axioms over all triples.
/// Throws OutOfRangeError if a table entry is out of range.
QuandleCheckResult check_quandle_axioms(int size,
                                        const std::vector<int>& table);

/// Kei identity: x*(x*y) == y for all pairs.
bool check_kei(const Quandle& q);

/// The graph quandle on V x {0,1}:
///   (u,i)*(v,j) = (v,j) if u = v or u ~ v, and (v,1-j) otherwise,
/// with elements coded as 2v+i. Size is 2 * vertex count.
Quandle build_quandle(const Graph& t);

struct QuandleMap {
  Quandle source;
  Quandle target;
  std::vector<int> image;

  int operator()(int e) const { return image[static_cast<std::size_t>(e)]; }
  bool operator==(const QuandleMap& other) const = default;
};

/// Injective homomorphism check: image(x*y) == image(x)*image(y).
bool check_quandle_map(const QuandleMap& m);

QuandleMap identity_quandle_map(const Quandle& q);

/// Composition (outer after inner). Requires inner.target == outer.source.
QuandleMap compose(const QuandleMap& outer, const QuandleMap& inner);

/// Lifts a graph embedding f to the quandle embedding 2v+i -> 2f(v)+i
/// between build_quandle(f.source) and build_quandle(f.target).
/// Throws InvalidEmbeddingError if f is not an induced embedding.
QuandleMap lift_embedding(const GraphMap& f);

/// Recovers the graph embedding v -> vert(rho(2v)) from a quandle embedding
/// rho : Q_S -> Q_T. Validates vert(rho(2v)) == vert(rho(2v+1)) for every v
/// (throws ClaimViolationError otherwise; this signals that the no-complete-
/// vertex precondition fails) and that the result is an induced embedding
/// (NotEmbeddingError otherwise).
GraphMap recover_graph_embedding(const QuandleMap& rho, const Graph& s,
                                 const Graph& t);

/// Lexicographically least quandle embedding, or nullopt. Backtracking with
/// operation-table consistency propagation.
std::optional<QuandleMap> find_quandle_embedding(const Quandle& qs,
                                                 const Quandle& qt);

/// Two-sided bijective-embedding isomorphism test.
bool quandles_isomorphic(const Quandle& a, const Quandle& b);

/// The involution I_A of build_quandle(t): fixes 2v+j when v is in a,
/// maps it to 2v+(1-j) otherwise. Always a quandle automorphism.
/// Throws OutOfRangeError if a has bits outside 0..n-1.
QuandleMap involution(const Graph& t, VertexSet a);

/// All automorphisms, in lexicographic image order.
std::vector<QuandleMap> quandle_automorphisms(const Quandle& q);

/// Decomposes an automorphism rho of build_quandle(t) as
///   rho = involution(t, a) after lift_embedding(h)
/// with h a graph automorphism of t. The reconstruction identity is checked
/// exactly; DecompositionError signals a precondition violation.
std::pair<GraphMap, VertexSet> decompose_automorphism(const QuandleMap& rho,
                                                      const Graph& t);

}  // namespace qfw

#endif  // QFW_QUANDLE_HPP
