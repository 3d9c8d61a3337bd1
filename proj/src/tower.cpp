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

#include "qfw/tower.hpp"

#include <algorithm>

#include "qfw/error.hpp"

namespace qfw {

namespace {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_characteristic(long characteristic) {
  if (characteristic == 0) return;
  if (characteristic == 2)
    throw BadCharacteristicError("characteristic 2 is excluded");
  if (!is_odd_prime(characteristic))
    throw BadCharacteristicError("characteristic must be 0 or an odd prime");
}

}  // namespace

long k0_prime_for(long characteristic) {
  return prime_schedule(characteristic, 1).front();
}

std::vector<long> prime_schedule(long characteristic, int count) {
  require_characteristic(characteristic);
  std::vector<long> out;
  for (long p = 3; static_cast<int>(out.size()) < count; p += 2)
    if (is_odd_prime(p) && p != characteristic) out.push_back(p);
  return out;
}

TowerPresentation build_tower(const Graph& t, int depth, int root_depth,
                              long characteristic) {
  require_characteristic(characteristic);
  if (depth < 0 || root_depth < 0)
    throw InvalidSizeError("tower depth and root depth must be nonnegative");
  if (!is_combinatorial_tree(t))
    throw NotATreeError("build_tower: base graph is not a combinatorial tree");
  TowerPresentation tp;
  tp.base = t;
  tp.depth = depth;
  tp.root_depth = root_depth;
  tp.characteristic = characteristic;
  tp.primes = prime_schedule(characteristic, depth + 1);
  const long p0 = tp.primes.front();
  for (auto [u, v] : t.edges())
    tp.h0.push_back(K0Elem::variable(u, p0) + K0Elem::variable(v, p0));
  return tp;
}

TowerHom induced_hom(const GraphMap& f, const TowerPresentation& src,
                     const TowerPresentation& dst) {
  if (!check_graph_embedding(f))
    throw NotAnEmbeddingError(
        "induced_hom: the vertex map is not an induced embedding");
  if (!src.same_shape(dst))
    throw TowerMismatchError(
        "induced_hom: towers differ in depth, root depth, characteristic, or "
        "prime schedule");
  if (f.source != src.base || f.target != dst.base)
    throw TowerMismatchError(
        "induced_hom: vertex map endpoints do not match the tower bases");
  TowerHom hom{f, {}, src.depth};
  const auto src_edges = src.base.edges();
  hom.h_index_map.reserve(src_edges.size());
  for (std::size_t j = 0; j < src_edges.size(); ++j) {
    auto [u, v] = src_edges[j];
    const int fu = f.image[static_cast<std::size_t>(u)];
    const int fv = f.image[static_cast<std::size_t>(v)];
    const int idx = dst.base.edge_index(fu, fv);
    if (idx < 0)
      throw NotAnEmbeddingError("induced_hom: edge image is not an edge");
    // phi(v_u + v_v) must be the H_0 generator of the image edge.
    const K0Elem mapped = K0Elem::variable(fu, dst.p0()) +
                          K0Elem::variable(fv, dst.p0());
    if (!mapped.equals(dst.h0[static_cast<std::size_t>(idx)]))
      throw TowerMismatchError(
          "induced_hom: image generator does not match H_0 of the target");
    hom.h_index_map.push_back(idx);
  }
  return hom;
}

K0Elem apply_hom(const TowerHom& hom, const K0Elem& e) {
  const long p0 = e.prime();
  const auto rename_poly = [&](const Poly& poly) {
    Poly out = poly_zero();
    for (const Term& t : poly.terms) {
      Monomial m;
      for (auto [v, exp] : t.monomial.factors) {
        if (v >= static_cast<int>(hom.vertex_map.image.size()))
          throw OutOfRangeError(
              "apply_hom: element mentions a variable outside the source "
              "vertex set");
        m.factors.emplace_back(
            hom.vertex_map.image[static_cast<std::size_t>(v)], exp);
      }
      std::sort(m.factors.begin(), m.factors.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out = poly_add(out, poly_term(std::move(m), t.coeff), p0);
    }
    return out;
  };
  return K0Elem::fraction(rename_poly(e.num()), rename_poly(e.den()), p0);
}

std::optional<std::pair<int, int>> recover_edge(const K0Elem& w,
                                                const Graph& t) {
  const long p0 = w.prime();
  for (auto [u, v] : t.edges()) {
    const K0Elem sum = K0Elem::variable(u, p0) + K0Elem::variable(v, p0);
    if (w.equals(sum)) return std::make_pair(u, v);
  }
  return std::nullopt;
}

GraphMap recover_graph_from_hom(const std::vector<K0Elem>& vertex_images,
                                const Graph& s, const Graph& t) {
  if (!is_combinatorial_tree(s))
    throw NotATreeError("recover_graph_from_hom: source is not a tree");
  if (static_cast<int>(vertex_images.size()) != s.vertex_count())
    throw InvalidSizeError(
        "recover_graph_from_hom: one image per source vertex required");
  std::vector<int> image(vertex_images.size(), -1);
  for (std::size_t u = 0; u < vertex_images.size(); ++u) {
    const K0Elem& e = vertex_images[u];
    std::optional<std::pair<mpq_class, Monomial>> m;
    if (!e.is_zero()) m = e.as_monomial();
    if (!m)
      throw NotAVariableError("recover_graph_from_hom: image of v" +
                              std::to_string(u) +
                              " is not a single monomial");
    if (!(m->first == 1 || m->first == -1))
      throw NotPHighError("recover_graph_from_hom: image of v" +
                          std::to_string(u) +
                          " has coefficient != +-1, so it is not p0-high");
    const bool pure_variable = m->first == 1 &&
                               m->second.factors.size() == 1 &&
                               m->second.factors.front().second ==
                                   FracExp{1, 0};
    if (!pure_variable)
      throw NotAVariableError("recover_graph_from_hom: image of v" +
                              std::to_string(u) +
                              " is not a pure vertex variable");
    const int target_vertex = m->second.factors.front().first;
    if (target_vertex >= t.vertex_count())
      throw NotAVariableError(
          "recover_graph_from_hom: image variable is not a vertex of the "
          "target");
    image[u] = target_vertex;
  }
  // Edge preservation via the H_0 sums, then the full induced check.
  for (auto [u, v] : s.edges()) {
    const K0Elem sum = vertex_images[static_cast<std::size_t>(u)] +
                       vertex_images[static_cast<std::size_t>(v)];
    if (!recover_edge(sum, t))
      throw EdgeNotPreservedError(
          "recover_graph_from_hom: image sum of edge {" + std::to_string(u) +
          "," + std::to_string(v) + "} is not an H_0 generator of the target");
  }
  GraphMap out{s, t, std::move(image)};
  if (!check_graph_embedding(out))
    throw NotEmbeddingError(
        "recover_graph_from_hom: recovered map is not an induced embedding");
  return out;
}

bool is_pn_high_t_form(const TowerPresentation& tower, int level,
                       std::int64_t m, int l) {
  if (level < 0 || level >= tower.depth) return false;
  if (m == 0 || l < 0) return false;
  const long p = tower.primes[static_cast<std::size_t>(level) + 1];
  while (l > 0 && m % p == 0) {
    m /= p;
    --l;
  }
  return l <= tower.root_depth;
}

}  // namespace qfw
