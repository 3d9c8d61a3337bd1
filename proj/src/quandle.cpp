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

#include "qfw/quandle.hpp"

#include <algorithm>
#include <numeric>

#include "qfw/error.hpp"
#include "qfw/hom_search.hpp"

namespace qfw {

QuandleCheckResult check_quandle_axioms(int size,
                                        const std::vector<int>& table) {
  if (size <= 0) throw InvalidSizeError("quandle size must be positive");
  if (static_cast<int>(table.size()) != size * size)
    throw InvalidSizeError("table length must be size*size");
  for (int e : table)
    if (e < 0 || e >= size)
      throw OutOfRangeError("table entry " + std::to_string(e) +
                            " out of range [0, " + std::to_string(size) + ")");
  const auto at = [&](int x, int y) {
    return table[static_cast<std::size_t>(x) * static_cast<std::size_t>(size) +
                 static_cast<std::size_t>(y)];
  };
  QuandleCheckResult r;
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      for (int z = 0; z < size; ++z) {
        if (at(x, at(y, z)) != at(at(x, y), at(x, z))) {
          r.ok = false;
          r.axiom = QuandleAxiom::kLeftDistributive;
          r.witness = {x, y, z};
          r.message = "x*(y*z) != (x*y)*(x*z) at (" + std::to_string(x) + "," +
                      std::to_string(y) + "," + std::to_string(z) + ")";
          return r;
        }
      }
    }
  }
  for (int x = 0; x < size; ++x) {
    std::vector<int> hits(static_cast<std::size_t>(size), 0);
    for (int y = 0; y < size; ++y) ++hits[static_cast<std::size_t>(at(x, y))];
    for (int z = 0; z < size; ++z) {
      if (hits[static_cast<std::size_t>(z)] != 1) {
        r.ok = false;
        r.axiom = QuandleAxiom::kLeftTranslationsBijective;
        r.witness = {x, z, -1};
        r.message = "no unique y with x*y=z at (x=" + std::to_string(x) +
                    ", z=" + std::to_string(z) + ")";
        return r;
      }
    }
  }
  for (int x = 0; x < size; ++x) {
    if (at(x, x) != x) {
      r.ok = false;
      r.axiom = QuandleAxiom::kIdempotent;
      r.witness = {x, -1, -1};
      r.message = "x*x != x at x=" + std::to_string(x);
      return r;
    }
  }
  return r;
}

bool check_kei(const Quandle& q) {
  for (int x = 0; x < q.size; ++x)
    for (int y = 0; y < q.size; ++y)
      if (q.op(x, q.op(x, y)) != y) return false;
  return true;
}

Quandle build_quandle(const Graph& t) {
  const int n = t.vertex_count();
  Quandle q;
  q.size = 2 * n;
  q.table.assign(static_cast<std::size_t>(q.size) *
                     static_cast<std::size_t>(q.size),
                 0);
  for (int u = 0; u < n; ++u) {
    for (int i = 0; i < 2; ++i) {
      for (int v = 0; v < n; ++v) {
        for (int j = 0; j < 2; ++j) {
          const int rhs =
              (u == v || t.has_edge(u, v)) ? 2 * v + j : 2 * v + (1 - j);
          q.table[static_cast<std::size_t>(2 * u + i) *
                      static_cast<std::size_t>(q.size) +
                  static_cast<std::size_t>(2 * v + j)] = rhs;
        }
      }
    }
  }
  return q;
}

bool check_quandle_map(const QuandleMap& m) {
  const int ns = m.source.size;
  const int nt = m.target.size;
  if (static_cast<int>(m.image.size()) != ns) return false;
  std::vector<bool> used(static_cast<std::size_t>(nt), false);
  for (int x = 0; x < ns; ++x) {
    const int w = m.image[static_cast<std::size_t>(x)];
    if (w < 0 || w >= nt) return false;
    if (used[static_cast<std::size_t>(w)]) return false;
    used[static_cast<std::size_t>(w)] = true;
  }
  for (int x = 0; x < ns; ++x)
    for (int y = 0; y < ns; ++y)
      if (m.image[static_cast<std::size_t>(m.source.op(x, y))] !=
          m.target.op(m.image[static_cast<std::size_t>(x)],
                      m.image[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

QuandleMap identity_quandle_map(const Quandle& q) {
  std::vector<int> img(static_cast<std::size_t>(q.size));
  std::iota(img.begin(), img.end(), 0);
  return QuandleMap{q, q, std::move(img)};
}

QuandleMap compose(const QuandleMap& outer, const QuandleMap& inner) {
  if (inner.target != outer.source)
    throw Error("quandle map composition: inner target != outer source");
  std::vector<int> img(inner.image.size());
  for (std::size_t e = 0; e < inner.image.size(); ++e)
    img[e] = outer.image[static_cast<std::size_t>(inner.image[e])];
  return QuandleMap{inner.source, outer.target, std::move(img)};
}

QuandleMap lift_embedding(const GraphMap& f) {
  if (!check_graph_embedding(f))
    throw InvalidEmbeddingError(
        "lift_embedding: the graph map is not an induced embedding");
  Quandle qs = build_quandle(f.source);
  Quandle qt = build_quandle(f.target);
  std::vector<int> img(static_cast<std::size_t>(qs.size));
  for (int v = 0; v < f.source.vertex_count(); ++v) {
    for (int i = 0; i < 2; ++i)
      img[static_cast<std::size_t>(2 * v + i)] =
          2 * f.image[static_cast<std::size_t>(v)] + i;
  }
  return QuandleMap{std::move(qs), std::move(qt), std::move(img)};
}

GraphMap recover_graph_embedding(const QuandleMap& rho, const Graph& s,
                                 const Graph& t) {
  const int ns = s.vertex_count();
  if (rho.source.size != 2 * ns || rho.target.size != 2 * t.vertex_count() ||
      static_cast<int>(rho.image.size()) != 2 * ns)
    throw Error("recover_graph_embedding: map does not match the graphs");
  std::vector<int> h(static_cast<std::size_t>(ns));
  for (int v = 0; v < ns; ++v) {
    const int w0 = vert(rho.image[static_cast<std::size_t>(2 * v)]);
    const int w1 = vert(rho.image[static_cast<std::size_t>(2 * v + 1)]);
    if (w0 != w1)
      throw ClaimViolationError(
          "recover_graph_embedding: vert(rho(2v)) != vert(rho(2v+1)) at v=" +
          std::to_string(v) +
          "; the source has a vertex with no non-neighbor");
    h[static_cast<std::size_t>(v)] = w0;
  }
  GraphMap out{s, t, std::move(h)};
  if (!check_graph_embedding(out))
    throw NotEmbeddingError(
        "recover_graph_embedding: recovered vertex map is not an induced "
        "embedding");
  return out;
}

std::optional<QuandleMap> find_quandle_embedding(const Quandle& qs,
                                                 const Quandle& qt) {
  detail::HomSearcher searcher(qs.size, qt.size, {{&qs.table, &qt.table}});
  auto img = searcher.first();
  if (!img) return std::nullopt;
  return QuandleMap{qs, qt, std::move(*img)};
}

bool quandles_isomorphic(const Quandle& a, const Quandle& b) {
  if (a.size != b.size) return false;
  return find_quandle_embedding(a, b).has_value() &&
         find_quandle_embedding(b, a).has_value();
}

QuandleMap involution(const Graph& t, VertexSet a) {
  const int n = t.vertex_count();
  if (n < 64 && (a >> n) != 0)
    throw OutOfRangeError("involution: subset has bits outside 0..n-1");
  Quandle q = build_quandle(t);
  std::vector<int> img(static_cast<std::size_t>(q.size));
  for (int v = 0; v < n; ++v) {
    const bool keep = (a >> v) & 1u;
    for (int j = 0; j < 2; ++j)
      img[static_cast<std::size_t>(2 * v + j)] = 2 * v + (keep ? j : 1 - j);
  }
  return QuandleMap{q, q, std::move(img)};
}

std::vector<QuandleMap> quandle_automorphisms(const Quandle& q) {
  detail::HomSearcher searcher(q.size, q.size, {{&q.table, &q.table}});
  std::vector<QuandleMap> out;
  for (auto& img : searcher.all()) out.push_back(QuandleMap{q, q, img});
  return out;
}

std::pair<GraphMap, VertexSet> decompose_automorphism(const QuandleMap& rho,
                                                      const Graph& t) {
  const Quandle qt = build_quandle(t);
  if (rho.source != qt || rho.target != qt)
    throw DecompositionError(
        "decompose_automorphism: map is not a self-map of the graph quandle");
  const int n = t.vertex_count();
  std::vector<int> h(static_cast<std::size_t>(n));
  VertexSet bit_preserved = 0;
  for (int v = 0; v < n; ++v) {
    const int e0 = rho.image[static_cast<std::size_t>(2 * v)];
    h[static_cast<std::size_t>(v)] = vert(e0);
    if (bit(e0) == 0) bit_preserved |= VertexSet{1} << v;
  }
  GraphMap hm{t, t, std::move(h)};
  bool h_ok;
  try {
    h_ok = check_graph_embedding(hm);
  } catch (const OutOfRangeError&) {
    h_ok = false;
  }
  if (!h_ok)
    throw DecompositionError(
        "decompose_automorphism: vertex part is not a graph automorphism");
  // The involution subset lives on target vertices: bit preservation at v
  // means I_A must fix h(v).
  VertexSet a = 0;
  for (int v = 0; v < n; ++v)
    if ((bit_preserved >> v) & 1u)
      a |= VertexSet{1} << hm.image[static_cast<std::size_t>(v)];
  QuandleMap rebuilt = compose(involution(t, a), lift_embedding(hm));
  if (rebuilt.image != rho.image)
    throw DecompositionError(
        "decompose_automorphism: reconstruction identity failed; input is "
        "not an automorphism of the graph quandle of a (no complete vertex) "
        "tree");
  return {std::move(hm), a};
}

}  // namespace qfw
