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

#include "qfw/campaigns.hpp"

#include <chrono>

#include "qfw/error.hpp"
#include "qfw/k0.hpp"
#include "qfw/quandle.hpp"
#include "qfw/tower.hpp"

namespace qfw {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string map_to_string(const std::vector<int>& image) {
  std::string out = "[";
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(image[i]);
  }
  return out + "]";
}

std::string pair_digest(const Graph& s, const Graph& t) {
  return "S=" + graph_digest(s) + ";T=" + graph_digest(t);
}

// One biconditional case: independent searches on both sides, plus the
// lift/recover round trips whenever either side finds a witness.
CaseRecord embedding_case(const Graph& s, const Graph& t) {
  CaseRecord rec;
  rec.digest = pair_digest(s, t);
  const auto f = find_graph_embedding(s, t);
  rec.expected = f ? "embeds" : "no-embedding";
  const Quandle qs = build_quandle(s);
  const Quandle qt = build_quandle(t);
  const auto rho = find_quandle_embedding(qs, qt);
  std::string obs = rho ? "q-embeds" : "q-none";
  bool ok = f.has_value() == rho.has_value();
  if (f) {
    try {
      const QuandleMap theta = lift_embedding(*f);
      if (!check_quandle_map(theta)) {
        obs += " lift-not-embedding";
        ok = false;
      } else if (!(recover_graph_embedding(theta, s, t) == *f)) {
        obs += " lift-recover-mismatch";
        ok = false;
      } else {
        obs += " lift-roundtrip-ok";
      }
    } catch (const Error& e) {
      obs += std::string(" lift-error:") + e.what();
      ok = false;
    }
  }
  if (rho) {
    try {
      const GraphMap h = recover_graph_embedding(*rho, s, t);
      obs += " recover-ok";
      (void)h;
    } catch (const Error& e) {
      obs += std::string(" recover-error:") + e.what();
      ok = false;
    }
  }
  rec.observed = obs;
  rec.agree = ok;
  return rec;
}

CaseRecord iso_case(const Graph& s, const Graph& t) {
  CaseRecord rec;
  rec.digest = pair_digest(s, t);
  const bool graph_side = graphs_isomorphic(s, t);
  const bool quandle_side =
      quandles_isomorphic(build_quandle(s), build_quandle(t));
  rec.expected = graph_side ? "iso" : "non-iso";
  rec.observed = quandle_side ? "q-iso" : "q-non-iso";
  rec.agree = graph_side == quandle_side;
  return rec;
}

}  // namespace

CampaignReport verify_embedding_theorem(int max_n, int trials,
                                        std::uint64_t seed,
                                        bool general_graphs) {
  if (max_n < 4 || max_n > 8)
    throw InvalidSizeError("verify_embedding_theorem: need 4 <= max_n <= 8");
  const auto start = Clock::now();
  CampaignReport report;
  report.name = general_graphs ? "verify-embedding-general" : "verify-embedding";
  report.exploratory = general_graphs;

  // Trees are exhausted through max_n = 5 (the regime where ordered pairs
  // stay enumerable); general graphs when the pair count stays below 10^4.
  std::vector<Graph> pool;
  bool exhaustive = false;
  if (!general_graphs && max_n <= 5) {
    for (int n = 4; n <= max_n; ++n)
      for (const Graph& g : all_ct_trees(n)) pool.push_back(g);
    exhaustive = true;
  } else if (general_graphs && max_n <= 4) {
    for (int n = 2; n <= max_n; ++n)
      for (const Graph& g : all_su_graphs(n)) pool.push_back(g);
    exhaustive = pool.size() * pool.size() < 10000;
    if (!exhaustive) pool.clear();
  }

  report.params = {{"max_n", std::to_string(max_n)},
                   {"trials", std::to_string(trials)},
                   {"seed", std::to_string(seed)},
                   {"pool", general_graphs ? "su-graphs" : "su-trees"},
                   {"mode", exhaustive ? "exhaustive" : "random"}};

  if (exhaustive) {
    for (const Graph& s : pool)
      for (const Graph& t : pool) report.cases.push_back(embedding_case(s, t));
  } else {
    if (trials < 1)
      throw InvalidSizeError(
          "verify_embedding_theorem: random mode needs trials >= 1");
    std::mt19937_64 rng(seed);
    const int min_n = general_graphs ? 2 : 4;
    for (int i = 0; i < trials; ++i) {
      const int ns = min_n + static_cast<int>(random_below(
                                 rng, static_cast<std::uint64_t>(
                                          max_n - min_n + 1)));
      const int nt = min_n + static_cast<int>(random_below(
                                 rng, static_cast<std::uint64_t>(
                                          max_n - min_n + 1)));
      const Graph s = general_graphs ? random_su_graph(ns, rng)
                                     : random_ct_tree(ns, rng);
      const Graph t = general_graphs ? random_su_graph(nt, rng)
                                     : random_ct_tree(nt, rng);
      report.cases.push_back(embedding_case(s, t));
    }
  }
  report.duration_seconds = seconds_since(start);
  return report;
}

CampaignReport verify_iso_theorem(int max_n, int trials, std::uint64_t seed) {
  if (max_n < 2 || max_n > 6)
    throw InvalidSizeError("verify_iso_theorem: need 2 <= max_n <= 6");
  const auto start = Clock::now();
  CampaignReport report;
  report.name = "verify-iso";
  std::vector<Graph> pool;
  for (int n = 2; n <= max_n; ++n)
    for (const Graph& g : all_su_graphs(n)) pool.push_back(g);
  const bool exhaustive = pool.size() * pool.size() < 10000;
  report.params = {{"max_n", std::to_string(max_n)},
                   {"trials", std::to_string(trials)},
                   {"seed", std::to_string(seed)},
                   {"pool_size", std::to_string(pool.size())},
                   {"mode", exhaustive ? "exhaustive" : "random"}};
  if (exhaustive) {
    for (const Graph& s : pool)
      for (const Graph& t : pool) report.cases.push_back(iso_case(s, t));
  } else {
    if (trials < 1)
      throw InvalidSizeError("verify_iso_theorem: random mode needs trials >= 1");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
      const Graph& s = pool[random_below(rng, pool.size())];
      const Graph& t = pool[random_below(rng, pool.size())];
      report.cases.push_back(iso_case(s, t));
    }
  }
  report.duration_seconds = seconds_since(start);
  return report;
}

CampaignReport verify_aut_structure(const Graph& tree) {
  if (!is_combinatorial_tree(tree) || !has_no_complete_vertex(tree))
    throw NotCTSquareError(
        "verify_aut_structure: input must be a combinatorial tree with no "
        "complete vertex");
  const auto start = Clock::now();
  CampaignReport report;
  report.name = "verify-aut";
  report.params = {{"tree", graph_digest(tree)}};
  const auto graph_auts = graph_automorphisms(tree);
  const Quandle q = build_quandle(tree);
  const auto quandle_auts = quandle_automorphisms(q);
  const int n = tree.vertex_count();
  const std::uint64_t expected_count =
      (std::uint64_t{1} << n) * graph_auts.size();
  report.add_case("aut-count",
                  "2^" + std::to_string(n) + "*" +
                      std::to_string(graph_auts.size()) + "=" +
                      std::to_string(expected_count),
                  std::to_string(quandle_auts.size()),
                  expected_count == quandle_auts.size());
  int identity_parts = 0;
  for (std::size_t i = 0; i < quandle_auts.size(); ++i) {
    CaseRecord rec;
    rec.digest = "aut" + std::to_string(i) + "=" +
                 map_to_string(quandle_auts[i].image);
    rec.expected = "decomposes";
    try {
      const auto [h, a] = decompose_automorphism(quandle_auts[i], tree);
      const bool is_identity = h == identity_graph_map(tree);
      identity_parts += is_identity ? 1 : 0;
      rec.observed = "h=" + map_to_string(h.image) +
                     ";A=" + std::to_string(a) +
                     (is_identity ? ";h-id" : "");
      rec.agree = true;
    } catch (const Error& e) {
      rec.observed = std::string("error:") + e.what();
      rec.agree = false;
    }
    report.cases.push_back(std::move(rec));
  }
  if (graph_auts.size() == 1) {
    // Rigid tree: every automorphism must be a pure involution.
    report.add_case("rigidity", "all decompositions have h=id",
                    std::to_string(identity_parts) + "/" +
                        std::to_string(quandle_auts.size()),
                    identity_parts ==
                        static_cast<int>(quandle_auts.size()));
  }
  report.duration_seconds = seconds_since(start);
  return report;
}

namespace {

struct PHighCase {
  std::string label;
  K0Elem elem;
};

std::vector<PHighCase> p_high_stress_set(long p0) {
  const auto var = [&](int v) { return K0Elem::variable(v, p0); };
  std::vector<PHighCase> cases;
  const auto push = [&](const std::string& label, const K0Elem& e) {
    cases.push_back({label, e});
  };
  // Monomial shapes (the p0-high class).
  push("v0", var(0));
  push("-v2", -var(2));
  push("v0^(1/p)", K0Elem::variable_pow(0, FracExp{1, 1}, p0));
  push("v0^(2/p^2)*v1^(-1)",
       K0Elem::variable_pow(0, FracExp{2, 2}, p0) * var(1).invert());
  push("v0*v1*v2", var(0) * var(1) * var(2));
  push("v0^2/v1", var(0) * var(0) / var(1));
  push("one", K0Elem::one(p0));
  push("-one", -K0Elem::one(p0));
  push("v0^5", var(0).pow(5));
  push("(v0+v1)/(v0+v1)", (var(0) + var(1)) / (var(0) + var(1)));
  // Non-monomial normal forms and non-unit coefficients.
  push("v0+v1", var(0) + var(1));
  push("v0-v1", var(0) - var(1));
  push("v0+v1+v2", var(0) + var(1) + var(2));
  push("2*v0", K0Elem::constant(2, p0) * var(0));
  push("-3*v1", K0Elem::constant(-3, p0) * var(1));
  push("(1/2)*v0", K0Elem::constant(mpq_class(1, 2), p0) * var(0));
  push("2", K0Elem::constant(2, p0));
  push("-6", K0Elem::constant(-6, p0));
  push("v0^2+v1", var(0) * var(0) + var(1));
  push("(v0+v1)^3", (var(0) + var(1)).pow(3));
  push("(v0+v1)*v2", (var(0) + var(1)) * var(2));
  push("-8*v0", K0Elem::constant(-8, p0) * var(0));
  return cases;
}

// Oracle verdict: iterated p0-th roots exist to depth 2.
bool oracle_says_high(const K0Elem& e, long p0) {
  auto r1 = p_root_oracle(e, p0);
  if (!r1) return false;
  return p_root_oracle(*r1, p0).has_value();
}

}  // namespace

CampaignReport verify_field_layer(int max_n, int trials, std::uint64_t seed) {
  if (max_n < 4 || max_n > 8)
    throw InvalidSizeError("verify_field_layer: need 4 <= max_n <= 8");
  if (trials < 1)
    throw InvalidSizeError("verify_field_layer: need trials >= 1");
  const auto start = Clock::now();
  CampaignReport report;
  report.name = "verify-field";
  report.params = {{"max_n", std::to_string(max_n)},
                   {"trials", std::to_string(trials)},
                   {"seed", std::to_string(seed)},
                   {"depth", "2"},
                   {"root_depth", "2"},
                   {"char", "0"}};
  std::mt19937_64 rng(seed);

  for (int i = 0; i < trials; ++i) {
    const int nt = 4 + static_cast<int>(random_below(
                           rng, static_cast<std::uint64_t>(max_n - 3)));
    const Graph t = random_ct_tree(nt, rng);
    const int k = 4 + static_cast<int>(random_below(
                          rng, static_cast<std::uint64_t>(nt - 3)));
    const auto [s, f] = random_subtree_embedding(t, k, rng);
    CaseRecord rec;
    rec.digest = pair_digest(s, t) + ";f=" + map_to_string(f.image);
    rec.expected = "hom-roundtrip-identity";
    try {
      const TowerPresentation ts = build_tower(s, 2, 2, 0);
      const TowerPresentation tt = build_tower(t, 2, 2, 0);
      const TowerHom hom = induced_hom(f, ts, tt);
      bool ok = ts.generator_count() ==
                    static_cast<std::size_t>(s.edge_count()) &&
                tt.generator_count() ==
                    static_cast<std::size_t>(t.edge_count());
      std::string obs = ok ? "h-sets-ok" : "h-set-cardinality-mismatch";
      std::vector<K0Elem> images;
      images.reserve(static_cast<std::size_t>(s.vertex_count()));
      for (int v = 0; v < s.vertex_count(); ++v)
        images.push_back(apply_hom(hom, K0Elem::variable(v, ts.p0())));
      const GraphMap recovered = recover_graph_from_hom(images, s, t);
      if (recovered == f) {
        obs += " recover-identity";
      } else {
        obs += " recover-mismatch";
        ok = false;
      }
      rec.observed = obs;
      rec.agree = ok;
    } catch (const Error& e) {
      rec.observed = std::string("error:") + e.what();
      rec.agree = false;
    }
    report.cases.push_back(std::move(rec));
  }

  const long p0 = k0_prime_for(0);
  for (const PHighCase& c : p_high_stress_set(p0)) {
    const bool classifier = is_p0_high_form(c.elem);
    const bool oracle = oracle_says_high(c.elem, p0);
    report.add_case("phigh:" + c.label, classifier ? "phigh" : "not-phigh",
                    oracle ? "oracle-high" : "oracle-not-high",
                    classifier == oracle);
  }
  // Seeded extras: unit-coefficient monomials (high) and binomials (not).
  for (int i = 0; i < 8; ++i) {
    Monomial m;
    for (int v = 0; v < 3; ++v) {
      const std::int64_t en =
          static_cast<std::int64_t>(random_below(rng, 5)) - 2;
      if (en == 0) continue;
      const int depth = static_cast<int>(random_below(rng, 3));
      m.factors.emplace_back(v, reduced_frac_exp(en, depth, p0));
    }
    const bool neg = random_below(rng, 2) == 1;
    const K0Elem e = K0Elem::fraction(
        poly_term(m, neg ? mpq_class(-1) : mpq_class(1)),
        poly_constant(1), p0);
    const bool classifier = is_p0_high_form(e);
    const bool oracle = oracle_says_high(e, p0);
    report.add_case("phigh:random-monomial-" + std::to_string(i),
                    classifier ? "phigh" : "not-phigh",
                    oracle ? "oracle-high" : "oracle-not-high",
                    classifier == oracle);
  }
  for (int i = 0; i < 8; ++i) {
    const int v1 = static_cast<int>(random_below(rng, 3));
    int v2 = static_cast<int>(random_below(rng, 3));
    if (v2 == v1) v2 = (v2 + 1) % 3;
    const std::int64_t c =
        static_cast<std::int64_t>(random_below(rng, 7)) - 3;
    const K0Elem e = K0Elem::variable(v1, p0) +
                     K0Elem::constant(c == 0 ? 2 : c, p0) *
                         K0Elem::variable(v2, p0);
    const bool classifier = is_p0_high_form(e);
    const bool oracle = oracle_says_high(e, p0);
    report.add_case("phigh:random-binomial-" + std::to_string(i),
                    classifier ? "phigh" : "not-phigh",
                    oracle ? "oracle-high" : "oracle-not-high",
                    classifier == oracle);
  }

  report.duration_seconds = seconds_since(start);
  return report;
}

Graph rigid7_tree() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
}

}  // namespace qfw
