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

// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// criteria pass. Every tolerance here is exact (zero failures allowed).

#include <chrono>
#include <cstdio>
#include <string>

#include "qfw/campaigns.hpp"
#include "qfw/error.hpp"
#include "qfw/io.hpp"
#include "qfw/k0.hpp"
#include "qfw/ldmonoid.hpp"
#include "qfw/quandle.hpp"
#include "qfw/tower.hpp"

using namespace qfw;

namespace {

int criteria_passed = 0;
int criteria_total = 0;

using Clock = std::chrono::steady_clock;

void report(int index, const std::string& name, bool pass,
            const std::string& detail, double seconds) {
  ++criteria_total;
  criteria_passed += pass ? 1 : 0;
  std::printf("[%d] %s: %s (%s) [%.2fs]\n", index, name.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str(), seconds);
  std::fflush(stdout);
}

template <typename Fn>
void criterion(int index, const std::string& name, Fn&& fn) {
  const auto start = Clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(index, name, pass,
         detail.empty() ? std::string("no detail") : detail,
         std::chrono::duration<double>(Clock::now() - start).count());
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

int main() {
  // 1. Quandle functor soundness over every qualifying tree, n <= 7.
  criterion(1, "quandle-functor-soundness", [](std::string& detail) {
    long trees = 0;
    long failures = 0;
    for (int n = 4; n <= 7; ++n) {
      enumerate_ct_trees(n, [&](const Graph& t) {
        ++trees;
        const Quandle q = build_quandle(t);
        if (!check_quandle_axioms(q.size, q.table).ok || !check_kei(q))
          ++failures;
      });
    }
    detail = std::to_string(trees) + " trees, " + std::to_string(failures) +
             " failures";
    return trees == 12 + 120 + 1290 + 16800 && failures == 0;
  });

  // 2. Embedding biconditional: exhaustive ordered pairs through n = 5 plus
  // seeded random pairs through n = 7.
  criterion(2, "embedding-biconditional", [](std::string& detail) {
    const CampaignReport exhaustive = verify_embedding_theorem(5, 0, 0);
    const CampaignReport random = verify_embedding_theorem(7, 200, 20260809);
    detail = std::to_string(exhaustive.cases.size()) + " exhaustive + " +
             std::to_string(random.cases.size()) + " random pairs, " +
             std::to_string(exhaustive.disagree_count() +
                            random.disagree_count()) +
             " disagreements";
    return exhaustive.cases.size() == 132u * 132u && exhaustive.all_agree() &&
           random.cases.size() == 200 && random.all_agree();
  });

  // 3. Isomorphism biconditional over graphs with no complete vertex, n <= 4.
  criterion(3, "isomorphism-biconditional", [](std::string& detail) {
    const CampaignReport r = verify_iso_theorem(4, 0, 0);
    bool exhaustive = false;
    for (const auto& [k, v] : r.params)
      if (k == "mode") exhaustive = v == "exhaustive";
    detail = std::to_string(r.cases.size()) + " pairs, " +
             std::to_string(r.disagree_count()) + " disagreements";
    return exhaustive && r.all_agree();
  });

  // 4. Automorphism structure: exact counts and decompositions.
  criterion(4, "automorphism-structure", [](std::string& detail) {
    const auto q7 = quandle_automorphisms(build_quandle(rigid7_tree()));
    const auto q4 = quandle_automorphisms(build_quandle(path(4)));
    const CampaignReport r7 = verify_aut_structure(rigid7_tree());
    const CampaignReport r4 = verify_aut_structure(path(4));
    detail = "|Aut(Q_T7)|=" + std::to_string(q7.size()) +
             ", |Aut(Q_P4)|=" + std::to_string(q4.size());
    return q7.size() == 128 && q4.size() == 32 && r7.all_agree() &&
           r4.all_agree();
  });

  // 5. Involution laws on random (tree, subset) pairs.
  criterion(5, "involution-laws", [](std::string& detail) {
    std::mt19937_64 rng(55);
    int checked = 0;
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 4 + static_cast<int>(random_below(rng, 4));
      const Graph t = random_ct_tree(n, rng);
      const VertexSet a = random_below(rng, std::uint64_t{1} << n);
      const QuandleMap ia = involution(t, a);
      const bool ok =
          check_quandle_map(ia) &&
          compose(ia, ia) == identity_quandle_map(build_quandle(t));
      ++checked;
      failures += ok ? 0 : 1;
    }
    detail = std::to_string(checked) + " pairs, " + std::to_string(failures) +
             " failures";
    return failures == 0;
  });

  // 6. LD-monoid layer: the library of small groups.
  criterion(6, "ld-monoid-layer", [](std::string& detail) {
    const std::vector<std::pair<std::string, BinTable>> library = {
        {"S3", symmetric_group(3)}, {"Z2", cyclic_group(2)},
        {"Z3", cyclic_group(3)},    {"Z4", cyclic_group(4)},
        {"Z5", cyclic_group(5)},    {"Z6", cyclic_group(6)},
        {"Z7", cyclic_group(7)},    {"Z8", cyclic_group(8)},
        {"D4", dihedral_group(4)},  {"Q8", quaternion_group()}};
    int failures = 0;
    for (const auto& [name, g] : library) {
      if (!check_group(g).ok) {
        ++failures;
        continue;
      }
      const LdMonoid m = conjugation_ld_monoid(g);
      if (!check_ld_monoid(m).ok) ++failures;
      if (group_automorphisms(g) != ld_automorphisms(m)) ++failures;
    }
    detail = std::to_string(library.size()) + " groups, " +
             std::to_string(failures) + " failures";
    return failures == 0;
  });

  // 7. Field layer: exact field laws, classifier/oracle battery, generator
  // cardinalities, and homomorphism round trips.
  criterion(7, "field-layer", [](std::string& detail) {
    std::mt19937_64 rng(77);
    long law_failures = 0;
    const long triples = 10000;
    for (long i = 0; i < triples; ++i) {
      const K0Elem a = random_k0_elem(rng, 3, 3, 2, 2);
      const K0Elem b = random_k0_elem(rng, 3, 3, 2, 2);
      const K0Elem c = random_k0_elem(rng, 3, 3, 2, 2);
      const bool ok = (a + b).equals(b + a) && (a * b).equals(b * a) &&
                      ((a + b) + c).equals(a + (b + c)) &&
                      ((a * b) * c).equals(a * (b * c)) &&
                      (a * (b + c)).equals(a * b + a * c) &&
                      (a.is_zero() || (a * a.invert()).equals(K0Elem::one(3)));
      law_failures += ok ? 0 : 1;
    }

    long tower_trees = 0;
    long tower_failures = 0;
    for (int n = 4; n <= 7; ++n) {
      enumerate_ct_trees(n, [&](const Graph& t) {
        ++tower_trees;
        const TowerPresentation tp = build_tower(t, 2, 2, 0);
        const bool ok =
            tp.generator_count() == static_cast<std::size_t>(t.edge_count()) &&
            tp.primes.size() == 3;
        tower_failures += ok ? 0 : 1;
      });
    }
    // The dump externalizes one relation per generator per level; spot-check
    // the per-level cardinality on the smallest stratum.
    for (const Graph& t : all_ct_trees(4)) {
      const std::string dump = write_tower(build_tower(t, 2, 2, 0));
      long relations = 0;
      for (std::size_t pos = dump.find("r_"); pos != std::string::npos;
           pos = dump.find("r_", pos + 1))
        ++relations;
      // Level-1 RHS handles repeat level-0 names: 3 + 3 on lines plus 3 RHS.
      if (relations != 9) ++tower_failures;
    }

    const CampaignReport field = verify_field_layer(7, 50, 7);

    detail = std::to_string(triples) + " law triples (" +
             std::to_string(law_failures) + " bad), " +
             std::to_string(tower_trees) + " towers (" +
             std::to_string(tower_failures) + " bad), campaign " +
             std::to_string(field.cases.size()) + " cases (" +
             std::to_string(field.disagree_count()) + " bad)";
    return law_failures == 0 && tower_failures == 0 && field.all_agree();
  });

  // 8. Reproducibility: byte-identical records for identical seeds.
  criterion(8, "reproducibility", [](std::string& detail) {
    const std::string e1 = to_records(verify_embedding_theorem(4, 10, 42));
    const std::string e2 = to_records(verify_embedding_theorem(4, 10, 42));
    const std::string f1 = to_records(verify_field_layer(5, 10, 3));
    const std::string f2 = to_records(verify_field_layer(5, 10, 3));
    const std::string r1 = to_records(verify_embedding_theorem(6, 40, 99));
    const std::string r2 = to_records(verify_embedding_theorem(6, 40, 99));
    const bool ok = e1 == e2 && f1 == f2 && r1 == r2;
    detail = ok ? "3 campaigns byte-identical across reruns"
                : "byte difference between reruns";
    return ok;
  });

  std::printf("ACCEPTANCE: %d/%d criteria pass\n", criteria_passed,
              criteria_total);
  return criteria_passed == criteria_total ? 0 : 1;
}
