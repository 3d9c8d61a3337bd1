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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qfw/campaigns.hpp"
#include "qfw/error.hpp"
#include "qfw/io.hpp"
#include "qfw/ldmonoid.hpp"
#include "qfw/quandle.hpp"
#include "qfw/tower.hpp"

namespace {

// Exit codes: 0 success / all cases agree, 1 negative result or
// disagreement, 2 usage or parse error.
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qfw::Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qfw::Error("cannot open '" + path + "' for writing");
  out << content;
}

std::string image_to_string(const std::vector<int>& image) {
  std::string out;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(image[i]);
  }
  return out;
}

int emit_report(const qfw::CampaignReport& report, const std::string& format,
                const std::string& out_path) {
  dump(out_path,
       format == "records" ? qfw::to_records(report) : qfw::to_text(report));
  return qfw::report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qfw: a finite workbench for graph quandles, conjugation LD-monoids, "
      "and radical field towers over combinatorial trees"};
  app.require_subcommand(1);
  std::string out_path = "-";
  app.add_option("-o,--out", out_path, "Output file (default stdout)")
      ->capture_default_str();

  // gen-tree
  auto* gen = app.add_subcommand(
      "gen-tree", "Generate a random labeled tree with no complete vertex");
  int gen_n = 7;
  std::uint64_t gen_seed = 0;
  gen->add_option("--n", gen_n, "Vertex count (>= 4)")->required();
  gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();

  // build-quandle
  auto* bq = app.add_subcommand("build-quandle",
                                "Build the graph quandle of a graph file");
  std::string bq_input = "-";
  bq->add_option("input", bq_input, "Graph file (default stdin)");

  // embed
  auto* embed = app.add_subcommand(
      "embed",
      "Search for an induced embedding between two graph files or two "
      "quandle files (exit 1 when none exists)");
  std::string embed_src, embed_tgt;
  embed->add_option("source", embed_src, "Source file")->required();
  embed->add_option("target", embed_tgt, "Target file")->required();

  // iso
  auto* iso = app.add_subcommand(
      "iso",
      "Isomorphism test between two graph files or two quandle files "
      "(exit 1 when not isomorphic)");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a, "First file")->required();
  iso->add_option("b", iso_b, "Second file")->required();

  // aut
  auto* aut = app.add_subcommand(
      "aut", "Enumerate automorphisms of a graph or quandle file");
  std::string aut_input = "-";
  aut->add_option("input", aut_input, "Graph or quandle file");

  // ld-check
  auto* ld = app.add_subcommand(
      "ld-check",
      "Validate a group file ('g' header) through the conjugation LD-monoid "
      "checks, or an LD-monoid file ('ld' header) directly");
  std::string ld_input = "-";
  ld->add_option("input", ld_input, "Group or LD-monoid file");

  // tower
  auto* tower = app.add_subcommand(
      "tower", "Build and print the field-tower presentation of a tree");
  std::string tower_input = "-";
  int tower_depth = 2;
  int tower_root_depth = 2;
  long tower_char = 0;
  tower->add_option("input", tower_input, "Graph file (a tree)");
  tower->add_option("--depth", tower_depth, "Levels to build")
      ->capture_default_str();
  tower->add_option("--root-depth", tower_root_depth,
                    "Materialized root-tower depth")
      ->capture_default_str();
  tower->add_option("--char", tower_char, "Field characteristic (0 or odd prime)")
      ->capture_default_str();

  // campaign options
  std::string format = "text";
  int max_n = 5;
  int trials = 200;
  std::uint64_t seed = 0;
  const auto add_campaign_options = [&](CLI::App* cmd, int default_max_n,
                                        int default_trials) {
    cmd->add_option("--max-n", max_n, "Largest instance size")
        ->default_val(default_max_n);
    cmd->add_option("--trials", trials, "Random cases when not exhaustive")
        ->default_val(default_trials);
    cmd->add_option("--seed", seed, "Campaign seed")->capture_default_str();
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "records"}))
        ->capture_default_str();
  };

  auto* ve = app.add_subcommand(
      "verify-embedding",
      "Check S embeds T iff Q_S embeds Q_T over trees with no complete "
      "vertex (exhaustive through max-n 5)");
  bool ve_general = false;
  add_campaign_options(ve, 5, 200);
  ve->add_flag("--general-graphs", ve_general,
               "Exploratory run over general graphs with no complete vertex");

  auto* vi = app.add_subcommand(
      "verify-iso",
      "Check S iso T iff Q_S iso Q_T over graphs with no complete vertex");
  add_campaign_options(vi, 4, 200);

  auto* va = app.add_subcommand(
      "verify-aut",
      "Enumerate and decompose Aut(Q_T) for a tree with no complete vertex");
  std::string va_input;
  bool va_rigid7 = false;
  va->add_option("input", va_input, "Graph file (a tree)");
  va->add_flag("--rigid7", va_rigid7, "Use the built-in rigid 7-vertex tree");
  std::string va_format = "text";
  va->add_option("--format", va_format, "Report format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();

  auto* vf = app.add_subcommand(
      "verify-field",
      "Field-layer round trips, generator cardinalities, and the p-high "
      "classifier/oracle battery");
  add_campaign_options(vf, 6, 50);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      dump(out_path, qfw::write_graph(qfw::random_ct_tree(gen_n, gen_seed)));
      return 0;
    }
    if (*bq) {
      const qfw::Graph g = qfw::read_graph(slurp(bq_input));
      dump(out_path, qfw::write_quandle(qfw::build_quandle(g)));
      return 0;
    }
    if (*embed) {
      const std::string src_text = slurp(embed_src);
      const std::string tgt_text = slurp(embed_tgt);
      const qfw::FileKind ks = qfw::sniff_kind(src_text);
      const qfw::FileKind kt = qfw::sniff_kind(tgt_text);
      if (ks != kt) throw qfw::Error("embed: mixed input kinds");
      if (ks == qfw::FileKind::kGraph) {
        const auto m = qfw::find_graph_embedding(qfw::read_graph(src_text),
                                                 qfw::read_graph(tgt_text));
        if (!m) {
          dump(out_path, "none\n");
          return kExitDisagree;
        }
        dump(out_path, image_to_string(m->image) + "\n");
        return 0;
      }
      if (ks == qfw::FileKind::kQuandle) {
        const auto m = qfw::find_quandle_embedding(
            qfw::read_quandle(src_text), qfw::read_quandle(tgt_text));
        if (!m) {
          dump(out_path, "none\n");
          return kExitDisagree;
        }
        dump(out_path, image_to_string(m->image) + "\n");
        return 0;
      }
      throw qfw::Error("embed: inputs must be graphs or quandles");
    }
    if (*iso) {
      const std::string a_text = slurp(iso_a);
      const std::string b_text = slurp(iso_b);
      const qfw::FileKind ka = qfw::sniff_kind(a_text);
      const qfw::FileKind kb = qfw::sniff_kind(b_text);
      if (ka != kb) throw qfw::Error("iso: mixed input kinds");
      bool result;
      if (ka == qfw::FileKind::kGraph) {
        result = qfw::graphs_isomorphic(qfw::read_graph(a_text),
                                        qfw::read_graph(b_text));
      } else if (ka == qfw::FileKind::kQuandle) {
        result = qfw::quandles_isomorphic(qfw::read_quandle(a_text),
                                          qfw::read_quandle(b_text));
      } else {
        throw qfw::Error("iso: inputs must be graphs or quandles");
      }
      dump(out_path, result ? "isomorphic\n" : "not-isomorphic\n");
      return result ? 0 : kExitDisagree;
    }
    if (*aut) {
      const std::string text = slurp(aut_input);
      const qfw::FileKind kind = qfw::sniff_kind(text);
      std::string out;
      if (kind == qfw::FileKind::kGraph) {
        const auto auts = qfw::graph_automorphisms(qfw::read_graph(text));
        out = std::to_string(auts.size()) + "\n";
        for (const auto& m : auts) out += image_to_string(m.image) + "\n";
      } else if (kind == qfw::FileKind::kQuandle) {
        const auto auts = qfw::quandle_automorphisms(qfw::read_quandle(text));
        out = std::to_string(auts.size()) + "\n";
        for (const auto& m : auts) out += image_to_string(m.image) + "\n";
      } else {
        throw qfw::Error("aut: input must be a graph or a quandle");
      }
      dump(out_path, out);
      return 0;
    }
    if (*ld) {
      const std::string text = slurp(ld_input);
      const qfw::FileKind kind = qfw::sniff_kind(text);
      std::string out;
      bool ok = true;
      if (kind == qfw::FileKind::kGroup) {
        const qfw::BinTable g = qfw::read_group(text);
        const auto gc = qfw::check_group(g);
        if (!gc.ok) {
          out = "group: FAIL (" + gc.message + ")\n";
          ok = false;
        } else {
          out = "group: ok\n";
          const qfw::LdMonoid m = qfw::conjugation_ld_monoid(g);
          const auto lc = qfw::check_ld_monoid(m);
          out += lc.ok ? "conjugation LD-monoid: ok\n"
                       : "conjugation LD-monoid: FAIL (" + lc.message + ")\n";
          ok = ok && lc.ok;
          const auto ga = qfw::group_automorphisms(g);
          const auto la = qfw::ld_automorphisms(m);
          const bool agree = ga == la;
          out += "automorphism lists: " +
                 std::to_string(ga.size()) + " group, " +
                 std::to_string(la.size()) + " LD-monoid, " +
                 (agree ? std::string("equal\n") : std::string("DIFFER\n"));
          ok = ok && agree;
        }
      } else if (kind == qfw::FileKind::kLdMonoid) {
        const auto lc = qfw::check_ld_monoid(qfw::read_ld_monoid(text));
        out = lc.ok ? "LD-monoid: ok\n"
                    : "LD-monoid: FAIL (" + lc.message + ")\n";
        ok = lc.ok;
      } else {
        throw qfw::Error("ld-check: input must be a group or an LD-monoid");
      }
      dump(out_path, out);
      return ok ? 0 : kExitDisagree;
    }
    if (*tower) {
      const qfw::Graph g = qfw::read_graph(slurp(tower_input));
      dump(out_path, qfw::write_tower(qfw::build_tower(
                         g, tower_depth, tower_root_depth, tower_char)));
      return 0;
    }
    if (*ve) {
      return emit_report(
          qfw::verify_embedding_theorem(max_n, trials, seed, ve_general),
          format, out_path);
    }
    if (*vi) {
      return emit_report(qfw::verify_iso_theorem(max_n, trials, seed), format,
                         out_path);
    }
    if (*va) {
      if (va_rigid7 != va_input.empty())
        throw qfw::Error(
            "verify-aut: provide a tree file or --rigid7 (exactly one)");
      const qfw::Graph tree =
          va_rigid7 ? qfw::rigid7_tree() : qfw::read_graph(slurp(va_input));
      return emit_report(qfw::verify_aut_structure(tree), va_format, out_path);
    }
    if (*vf) {
      return emit_report(qfw::verify_field_layer(max_n, trials, seed), format,
                         out_path);
    }
  } catch (const qfw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
