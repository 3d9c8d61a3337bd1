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

#include "qfw/error.hpp"
#include "qfw/io.hpp"

using namespace qfw;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST_CASE("graph format round trip") {
  const Graph p4 = path(4);
  const std::string text = write_graph(p4);
  CHECK(text == "4 3\n0 1\n1 2\n2 3\n");
  CHECK(read_graph(text) == p4);
  CHECK(write_graph(read_graph(text)) == text);

  CHECK(read_graph("0 0\n") == Graph(0));
  CHECK(read_graph("2 0") == Graph(2));

  // Comments and loose whitespace are accepted on input.
  const Graph g = read_graph("# a path\n4 3 # n m\n0 1\n1 2\n\n2 3\n");
  CHECK(g == p4);
}

TEST_CASE("graph format rejects malformed input with positions") {
  try {
    read_graph("4 1\n5 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(read_graph("4 1\n1 0\n"), ParseError);   // u >= v
  CHECK_THROWS_AS(read_graph("4 2\n0 1\n0 1\n"), ParseError);  // duplicate
  CHECK_THROWS_AS(read_graph("4 2\n0 1\n"), ParseError);    // missing edge
  CHECK_THROWS_AS(read_graph("4 0\nextra\n"), ParseError);  // trailing
  CHECK_THROWS_AS(read_graph("x 0\n"), ParseError);
  CHECK_THROWS_AS(read_graph(""), ParseError);
  CHECK_THROWS_AS(read_graph("100 0\n"), ParseError);  // beyond vertex cap
}

TEST_CASE("quandle format round trip") {
  const Quandle q = build_quandle(path(4));
  const std::string text = write_quandle(q);
  CHECK(read_quandle(text) == q);
  CHECK(write_quandle(read_quandle(text)) == text);

  CHECK_THROWS_AS(read_quandle("q 2\n0 1\n"), ParseError);      // short table
  CHECK_THROWS_AS(read_quandle("q 2\n0 1\n2 0\n"), ParseError); // range
  CHECK_THROWS_AS(read_quandle("4 3\n0 1\n"), ParseError);      // wrong header
}

TEST_CASE("group and LD-monoid format round trips") {
  const BinTable s3 = symmetric_group(3);
  CHECK(read_group(write_group(s3)) == s3);
  CHECK(write_group(read_group(write_group(s3))) == write_group(s3));

  const LdMonoid m = conjugation_ld_monoid(s3);
  CHECK(read_ld_monoid(write_ld_monoid(m)) == m);
  CHECK(write_ld_monoid(read_ld_monoid(write_ld_monoid(m))) ==
        write_ld_monoid(m));
}

TEST_CASE("tower dump format") {
  const TowerPresentation tp = build_tower(path(4), 2, 2, 0);
  CHECK(write_tower(tp) ==
        "tower 2 2 0\n"
        "level 0 5 t0 3\n"
        "r_1_0^2 = t0 - 1*v0 + 1*v1\n"
        "r_1_1^2 = t0 - 1*v1 + 1*v2\n"
        "r_1_2^2 = t0 - 1*v2 + 1*v3\n"
        "level 1 7 t1 3\n"
        "r_2_0^2 = t1 - r_1_0\n"
        "r_2_1^2 = t1 - r_1_1\n"
        "r_2_2^2 = t1 - r_1_2\n");
}

TEST_CASE("element grammar") {
  const K0Elem a = K0Elem::variable(0, 3) + K0Elem::variable(1, 3);
  CHECK(a.to_string() == "1*v0 + 1*v1");
  const K0Elem b =
      K0Elem::constant(mpq_class(-2), 3) *
      K0Elem::variable_pow(0, FracExp{2, 2}, 3) * K0Elem::variable(1, 3);
  CHECK(b.to_string() == "-2*v0^(2/3^2)*v1");
  const K0Elem frac = a / K0Elem::variable(2, 3);
  CHECK(frac.to_string() == "(1*v0 + 1*v1)/(1*v2)");
  CHECK(K0Elem::zero(3).to_string() == "0");
}

TEST_CASE("header sniffing") {
  CHECK(sniff_kind("4 3\n0 1\n") == FileKind::kGraph);
  CHECK(sniff_kind("# comment\nq 8\n") == FileKind::kQuandle);
  CHECK(sniff_kind("g 6\n") == FileKind::kGroup);
  CHECK(sniff_kind("ld 6\n") == FileKind::kLdMonoid);
  CHECK_THROWS_AS(sniff_kind("bogus\n"), ParseError);
  CHECK_THROWS_AS(sniff_kind(""), ParseError);
}
