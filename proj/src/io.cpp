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

#include "qfw/io.hpp"

#include <cctype>
#include <charconv>

#include "qfw/error.hpp"

namespace qfw {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Whitespace-separated tokens with '#' line comments and source positions.
class Scanner {
 public:
  explicit Scanner(const std::string& text) {
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (c == '\n') {
        ++line;
        column = 1;
        ++i;
      } else if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++column;
        ++i;
      } else {
        Token t{"", line, column};
        while (i < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '#') {
          t.text += text[i];
          ++i;
          ++column;
        }
        tokens_.push_back(std::move(t));
      }
    }
    end_line_ = line;
    end_column_ = column;
  }

  bool done() const { return pos_ == tokens_.size(); }

  const Token& peek() const {
    if (done()) throw ParseError("unexpected end of input", end_line_, end_column_);
    return tokens_[pos_];
  }

  Token next(const std::string& what) {
    if (done())
      throw ParseError("unexpected end of input while reading " + what,
                       end_line_, end_column_);
    return tokens_[pos_++];
  }

  long next_int(const std::string& what, long min, long max) {
    const Token t = next(what);
    long value = 0;
    const auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
      throw ParseError("expected an integer for " + what + ", got '" + t.text +
                           "'",
                       t.line, t.column);
    if (value < min || value > max)
      throw ParseError(what + " " + std::to_string(value) +
                           " out of range [" + std::to_string(min) + ", " +
                           std::to_string(max) + "]",
                       t.line, t.column);
    return value;
  }

  void expect_word(const std::string& word) {
    const Token t = next("header");
    if (t.text != word)
      throw ParseError("expected '" + word + "', got '" + t.text + "'", t.line,
                       t.column);
  }

  void expect_done() {
    if (!done()) {
      const Token& t = peek();
      throw ParseError("trailing content '" + t.text + "'", t.line, t.column);
    }
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int end_line_ = 1;
  int end_column_ = 1;
};

std::vector<int> read_table_rows(Scanner& sc, int rows, int n,
                                 const std::string& what) {
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(n));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < n; ++c)
      table.push_back(static_cast<int>(
          sc.next_int(what + " entry", 0, static_cast<long>(n) - 1)));
  return table;
}

std::string table_rows_to_string(const std::vector<int>& table, int rows,
                                 int n) {
  std::string out;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c > 0) out += " ";
      out += std::to_string(table[static_cast<std::size_t>(r) *
                                      static_cast<std::size_t>(n) +
                                  static_cast<std::size_t>(c)]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

Graph read_graph(const std::string& text) {
  Scanner sc(text);
  const long n = sc.next_int("vertex count", 0, Graph::kMaxVertices);
  const long max_edges = n * (n - 1) / 2;
  const long m = sc.next_int("edge count", 0, max_edges);
  Graph g(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    const Token ut = sc.peek();
    const long u = sc.next_int("edge endpoint", 0, n - 1);
    const long v = sc.next_int("edge endpoint", 0, n - 1);
    if (u >= v)
      throw ParseError("edge endpoints must satisfy u < v", ut.line,
                       ut.column);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("duplicate edge", ut.line, ut.column);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  sc.expect_done();
  return g;
}

std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Quandle read_quandle(const std::string& text) {
  Scanner sc(text);
  sc.expect_word("q");
  const long n = sc.next_int("quandle size", 1, 4096);
  Quandle q;
  q.size = static_cast<int>(n);
  q.table = read_table_rows(sc, q.size, q.size, "table");
  sc.expect_done();
  return q;
}

std::string write_quandle(const Quandle& q) {
  return "q " + std::to_string(q.size) + "\n" +
         table_rows_to_string(q.table, q.size, q.size);
}

BinTable read_group(const std::string& text) {
  Scanner sc(text);
  sc.expect_word("g");
  const long n = sc.next_int("group order", 1, 4096);
  BinTable g;
  g.size = static_cast<int>(n);
  g.table = read_table_rows(sc, g.size, g.size, "table");
  sc.expect_done();
  return g;
}

std::string write_group(const BinTable& g) {
  return "g " + std::to_string(g.size) + "\n" +
         table_rows_to_string(g.table, g.size, g.size);
}

LdMonoid read_ld_monoid(const std::string& text) {
  Scanner sc(text);
  sc.expect_word("ld");
  const long n = sc.next_int("carrier size", 1, 4096);
  LdMonoid m;
  m.size = static_cast<int>(n);
  m.comp.size = m.size;
  m.comp.table = read_table_rows(sc, m.size, m.size, "composition table");
  m.star.size = m.size;
  m.star.table = read_table_rows(sc, m.size, m.size, "star table");
  sc.expect_done();
  return m;
}

std::string write_ld_monoid(const LdMonoid& m) {
  return "ld " + std::to_string(m.size) + "\n" +
         table_rows_to_string(m.comp.table, m.size, m.size) +
         table_rows_to_string(m.star.table, m.size, m.size);
}

std::string write_tower(const TowerPresentation& tp) {
  std::string out = "tower " + std::to_string(tp.depth) + " " +
                    std::to_string(tp.root_depth) + " " +
                    std::to_string(tp.characteristic) + "\n";
  for (int level = 0; level < tp.depth; ++level) {
    const long prime = tp.primes[static_cast<std::size_t>(level) + 1];
    out += "level " + std::to_string(level) + " " + std::to_string(prime) +
           " t" + std::to_string(level) + " " +
           std::to_string(tp.generator_count()) + "\n";
    for (std::size_t j = 0; j < tp.generator_count(); ++j) {
      out += "r_" + std::to_string(level + 1) + "_" + std::to_string(j) +
             "^2 = t" + std::to_string(level) + " - ";
      if (level == 0) {
        out += tp.h0[j].to_string();
      } else {
        out += "r_" + std::to_string(level) + "_" + std::to_string(j);
      }
      out += "\n";
    }
  }
  return out;
}

FileKind sniff_kind(const std::string& text) {
  Scanner sc(text);
  const Token t = sc.next("header");
  if (t.text == "q") return FileKind::kQuandle;
  if (t.text == "g") return FileKind::kGroup;
  if (t.text == "ld") return FileKind::kLdMonoid;
  if (!t.text.empty() && std::isdigit(static_cast<unsigned char>(t.text[0])))
    return FileKind::kGraph;
  throw ParseError("unrecognized header token '" + t.text + "'", t.line,
                   t.column);
}

}  // namespace qfw
