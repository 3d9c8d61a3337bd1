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

#ifndef QFW_IO_HPP
#define QFW_IO_HPP

#include <string>

#include "qfw/graph.hpp"
#include "qfw/ldmonoid.hpp"
#include "qfw/quandle.hpp"
#include "qfw/tower.hpp"

namespace qfw {

// Text formats. '#' starts a comment that runs to end of line. Writers emit
// canonical bytes, so write(read(write(x))) == write(x) and values round-trip
// exactly. Readers throw ParseError with 1-based line/column on bad input.

// Graph: "n m" then m lines "u v" with 0 <= u < v < n.
Graph read_graph(const std::string& text);
std::string write_graph(const Graph& g);

// Quandle table: "q n" then n rows of n entries; row x lists x*0 .. x*(n-1).
Quandle read_quandle(const std::string& text);
std::string write_quandle(const Quandle& q);

// Group table: "g n" then n rows of n entries.
BinTable read_group(const std::string& text);
std::string write_group(const BinTable& g);

// LD-monoid: "ld n" then the composition table and the star table
// back-to-back, n rows each.
LdMonoid read_ld_monoid(const std::string& text);
std::string write_ld_monoid(const LdMonoid& m);

// Tower presentation dump (write-only): "tower n l p", then per level one
// line "level k <prime> <t-symbol> <|H_k|>" followed by one relation line
// "r_<level+1>_<j>^2 = t<level> - <element>" per generator.
std::string write_tower(const TowerPresentation& tp);

enum class FileKind { kGraph, kQuandle, kGroup, kLdMonoid };

/// Classifies a table file by its header token ("q", "g", "ld", or a digit).
FileKind sniff_kind(const std::string& text);

}  // namespace qfw

#endif  // QFW_IO_HPP
