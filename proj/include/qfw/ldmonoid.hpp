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

#ifndef QFW_LDMONOID_HPP
#define QFW_LDMONOID_HPP

#include <array>
#include <string>
#include <vector>

namespace qfw {

/// Raw binary-operation table; no axioms imposed.
struct BinTable {
  int size = 0;
  std::vector<int> table;  // row-major; table[a*size + b] = a . b

  int at(int a, int b) const {
    return table[static_cast<std::size_t>(a) * static_cast<std::size_t>(size) +
                 static_cast<std::size_t>(b)];
  }
  bool operator==(const BinTable& other) const = default;
};

enum class GroupDefect {
  kEntryRange,
  kAssociativity,
  kIdentity,
  kInverse,
};

struct GroupCheckResult {
  bool ok = true;
  GroupDefect defect = GroupDefect::kAssociativity;
  std::array<int, 3> witness = {-1, -1, -1};
  int identity = -1;  // valid when an identity exists
  std::string message;
};

/// ok iff the table is associative with a two-sided identity and inverses;
/// otherwise identifies the first failure in check order
/// (ranges, associativity, identity, inverses).
GroupCheckResult check_group(const BinTable& t);

/// Two binary operations on one carrier: an associative composition and a
/// left self-distributive star tied together by the mixed identities
///   (a.b)*c == a*(b*c),  a*(b.c) == (a*b).(a*c),  (a*b).a == a.b.
struct LdMonoid {
  int size = 0;
  BinTable comp;  // associative operation
  BinTable star;  // self-distributive operation

  bool operator==(const LdMonoid& other) const = default;
};

struct LdCheckResult {
  bool ok = true;
  int identity_index = -1;  // which of the four identities failed, 0-based
  std::array<int, 3> witness = {-1, -1, -1};
  std::string message;
};

/// ok iff all four identities hold over all triples (pairs for the fourth).
LdCheckResult check_ld_monoid(const LdMonoid& m);

/// The conjugation structure of a group: comp = g, star[a][b] = a.b.a^-1.
/// Throws NotAGroupError when check_group fails.
LdMonoid conjugation_ld_monoid(const BinTable& g);

/// All bijections preserving the group table, lexicographic image order.
std::vector<std::vector<int>> group_automorphisms(const BinTable& g);

/// All bijections preserving both tables, lexicographic image order.
std::vector<std::vector<int>> ld_automorphisms(const LdMonoid& m);

// Cayley-table constructors for the verification library of small groups.

/// Z/n with table[a][b] = (a+b) mod n.
BinTable cyclic_group(int n);

/// S_n on one-line permutations enumerated lexicographically;
/// table[a][b] = a o b with (a o b)(x) = a(b(x)). Intended for n <= 5.
BinTable symmetric_group(int n);

/// Dihedral group of order 2n: index i + n*j for r^i s^j.
BinTable dihedral_group(int n);

/// Quaternion group of order 8: index 2u + s for units (1,i,j,k) and sign s.
BinTable quaternion_group();

}  // namespace qfw

#endif  // QFW_LDMONOID_HPP
