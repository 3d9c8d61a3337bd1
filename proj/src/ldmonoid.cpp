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

#include "qfw/ldmonoid.hpp"

#include <algorithm>
#include <numeric>

#include "qfw/error.hpp"
#include "qfw/hom_search.hpp"

namespace qfw {

GroupCheckResult check_group(const BinTable& t) {
  GroupCheckResult r;
  const int n = t.size;
  if (n <= 0 || static_cast<int>(t.table.size()) != n * n) {
    r.ok = false;
    r.defect = GroupDefect::kEntryRange;
    r.message = "table must be a nonempty n*n array";
    return r;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int v = t.at(a, b);
      if (v < 0 || v >= n) {
        r.ok = false;
        r.defect = GroupDefect::kEntryRange;
        r.witness = {a, b, v};
        r.message = "entry out of range";
        return r;
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) {
          r.ok = false;
          r.defect = GroupDefect::kAssociativity;
          r.witness = {a, b, c};
          r.message = "(a.b).c != a.(b.c) at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")";
          return r;
        }
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool is_id = true;
    for (int a = 0; a < n; ++a)
      if (t.at(cand, a) != a || t.at(a, cand) != a) {
        is_id = false;
        break;
      }
    if (is_id) {
      e = cand;
      break;
    }
  }
  if (e < 0) {
    r.ok = false;
    r.defect = GroupDefect::kIdentity;
    r.message = "no two-sided identity";
    return r;
  }
  r.identity = e;
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (t.at(a, b) == e && t.at(b, a) == e) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) {
      r.ok = false;
      r.defect = GroupDefect::kInverse;
      r.witness = {a, -1, -1};
      r.message = "no inverse for element " + std::to_string(a);
      return r;
    }
  }
  return r;
}

LdCheckResult check_ld_monoid(const LdMonoid& m) {
  LdCheckResult r;
  const int n = m.size;
  if (n <= 0 || m.comp.size != n || m.star.size != n ||
      static_cast<int>(m.comp.table.size()) != n * n ||
      static_cast<int>(m.star.table.size()) != n * n) {
    r.ok = false;
    r.message = "malformed tables";
    return r;
  }
  const auto& o = m.comp;
  const auto& s = m.star;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (o.at(a, o.at(b, c)) != o.at(o.at(a, b), c)) {
          r.ok = false;
          r.identity_index = 0;
          r.witness = {a, b, c};
          r.message = "a.(b.c) != (a.b).c";
          return r;
        }
        if (s.at(o.at(a, b), c) != s.at(a, s.at(b, c))) {
          r.ok = false;
          r.identity_index = 1;
          r.witness = {a, b, c};
          r.message = "(a.b)*c != a*(b*c)";
          return r;
        }
        if (s.at(a, o.at(b, c)) != o.at(s.at(a, b), s.at(a, c))) {
          r.ok = false;
          r.identity_index = 2;
          r.witness = {a, b, c};
          r.message = "a*(b.c) != (a*b).(a*c)";
          return r;
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (o.at(s.at(a, b), a) != o.at(a, b)) {
        r.ok = false;
        r.identity_index = 3;
        r.witness = {a, b, -1};
        r.message = "(a*b).a != a.b";
        return r;
      }
  return r;
}

LdMonoid conjugation_ld_monoid(const BinTable& g) {
  GroupCheckResult gc = check_group(g);
  if (!gc.ok) throw NotAGroupError("conjugation_ld_monoid: " + gc.message);
  const int n = g.size;
  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.at(a, b) == gc.identity && g.at(b, a) == gc.identity)
        inv[static_cast<std::size_t>(a)] = b;
  LdMonoid m;
  m.size = n;
  m.comp = g;
  m.star.size = n;
  m.star.table.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                      0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m.star.table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(b)] =
          g.at(g.at(a, b), inv[static_cast<std::size_t>(a)]);
  return m;
}

std::vector<std::vector<int>> group_automorphisms(const BinTable& g) {
  detail::HomSearcher searcher(g.size, g.size, {{&g.table, &g.table}});
  return searcher.all();
}

std::vector<std::vector<int>> ld_automorphisms(const LdMonoid& m) {
  detail::HomSearcher searcher(
      m.size, m.size,
      {{&m.comp.table, &m.comp.table}, {&m.star.table, &m.star.table}});
  return searcher.all();
}

BinTable cyclic_group(int n) {
  if (n <= 0) throw InvalidSizeError("cyclic_group: n must be positive");
  BinTable t;
  t.size = n;
  t.table.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t.table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(b)] = (a + b) % n;
  return t;
}

BinTable symmetric_group(int n) {
  if (n < 1 || n > 5) throw InvalidSizeError("symmetric_group: need 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  BinTable t;
  t.size = order;
  t.table.resize(static_cast<std::size_t>(order) *
                 static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      std::vector<int> ab(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        ab[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(
                    x)])];
      const auto it = std::find(perms.begin(), perms.end(), ab);
      t.table[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
              static_cast<std::size_t>(b)] =
          static_cast<int>(it - perms.begin());
    }
  }
  return t;
}

BinTable dihedral_group(int n) {
  if (n < 1) throw InvalidSizeError("dihedral_group: n must be positive");
  const int order = 2 * n;
  BinTable t;
  t.size = order;
  t.table.resize(static_cast<std::size_t>(order) *
                 static_cast<std::size_t>(order));
  // r^i s^j with index i + n*j; s r = r^-1 s.
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          const int i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
          const int j = (j1 + j2) % 2;
          t.table[static_cast<std::size_t>(i1 + n * j1) *
                      static_cast<std::size_t>(order) +
                  static_cast<std::size_t>(i2 + n * j2)] = i + n * j;
        }
  return t;
}

BinTable quaternion_group() {
  // Units 1,i,j,k indexed 0..3; element index = 2*unit + sign.
  // unit_mul[u][v] -> (unit, sign) for the product of basis units.
  static constexpr int unit_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // i*j=k, j*k=i, k*i=j; i*i=j*j=k*k=-1; reversed order picks up a sign.
  BinTable t;
  t.size = 8;
  t.table.resize(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, sa = a % 2;
      const int ub = b / 2, sb = b % 2;
      const int u = unit_mul[ua][ub];
      const int s = (sa + sb + sign_mul[ua][ub]) % 2;
      t.table[static_cast<std::size_t>(a) * 8 + static_cast<std::size_t>(b)] =
          2 * u + s;
    }
  return t;
}

}  // namespace qfw
