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

#ifndef QFW_HOM_SEARCH_HPP
#define QFW_HOM_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace qfw::detail {

/// Backtracking search for injective maps img : [0,ns) -> [0,nt) that
/// preserve every listed pair of operation tables:
///   img[s(x,y)] == t(img[x], img[y])  for all assigned x, y.
///
/// A partial assignment is closed under forcing: once x and y are mapped,
/// the image of s(x,y) is determined and assigned immediately, which prunes
/// hard on tables whose products revisit few elements. Elements are chosen
/// smallest-index-first and candidate targets ascending, so solutions are
/// produced in lexicographic image order and the first one found is the
/// lexicographically least.
///
/// Intended for desk-scale structures (nt <= 64).
class HomSearcher {
 public:
  // Each pair is (source table, target table), flattened row-major with the
  // respective sizes.
  HomSearcher(int ns, int nt,
              std::vector<std::pair<const std::vector<int>*,
                                    const std::vector<int>*>>
                  tables)
      : ns_(ns), nt_(nt), tables_(std::move(tables)) {}

  /// Lexicographically least total map, if any.
  std::optional<std::vector<int>> first() {
    std::optional<std::vector<int>> found;
    run([&](const std::vector<int>& img) {
      found = img;
      return true;
    });
    return found;
  }

  /// All solutions, in lexicographic image order.
  std::vector<std::vector<int>> all() {
    std::vector<std::vector<int>> out;
    run([&](const std::vector<int>& img) {
      out.push_back(img);
      return false;
    });
    return out;
  }

 private:
  int src_at(const std::vector<int>& t, int x, int y) const {
    return t[static_cast<std::size_t>(x) * static_cast<std::size_t>(ns_) +
             static_cast<std::size_t>(y)];
  }
  int tgt_at(const std::vector<int>& t, int x, int y) const {
    return t[static_cast<std::size_t>(x) * static_cast<std::size_t>(nt_) +
             static_cast<std::size_t>(y)];
  }

  // Assign img[x] = w and propagate all product constraints. Returns false
  // on conflict; assignments made stay on the trail for the caller to undo.
  bool assign(int x, int w) {
    if (img_[static_cast<std::size_t>(x)] >= 0)
      return img_[static_cast<std::size_t>(x)] == w;
    const std::uint64_t bit = std::uint64_t{1} << w;
    if (used_ & bit) return false;
    img_[static_cast<std::size_t>(x)] = w;
    used_ |= bit;
    trail_.push_back(x);
    // Live index loop: elements forced below are revisited as they are
    // appended, which closes the constraint set.
    for (std::size_t i = 0; i < trail_.size(); ++i) {
      const int y = trail_[i];
      const int wy = img_[static_cast<std::size_t>(y)];
      for (const auto& [src, tgt] : tables_) {
        if (!assign(src_at(*src, x, y), tgt_at(*tgt, w, wy))) return false;
        if (!assign(src_at(*src, y, x), tgt_at(*tgt, wy, w))) return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int x = trail_.back();
      trail_.pop_back();
      used_ &= ~(std::uint64_t{1} << img_[static_cast<std::size_t>(x)]);
      img_[static_cast<std::size_t>(x)] = -1;
    }
  }

  // emit returns true to stop the search.
  bool dfs(const std::function<bool(const std::vector<int>&)>& emit) {
    int x = -1;
    for (int i = 0; i < ns_; ++i) {
      if (img_[static_cast<std::size_t>(i)] < 0) {
        x = i;
        break;
      }
    }
    if (x < 0) return emit(img_);
    for (int w = 0; w < nt_; ++w) {
      const std::size_t mark = trail_.size();
      if (assign(x, w) && dfs(emit)) return true;
      undo_to(mark);
    }
    return false;
  }

  void run(const std::function<bool(const std::vector<int>&)>& emit) {
    if (ns_ > nt_) return;  // no injective map
    img_.assign(static_cast<std::size_t>(ns_), -1);
    used_ = 0;
    trail_.clear();
    dfs(emit);
  }

  int ns_;
  int nt_;
  std::vector<std::pair<const std::vector<int>*, const std::vector<int>*>>
      tables_;
  std::vector<int> img_;
  std::uint64_t used_ = 0;
  std::vector<int> trail_;
};

}  // namespace qfw::detail

#endif  // QFW_HOM_SEARCH_HPP
