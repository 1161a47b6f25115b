#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ivc::detail {

/// Algorithm X over a small universe. Picks the uncovered item with the
/// fewest usable sets (lowest item on ties) and tries those sets in index
/// order. Each set must list distinct items.
class ExactCover {
 public:
  enum class Outcome { Found, None, Unknown };

  ExactCover(std::size_t universe, std::vector<std::vector<std::size_t>> sets)
      : sets_(std::move(sets)), covered_(universe, false), by_item_(universe) {
    for (std::size_t s = 0; s < sets_.size(); ++s)
      for (std::size_t item : sets_[s]) by_item_[item].push_back(s);
  }

  /// max_nodes == 0 means no bound.
  Outcome solve(std::uint64_t max_nodes) {
    max_nodes_ = max_nodes;
    nodes_ = 0;
    chosen_.clear();
    std::fill(covered_.begin(), covered_.end(), false);
    const int r = recurse();
    if (r > 0) return Outcome::Found;
    return r == 0 ? Outcome::None : Outcome::Unknown;
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool usable(std::size_t s) const {
    for (std::size_t item : sets_[s])
      if (covered_[item]) return false;
    return true;
  }

  // 1 found, 0 exhausted, -1 node bound hit.
  int recurse() {
    if (max_nodes_ != 0 && nodes_ >= max_nodes_) return -1;
    ++nodes_;
    std::size_t best = covered_.size();
    std::size_t best_count = static_cast<std::size_t>(-1);
    for (std::size_t item = 0; item < covered_.size(); ++item) {
      if (covered_[item]) continue;
      std::size_t count = 0;
      for (std::size_t s : by_item_[item])
        if (usable(s)) ++count;
      if (count < best_count) {
        best = item;
        best_count = count;
        if (count == 0) break;
      }
    }
    if (best == covered_.size()) return 1;
    if (best_count == 0) return 0;
    for (std::size_t s : by_item_[best]) {
      if (!usable(s)) continue;
      for (std::size_t item : sets_[s]) covered_[item] = true;
      chosen_.push_back(s);
      const int r = recurse();
      if (r != 0) return r;
      chosen_.pop_back();
      for (std::size_t item : sets_[s]) covered_[item] = false;
    }
    return 0;
  }

  std::vector<std::vector<std::size_t>> sets_;
  std::vector<bool> covered_;
  std::vector<std::vector<std::size_t>> by_item_;
  std::vector<std::size_t> chosen_;
  std::uint64_t max_nodes_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace ivc::detail
