#pragma once

#include <cstddef>
#include <vector>

namespace prufer::detail {

/// Binary indexed tree over 0/1 flags with order-statistic lookup.
class Fenwick {
 public:
  explicit Fenwick(std::size_t size) : tree_(size + 1, 0) {
    while (top_ * 2 <= size) top_ *= 2;
  }

  void add(std::size_t index, int delta) {
    for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }

  /// Number of set flags at positions < index.
  int prefix(std::size_t index) const {
    int sum = 0;
    for (std::size_t i = index; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

  /// Position of the rank-th set flag (rank counted from 1).
  std::size_t select(int rank) const {
    std::size_t pos = 0;
    for (std::size_t step = top_; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] < rank) {
        pos += step;
        rank -= tree_[pos];
      }
    }
    return pos;
  }

 private:
  std::vector<int> tree_;
  std::size_t top_ = 1;
};

}  // namespace prufer::detail
