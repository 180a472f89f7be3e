#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace eirep::detail {

/// Union-find; the root of every class is its least member.
class Dsu {
 public:
  explicit Dsu(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
  }

  /// Dense class ids numbered by least member.
  std::vector<std::size_t> class_ids(std::size_t* count = nullptr) {
    std::vector<std::size_t> id(parent_.size());
    std::vector<std::size_t> root_id(parent_.size(), static_cast<std::size_t>(-1));
    std::size_t next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      auto r = find(i);
      if (root_id[r] == static_cast<std::size_t>(-1)) root_id[r] = next++;
      id[i] = root_id[r];
    }
    if (count) *count = next;
    return id;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace eirep::detail
