#pragma once

// Independent reference computations shared by the test binaries. These
// avoid the library's algorithms on purpose: plain loops over explicit data.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Naive free reduction of a signed-letter word by repeated rescans.
inline std::vector<int> reduce_by_rescan(std::vector<int> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// All reduced words of length <= r over k letters, by expanding every
// unreduced word and reducing.
inline std::set<std::vector<int>> free_ball_by_words(int k, int r) {
  std::set<std::vector<int>> out;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 0; len <= r; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      out.insert(reduce_by_rescan(w));
      if (len == r) continue;
      for (int l = 1; l <= k; ++l) {
        for (int s : {l, -l}) {
          auto v = w;
          v.push_back(s);
          next.push_back(v);
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

inline bool is_square(std::int64_t x) {
  if (x < 0) return false;
  for (std::int64_t r = 0; r * r <= x; ++r)
    if (r * r == x) return true;
  return false;
}

}  // namespace oracle
