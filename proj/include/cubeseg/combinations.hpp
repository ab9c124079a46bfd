#ifndef CUBESEG_COMBINATIONS_HPP
#define CUBESEG_COMBINATIONS_HPP

#include <cstddef>
#include <numeric>
#include <span>

namespace cubeseg {

// Fills c with the first k-combination {0, 1, ..., k-1}.
template <class Int>
void first_combination(std::span<Int> c) {
  std::iota(c.begin(), c.end(), Int{0});
}

// Advances c (strictly increasing, drawn from [0, n)) to its lexicographic
// successor. Returns false and leaves c unspecified after the last one.
template <class Int>
bool next_combination(std::span<Int> c, Int n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    // Position i may hold at most n - k + i.
    if (c[i] < n - static_cast<Int>(k - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace cubeseg

#endif  // CUBESEG_COMBINATIONS_HPP
