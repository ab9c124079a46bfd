#ifndef CUBESEG_WEIGHTS_HPP
#define CUBESEG_WEIGHTS_HPP

// Hamming weights, exact binomial coefficients, h_q(i) = C(h(i), q) and
// its prefix sums. Every count in the library goes through these helpers,
// so they never wrap: overflow raises OverflowError.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cubeseg/errors.hpp"

namespace cubeseg {

using Count = std::uint64_t;
using Vertex = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("exact sum exceeds 64-bit range");
  }
  return out;
}

inline Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("exact product exceeds 64-bit range");
  }
  return out;
}

constexpr int hamming_weight(std::uint64_t i) noexcept { return std::popcount(i); }

/// Pascal triangle C(m, q) for 0 <= m <= max_m, 0 <= q <= max_q.
///
/// Entries that do not fit in a Count are remembered as overflowed and
/// reported on lookup; the table itself can always be built.
class BinomialTable {
 public:
  BinomialTable(int max_m, int max_q)
      : max_m_(non_negative(max_m)), max_q_(non_negative(max_q)),
        values_(static_cast<std::size_t>(max_m + 1) * (max_q + 1), 0),
        overflow_(values_.size(), false) {
    for (int m = 0; m <= max_m; ++m) {
      set(m, 0, 1, false);
      for (int q = 1; q <= max_q; ++q) {
        if (q > m) {
          set(m, q, 0, false);
          continue;
        }
        const std::size_t a = index(m - 1, q - 1);
        const std::size_t b = index(m - 1, q);
        Count sum = 0;
        bool bad = overflow_[a] || overflow_[b] ||
                   __builtin_add_overflow(values_[a], values_[b], &sum);
        set(m, q, bad ? 0 : sum, bad);
      }
    }
  }

  int max_m() const noexcept { return max_m_; }
  int max_q() const noexcept { return max_q_; }

  bool fits(int m, int q) const {
    check_bounds(m, q);
    return !overflow_[index(m, q)];
  }

  Count at(int m, int q) const {
    check_bounds(m, q);
    const std::size_t i = index(m, q);
    if (overflow_[i]) {
      throw OverflowError("C(" + std::to_string(m) + "," + std::to_string(q) +
                          ") exceeds 64-bit range");
    }
    return values_[i];
  }

 private:
  static int non_negative(int bound) {
    if (bound < 0) throw UsageError("BinomialTable bounds must be non-negative");
    return bound;
  }
  std::size_t index(int m, int q) const {
    return static_cast<std::size_t>(m) * (max_q_ + 1) + q;
  }
  void set(int m, int q, Count v, bool bad) {
    values_[index(m, q)] = v;
    overflow_[index(m, q)] = bad;
  }
  void check_bounds(int m, int q) const {
    if (m < 0 || q < 0 || m > max_m_ || q > max_q_) {
      throw RangeError("BinomialTable lookup (" + std::to_string(m) + "," +
                       std::to_string(q) + ") outside table");
    }
  }

  int max_m_;
  int max_q_;
  std::vector<Count> values_;
  std::vector<bool> overflow_;
};

namespace detail {

__extension__ using UInt128 = unsigned __int128;

inline constexpr int kSharedBinomialRows = 128;

inline const BinomialTable& shared_binomials() {
  static const BinomialTable table(kSharedBinomialRows, kSharedBinomialRows);
  return table;
}

// C(m, q) for rows beyond the shared table; q is already reduced to min(q, m-q).
inline Count binom_multiplicative(std::uint64_t m, std::uint64_t q) {
  UInt128 acc = 1;
  for (std::uint64_t j = 1; j <= q; ++j) {
    // acc * (m - q + j) / j stays integral at every step.
    acc = acc * (m - q + j) / j;
    if (acc > static_cast<UInt128>(UINT64_MAX)) {
      throw OverflowError("C(" + std::to_string(m) + "," + std::to_string(q) +
                          ") exceeds 64-bit range");
    }
  }
  return static_cast<Count>(acc);
}

}  // namespace detail

/// Exact C(m, q); zero when q < 0 or q > m.
inline Count binom(std::uint64_t m, long long q) {
  if (q < 0 || static_cast<std::uint64_t>(q) > m) return 0;
  if (m <= static_cast<std::uint64_t>(detail::kSharedBinomialRows)) {
    return detail::shared_binomials().at(static_cast<int>(m), static_cast<int>(q));
  }
  const std::uint64_t qq = static_cast<std::uint64_t>(q);
  return detail::binom_multiplicative(m, std::min(qq, m - qq));
}

/// C(h(i), q). Zero whenever q exceeds the weight of i.
inline Count h_q(std::uint64_t i, long long q) {
  return binom(static_cast<std::uint64_t>(hamming_weight(i)), q);
}

/// Sum of h_q(i) over 0 <= i < k, i.e. the subcube count of the initial
/// segment {0, ..., k-1}.
inline Count prefix_hq(std::uint64_t k, long long q) {
  if (k < 1) throw RangeError("prefix_hq requires k >= 1");
  if (q < 0) throw RangeError("prefix_hq requires q >= 0");
  // Weight-indexed lookup: only 65 distinct values of h_q can occur.
  Count by_weight[65];
  for (int w = 0; w <= 64; ++w) by_weight[w] = 0;
  const int max_weight = static_cast<int>(std::bit_width(k - 1));
  for (int w = 0; w <= max_weight; ++w) by_weight[w] = binom(w, q);
  Count total = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    total = checked_add(total, by_weight[hamming_weight(i)]);
  }
  return total;
}

}  // namespace cubeseg

#endif  // CUBESEG_WEIGHTS_HPP
