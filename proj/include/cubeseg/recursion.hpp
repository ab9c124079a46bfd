#ifndef CUBESEG_RECURSION_HPP
#define CUBESEG_RECURSION_HPP

// The max-recursion
//
//   F_q(1) = 0,
//   F_q(k) = max over 1 <= k' <= floor(k/2) of F_q(k') + F_q(k-k') + F_{q-1}(k'),
//
// with base row F_0(k) = k, evaluated bottom-up together with the full
// argmax set of every entry.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubeseg/errors.hpp"
#include "cubeseg/weights.hpp"

namespace cubeseg {

class RecursionTable {
 public:
  RecursionTable(int qmax, std::uint32_t kmax) : qmax_(qmax), kmax_(kmax) {
    if (qmax < 0) throw RangeError("qmax must be non-negative");
    if (kmax < 1) throw RangeError("kmax must be at least 1");
    const std::size_t rows = static_cast<std::size_t>(qmax) + 1;
    values_.assign(rows, std::vector<Count>(kmax + 1, 0));
    maximizers_.assign(rows, std::vector<std::vector<std::uint32_t>>(kmax + 1));
    for (std::uint32_t k = 1; k <= kmax; ++k) values_[0][k] = k;
    for (int q = 1; q <= qmax; ++q) fill_row(q);
  }

  int qmax() const noexcept { return qmax_; }
  std::uint32_t kmax() const noexcept { return kmax_; }

  Count value(int q, std::uint32_t k) const {
    check(q, k, 0, 1);
    return values_[q][k];
  }

  /// Every k' in [1, floor(k/2)] attaining F_q(k); ascending.
  const std::vector<std::uint32_t>& maximizers(int q, std::uint32_t k) const {
    check(q, k, 1, 2);
    return maximizers_[q][k];
  }

 private:
  void fill_row(int q) {
    auto& row = values_[q];
    const auto& prev = values_[q - 1];
    row[1] = 0;
    for (std::uint32_t k = 2; k <= kmax_; ++k) {
      Count best = 0;
      std::vector<std::uint32_t> arg;
      for (std::uint32_t kp = 1; kp <= k / 2; ++kp) {
        const Count v = checked_add(checked_add(row[kp], row[k - kp]), prev[kp]);
        if (arg.empty() || v > best) {
          best = v;
          arg.assign(1, kp);
        } else if (v == best) {
          arg.push_back(kp);
        }
      }
      row[k] = best;
      maximizers_[q][k] = std::move(arg);
    }
  }

  void check(int q, std::uint32_t k, int qmin, std::uint32_t kmin) const {
    if (q < qmin || q > qmax_ || k < kmin || k > kmax_) {
      throw RangeError("recursion query (q=" + std::to_string(q) + ", k=" + std::to_string(k) +
                       ") outside the table");
    }
  }

  int qmax_;
  std::uint32_t kmax_;
  std::vector<std::vector<Count>> values_;
  std::vector<std::vector<std::vector<std::uint32_t>>> maximizers_;
};

inline RecursionTable build_table(int qmax, std::uint32_t kmax) { return RecursionTable(qmax, kmax); }

inline std::vector<std::uint32_t> maximizers(int q, std::uint32_t k, const RecursionTable& table) {
  return table.maximizers(q, k);
}

namespace detail {

// Number of i in [0, k-1] with bit r set.
inline std::uint64_t bit_count_closed_form(std::uint64_t k, int r) {
  const std::uint64_t block = std::uint64_t{1} << (r + 1);
  const std::uint64_t half = std::uint64_t{1} << r;
  const std::uint64_t rem = k % block;
  return (k / block) * half + (rem > half ? rem - half : 0);
}

inline std::uint64_t bit_count_direct(std::uint64_t k, int r) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 0; i < k; ++i) c += (i >> r) & 1u;
  return c;
}

}  // namespace detail

/// Values k_1 in [1, floor(k/2)] such that (k - k_1, k_1) is a hypercubic
/// partition of k; ascending.
inline std::vector<std::uint32_t> hypercubic_partitions(std::uint32_t k) {
  if (k < 2) throw RangeError("hypercubic partitions need k >= 2");
  std::vector<std::uint32_t> out;
  for (int r = 0; r < 32 && (std::uint64_t{1} << r) < k; ++r) {
    const std::uint64_t c = detail::bit_count_closed_form(k, r);
    if (c != detail::bit_count_direct(k, r)) {
      throw std::logic_error("bit-count closed form disagrees with direct count");
    }
    if (c >= 1 && c <= k / 2) out.push_back(static_cast<std::uint32_t>(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct PartitionReport {
  std::uint32_t k = 0;
  int q = 0;
  std::vector<std::uint32_t> hypercubic;
  std::vector<std::uint32_t> maximizers;
  bool hypercubic_subset_of_maximizers = false;
  bool sets_equal = false;
};

inline PartitionReport partition_report(int q, std::uint32_t k, const RecursionTable& table) {
  PartitionReport rep;
  rep.k = k;
  rep.q = q;
  rep.maximizers = table.maximizers(q, k);
  rep.hypercubic = hypercubic_partitions(k);
  rep.hypercubic_subset_of_maximizers = std::includes(
      rep.maximizers.begin(), rep.maximizers.end(), rep.hypercubic.begin(), rep.hypercubic.end());
  rep.sets_equal = rep.maximizers == rep.hypercubic;
  return rep;
}

/// Every hypercubic k_1 attains the maximum in F_q(k).
inline bool verify_corollary(int q, std::uint32_t k, const RecursionTable& table) {
  return partition_report(q, k, table).hypercubic_subset_of_maximizers;
}

struct OnlyIfCounterexample {
  int q = 0;
  std::uint32_t k = 0;
  std::vector<std::uint32_t> non_hypercubic_maximizers;

  friend bool operator==(const OnlyIfCounterexample&, const OnlyIfCounterexample&) = default;
};

/// Lists every (q, k) whose maximizer set is strictly larger than the
/// hypercubic partitions of k, with the excess maximizers; ordered by (q, k).
inline std::vector<OnlyIfCounterexample> find_onlyif_counterexamples(const RecursionTable& table,
                                                                     int qmax, std::uint32_t kmax) {
  if (qmax < 1 || kmax < 2) throw RangeError("counterexample search needs qmax >= 1, kmax >= 2");
  std::vector<OnlyIfCounterexample> out;
  for (int q = 1; q <= qmax; ++q) {
    for (std::uint32_t k = 2; k <= kmax; ++k) {
      const auto& maxi = table.maximizers(q, k);
      const auto hyper = hypercubic_partitions(k);
      std::vector<std::uint32_t> excess;
      std::set_difference(maxi.begin(), maxi.end(), hyper.begin(), hyper.end(),
                          std::back_inserter(excess));
      if (!excess.empty()) out.push_back({q, k, std::move(excess)});
    }
  }
  return out;
}

inline std::vector<OnlyIfCounterexample> find_onlyif_counterexamples(int qmax, std::uint32_t kmax) {
  if (qmax < 1 || kmax < 2) throw RangeError("counterexample search needs qmax >= 1, kmax >= 2");
  return find_onlyif_counterexamples(build_table(qmax, kmax), qmax, kmax);
}

}  // namespace cubeseg

#endif  // CUBESEG_RECURSION_HPP
