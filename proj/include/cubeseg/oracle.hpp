#ifndef CUBESEG_ORACLE_HPP
#define CUBESEG_ORACLE_HPP

// Exhaustive ground truth for m_q(k, n): scan every k-subset of the n-cube.
// Counting uses the naive kernel only, so the oracle shares no code with
// the bit-parallel kernel it is used to validate.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cubeseg/combinations.hpp"
#include "cubeseg/cube.hpp"
#include "cubeseg/errors.hpp"
#include "cubeseg/weights.hpp"

namespace cubeseg {

inline constexpr std::uint64_t kDefaultOracleBudget = 20'000'000;
inline constexpr std::size_t kDefaultArgmaxCap = 4;

struct OracleResult {
  int n = 0;
  std::uint64_t k = 0;
  int q = 0;
  Count max_count = 0;
  Count formula_value = 0;
  // Lexicographically smallest optimal sets, at most argmax_cap of them.
  std::vector<VertexSet> argmax_examples;
  std::uint64_t total_subsets_scanned = 0;
  bool matches_formula = false;
};

/// Number of k-subsets of the n-cube, saturating at UINT64_MAX.
inline std::uint64_t subset_count(int n, std::uint64_t k) {
  try {
    return binom(std::uint64_t{1} << n, static_cast<long long>(k));
  } catch (const OverflowError&) {
    return UINT64_MAX;
  }
}

inline OracleResult brute_force_mq(int n, std::uint64_t k, int q,
                                   std::size_t argmax_cap = kDefaultArgmaxCap,
                                   std::uint64_t budget = kDefaultOracleBudget) {
  check_dim(n);
  const std::uint64_t universe = std::uint64_t{1} << n;
  if (k < 1 || k > universe) throw RangeError("k outside [1, 2^n]");
  if (q < 0 || q > n) throw RangeError("q outside [0, n]");
  if (budget < 1) throw UsageError("budget must be positive");
  const std::uint64_t subsets = subset_count(n, k);
  if (subsets > budget) {
    throw BudgetExceeded("C(2^" + std::to_string(n) + ", " + std::to_string(k) +
                         ") subsets exceed the budget of " + std::to_string(budget));
  }

  OracleResult res;
  res.n = n;
  res.k = k;
  res.q = q;
  res.formula_value = prefix_hq(k, q);

  std::vector<Vertex> pick(k);
  first_combination<Vertex>(pick);
  bool have_best = false;
  do {
    VertexSet s(n, pick);
    const Count m = count_subcubes_naive(s, q);
    ++res.total_subsets_scanned;
    if (!have_best || m > res.max_count) {
      have_best = true;
      res.max_count = m;
      res.argmax_examples.clear();
    }
    if (m == res.max_count && res.argmax_examples.size() < argmax_cap) {
      res.argmax_examples.push_back(std::move(s));
    }
  } while (next_combination<Vertex>(pick, universe));

  res.matches_formula = res.max_count == res.formula_value;
  return res;
}

/// True iff S attains the initial-segment count for its size.
inline bool is_optimal_set(const VertexSet& s, int q) {
  if (s.empty()) throw UsageError("optimality is defined for non-empty sets");
  return count_subcubes_naive(s, q) == prefix_hq(s.size(), q);
}

}  // namespace cubeseg

#endif  // CUBESEG_ORACLE_HPP
