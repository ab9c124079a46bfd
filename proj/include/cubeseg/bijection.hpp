#ifndef CUBESEG_BIJECTION_HPP
#define CUBESEG_BIJECTION_HPP

// Special bijections between integer intervals.
//
// A bijection P: I -> J between equal-size intervals with J.lo > I.lo is
// special when h(i) <= h(P(i)) for every i, with every inequality strict
// if the intervals are disjoint. Existence is guaranteed when I.lo = 0;
// witnesses are found by maximum bipartite matching.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubeseg/errors.hpp"
#include "cubeseg/weights.hpp"

namespace cubeseg {

/// The integer interval [lo:hi], bounds inclusive.
struct Interval {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  Interval() = default;
  Interval(std::uint64_t lo_, std::uint64_t hi_) : lo(lo_), hi(hi_) {
    if (lo_ > hi_) {
      throw UsageError("interval [" + std::to_string(lo_) + ":" + std::to_string(hi_) +
                       "] is empty");
    }
  }

  std::uint64_t size() const noexcept { return hi - lo + 1; }
  bool contains(std::uint64_t x) const noexcept { return lo <= x && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline bool intervals_overlap(const Interval& a, const Interval& b) noexcept {
  return a.lo <= b.hi && b.lo <= a.hi;
}

struct BijectionWitness {
  Interval source;
  Interval target;
  // (i, P(i)) sorted by i.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> map;
  bool strict_required = false;
};

namespace detail {

inline void check_bijection_pair(const Interval& source, const Interval& target) {
  if (source.size() != target.size()) {
    throw UsageError("intervals must have equal size");
  }
  if (target.lo <= source.lo) {
    throw UsageError("target interval must start after the source interval");
  }
}

// Kuhn's augmenting-path matching on the admissibility graph. Left vertex
// a is source.lo + a, right vertex b is target.lo + b; candidates are
// tried in increasing target order.
class SpecialMatcher {
 public:
  SpecialMatcher(const Interval& source, const Interval& target, bool strict)
      : size_(source.size()), strict_(strict),
        source_weight_(size_), target_weight_(size_),
        match_of_target_(size_, kUnmatched), match_of_source_(size_, kUnmatched),
        visit_stamp_(size_, 0) {
    for (std::size_t a = 0; a < size_; ++a) {
      source_weight_[a] = hamming_weight(source.lo + a);
      target_weight_[a] = hamming_weight(target.lo + a);
    }
  }

  bool solve() {
    // Greedy pass: smallest free admissible target first.
    for (std::size_t a = 0; a < size_; ++a) {
      for (std::size_t b = 0; b < size_; ++b) {
        if (match_of_target_[b] == kUnmatched && admissible(a, b)) {
          match_of_source_[a] = b;
          match_of_target_[b] = a;
          break;
        }
      }
    }
    for (std::size_t a = 0; a < size_; ++a) {
      if (match_of_source_[a] != kUnmatched) continue;
      ++stamp_;
      if (!augment(a)) return false;
    }
    return true;
  }

  std::size_t target_of(std::size_t a) const { return match_of_source_[a]; }

 private:
  static constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

  bool admissible(std::size_t a, std::size_t b) const {
    return strict_ ? source_weight_[a] < target_weight_[b]
                   : source_weight_[a] <= target_weight_[b];
  }

  // Iterative DFS for an augmenting path from left vertex root.
  bool augment(std::size_t root) {
    struct Frame {
      std::size_t left;
      std::size_t next;  // next right vertex to try
    };
    std::vector<Frame> stack{{root, 0}};
    std::vector<std::size_t> via;  // right vertex taken at each depth
    while (!stack.empty()) {
      Frame& f = stack.back();
      bool descended = false;
      while (f.next < size_) {
        const std::size_t b = f.next++;
        if (visit_stamp_[b] == stamp_ || !admissible(f.left, b)) continue;
        visit_stamp_[b] = stamp_;
        if (match_of_target_[b] == kUnmatched) {
          via.push_back(b);
          // Flip the alternating path.
          for (std::size_t d = 0; d < stack.size(); ++d) {
            match_of_source_[stack[d].left] = via[d];
            match_of_target_[via[d]] = stack[d].left;
          }
          return true;
        }
        via.push_back(b);
        stack.push_back({match_of_target_[b], 0});
        descended = true;
        break;
      }
      if (!descended) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
      }
    }
    return false;
  }

  std::size_t size_;
  bool strict_;
  std::vector<int> source_weight_;
  std::vector<int> target_weight_;
  std::vector<std::size_t> match_of_target_;
  std::vector<std::size_t> match_of_source_;
  std::vector<unsigned> visit_stamp_;
  unsigned stamp_ = 0;
};

}  // namespace detail

/// Searches for a special bijection source -> target. Returns nullopt when
/// none exists, which can only happen for source.lo > 0.
inline std::optional<BijectionWitness> find_special_bijection(const Interval& source,
                                                              const Interval& target) {
  detail::check_bijection_pair(source, target);
  const bool strict = !intervals_overlap(source, target);
  detail::SpecialMatcher matcher(source, target, strict);
  if (!matcher.solve()) return std::nullopt;
  BijectionWitness w{source, target, {}, strict};
  w.map.reserve(source.size());
  for (std::size_t a = 0; a < source.size(); ++a) {
    w.map.emplace_back(source.lo + a, target.lo + matcher.target_of(a));
  }
  return w;
}

/// Re-checks every witness invariant from scratch.
inline bool verify_special(const BijectionWitness& w) {
  const Interval& src = w.source;
  const Interval& dst = w.target;
  if (src.lo > src.hi || dst.lo > dst.hi) return false;
  if (src.hi - src.lo != dst.hi - dst.lo) return false;
  if (dst.lo <= src.lo) return false;
  const bool disjoint = src.hi < dst.lo;
  if (w.strict_required != disjoint) return false;

  const std::uint64_t s = src.hi - src.lo + 1;
  if (w.map.size() != s) return false;
  std::vector<char> source_seen(s, 0), target_seen(s, 0);
  auto weight = [](std::uint64_t x) {
    int c = 0;
    for (; x != 0; x >>= 1) c += static_cast<int>(x & 1u);
    return c;
  };
  for (const auto& [i, p] : w.map) {
    if (i < src.lo || i > src.hi || p < dst.lo || p > dst.hi) return false;
    if (source_seen[i - src.lo]++ || target_seen[p - dst.lo]++) return false;
    const int wi = weight(i);
    const int wp = weight(p);
    if (disjoint ? !(wi < wp) : !(wi <= wp)) return false;
  }
  return true;
}

template <class T>
struct GInequality {
  T lhs{};
  T rhs{};
  bool holds = false;
  bool strict = false;
};

/// Compares sum of g(h(i)) over I with sum of g(h(j)) over J, where g is
/// given by its values at weights 0, 1, 2, ...
template <class T>
GInequality<T> check_g_inequality(const Interval& source, const Interval& target,
                                  std::span<const T> g) {
  for (std::size_t m = 1; m < g.size(); ++m) {
    if (g[m] < g[m - 1]) throw UsageError("g must be non-decreasing");
  }
  auto sum_over = [&](const Interval& iv) {
    T acc{};
    for (std::uint64_t x = iv.lo;; ++x) {
      const auto w = static_cast<std::size_t>(hamming_weight(x));
      if (w >= g.size()) {
        throw UsageError("g table does not cover weight " + std::to_string(w));
      }
      acc += g[w];
      if (x == iv.hi) break;
    }
    return acc;
  };
  GInequality<T> out;
  out.lhs = sum_over(source);
  out.rhs = sum_over(target);
  out.holds = !(out.rhs < out.lhs);
  out.strict = out.lhs < out.rhs;
  return out;
}

struct ShiftedInequality {
  Count lhs = 0;
  Count rhs = 0;
  bool holds = false;
};

/// Sum of h_q(i) + h_{q-1}(i) over I against sum of h_q(j) over J, for
/// disjoint I before J.
inline ShiftedInequality check_shifted_hq_inequality(const Interval& source,
                                                     const Interval& target, int q) {
  if (q < 1) throw RangeError("q must be at least 1");
  if (intervals_overlap(source, target)) {
    throw UsageError("intervals overlap");
  }
  detail::check_bijection_pair(source, target);
  ShiftedInequality out;
  for (std::uint64_t i = source.lo;; ++i) {
    out.lhs = checked_add(out.lhs, checked_add(h_q(i, q), h_q(i, q - 1)));
    if (i == source.hi) break;
  }
  for (std::uint64_t j = target.lo;; ++j) {
    out.rhs = checked_add(out.rhs, h_q(j, q));
    if (j == target.hi) break;
  }
  out.holds = out.lhs <= out.rhs;
  return out;
}

}  // namespace cubeseg

#endif  // CUBESEG_BIJECTION_HPP
