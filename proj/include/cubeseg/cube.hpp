#ifndef CUBESEG_CUBE_HPP
#define CUBESEG_CUBE_HPP

// Vertex sets of the binary n-cube and q-dimensional subcube counting.
//
// Vertex x = (x_{n-1}, ..., x_1, x_0) is the integer sum x_r 2^r, so
// coordinate r is bit r. A VertexSet stores its members as an indicator
// bitstring of length 2^n: position p lives in word p / 64, bit p % 64.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubeseg/combinations.hpp"
#include "cubeseg/errors.hpp"
#include "cubeseg/weights.hpp"

#ifndef CUBESEG_MAX_DIM
#define CUBESEG_MAX_DIM 20
#endif

namespace cubeseg {

inline constexpr int kMaxDim = CUBESEG_MAX_DIM;
static_assert(kMaxDim >= 1 && kMaxDim <= 32, "CUBESEG_MAX_DIM must lie in [1, 32]");

inline void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw RangeError("dimension " + std::to_string(dim) + " outside [1, " +
                     std::to_string(kMaxDim) + "]");
  }
}

class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  explicit VertexSet(int dim) : dim_((check_dim(dim), dim)), words_(word_count(dim), 0) {}

  VertexSet(int dim, std::span<const Vertex> members) : VertexSet(dim) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet from_words(int dim, std::vector<Word> words) {
    VertexSet s(dim);
    if (words.size() != s.words_.size()) {
      throw UsageError("indicator length does not match dimension");
    }
    words.back() &= s.last_word_mask();
    s.words_ = std::move(words);
    s.size_ = 0;
    for (Word w : s.words_) s.size_ += std::popcount(w);
    return s;
  }

  int dim() const noexcept { return dim_; }
  std::uint64_t universe_size() const noexcept { return std::uint64_t{1} << dim_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::span<const Word> words() const noexcept { return words_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_size() && ((words_[v / kWordBits] >> (v % kWordBits)) & 1u);
  }

  // Returns true if v was not yet a member.
  bool insert(Vertex v) {
    if (v >= universe_size()) {
      throw RangeError("vertex " + std::to_string(v) + " outside the " +
                       std::to_string(dim_) + "-cube");
    }
    Word& w = words_[v / kWordBits];
    const Word bit = Word{1} << (v % kWordBits);
    if (w & bit) return false;
    w |= bit;
    ++size_;
    return true;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        fn(static_cast<Vertex>(wi * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool is_subset_of(const VertexSet& other) const {
    if (other.dim_ != dim_) return false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.dim_ == b.dim_ && a.words_ == b.words_;
  }

 private:
  static std::size_t word_count(int dim) {
    return dim >= 6 ? (std::size_t{1} << (dim - 6)) : 1;
  }
  Word last_word_mask() const {
    return dim_ >= 6 ? ~Word{0} : ((Word{1} << (1u << dim_)) - 1);
  }

  int dim_;
  std::vector<Word> words_;
  std::size_t size_ = 0;
};

/// A q-dimensional subcube: coordinates in `fixed_mask` are pinned to the
/// corresponding bits of `assignment`, the remaining q coordinates are free.
class Subcube {
 public:
  Subcube(int dim, Vertex fixed_mask, Vertex assignment)
      : dim_((check_dim(dim), dim)), fixed_(fixed_mask), assignment_(assignment) {
    const Vertex all = (Vertex{1} << dim) - 1;
    if (fixed_mask & ~all) throw RangeError("fixed coordinate outside the cube");
    if (assignment & ~fixed_mask) {
      throw UsageError("assignment defined outside the fixed coordinates");
    }
  }

  // Builds the subcube from explicit (coordinate, bit) pairs.
  static Subcube from_pairs(int dim, std::span<const std::pair<int, int>> fixed) {
    Vertex mask = 0;
    Vertex bits = 0;
    for (auto [coord, bit] : fixed) {
      if (coord < 0 || coord >= dim) throw RangeError("coordinate outside [0, n-1]");
      if (bit != 0 && bit != 1) throw UsageError("assignment bits must be 0 or 1");
      const Vertex m = Vertex{1} << coord;
      if (mask & m) throw UsageError("coordinate fixed twice");
      mask |= m;
      if (bit) bits |= m;
    }
    return Subcube(dim, mask, bits);
  }

  int dim() const noexcept { return dim_; }
  Vertex fixed_mask() const noexcept { return fixed_; }
  Vertex free_mask() const noexcept { return ((Vertex{1} << dim_) - 1) & ~fixed_; }
  Vertex assignment() const noexcept { return assignment_; }
  int dimension() const noexcept { return dim_ - std::popcount(fixed_); }

  template <class Fn>
  void for_each_vertex(Fn&& fn) const {
    const Vertex t = free_mask();
    Vertex sub = 0;
    do {
      fn(assignment_ | sub);
      sub = (sub - t) & t;
    } while (sub != 0);
  }

 private:
  int dim_;
  Vertex fixed_;
  Vertex assignment_;
};

/// The initial segment {0, 1, ..., k-1} of the n-cube.
inline VertexSet initial_segment(std::uint64_t k, int n) {
  check_dim(n);
  const std::uint64_t universe = std::uint64_t{1} << n;
  if (k < 1 || k > universe) {
    throw RangeError("initial segment size " + std::to_string(k) + " outside [1, 2^" +
                     std::to_string(n) + "]");
  }
  std::vector<VertexSet::Word> words(n >= 6 ? (std::size_t{1} << (n - 6)) : 1, 0);
  const std::size_t full = k / VertexSet::kWordBits;
  for (std::size_t i = 0; i < full; ++i) words[i] = ~VertexSet::Word{0};
  if (const unsigned rem = k % VertexSet::kWordBits; rem != 0) {
    words[full] = (VertexSet::Word{1} << rem) - 1;
  }
  return VertexSet::from_words(n, std::move(words));
}

inline VertexSet subcube_vertices(const Subcube& c) {
  VertexSet out(c.dim());
  c.for_each_vertex([&](Vertex v) { out.insert(v); });
  return out;
}

namespace detail {

// Word whose bit b is set iff position (64 * word_index + b) has bit r set.
inline VertexSet::Word coordinate_word(std::size_t word_index, int r) {
  static constexpr VertexSet::Word kLow[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  if (r < 6) return kLow[r];
  return ((word_index >> (r - 6)) & 1u) ? ~VertexSet::Word{0} : 0;
}

}  // namespace detail

/// Returns (S(r,0), S(r,1)): the members with x_r = 0 and x_r = 1.
inline std::pair<VertexSet, VertexSet> split(const VertexSet& s, int r) {
  if (r < 0 || r >= s.dim()) {
    throw RangeError("split coordinate " + std::to_string(r) + " outside [0, " +
                     std::to_string(s.dim() - 1) + "]");
  }
  auto words = s.words();
  std::vector<VertexSet::Word> zero(words.size()), one(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const VertexSet::Word m = detail::coordinate_word(i, r);
    one[i] = words[i] & m;
    zero[i] = words[i] & ~m;
  }
  return {VertexSet::from_words(s.dim(), std::move(zero)),
          VertexSet::from_words(s.dim(), std::move(one))};
}

/// Visits every q-dimensional subcube of the n-cube. Free coordinate sets
/// come in lexicographic order; for each, the fixed assignments come in
/// increasing integer order.
template <class Fn>
void for_each_subcube(int n, int q, Fn&& fn) {
  check_dim(n);
  if (q < 0 || q > n) throw RangeError("subcube dimension outside [0, n]");
  const Vertex all = (Vertex{1} << n) - 1;
  std::vector<int> free_coords(static_cast<std::size_t>(q));
  first_combination<int>(free_coords);
  do {
    Vertex free_mask = 0;
    for (int t : free_coords) free_mask |= Vertex{1} << t;
    const Vertex fixed = all & ~free_mask;
    Vertex assignment = 0;
    do {
      fn(Subcube(n, fixed, assignment));
      assignment = (assignment - fixed) & fixed;
    } while (assignment != 0);
  } while (next_combination<int>(free_coords, n));
}

/// m_q(S) by testing every vertex of every q-subcube for membership.
inline Count count_subcubes_naive(const VertexSet& s, int q) {
  if (q < 0 || q > s.dim()) throw RangeError("q outside [0, dim]");
  if (q < 64 && s.size() < (std::uint64_t{1} << q)) return 0;
  Count total = 0;
  for_each_subcube(s.dim(), q, [&](const Subcube& c) {
    bool inside = true;
    const Vertex t = c.free_mask();
    Vertex sub = 0;
    do {
      if (!s.contains(c.assignment() | sub)) {
        inside = false;
        break;
      }
      sub = (sub - t) & t;
    } while (sub != 0);
    if (inside) ++total;
  });
  return total;
}

namespace detail {

// dst[p] = src[p + shift] over the indicator bitstring; positions that run
// off the end read as zero.
inline void shift_down(std::span<const VertexSet::Word> src, std::span<VertexSet::Word> dst,
                       std::uint64_t shift) {
  const std::size_t n = src.size();
  const std::size_t word_shift = shift / VertexSet::kWordBits;
  const unsigned bit_shift = shift % VertexSet::kWordBits;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + word_shift;
    VertexSet::Word w = 0;
    if (j < n) {
      w = src[j] >> bit_shift;
      if (bit_shift != 0 && j + 1 < n) w |= src[j + 1] << (VertexSet::kWordBits - bit_shift);
    }
    dst[i] = w;
  }
}

}  // namespace detail

/// m_q(S) by bit-parallel folding. For each free set T the indicator A is
/// folded as A <- A & (A >> 2^t) for t in T; a surviving position p with
/// p & T == 0 is the base of a q-subcube inside S.
inline Count count_subcubes_bitparallel(const VertexSet& s, int q) {
  const int n = s.dim();
  if (q < 0 || q > n) throw RangeError("q outside [0, dim]");
  if (q == 0) return s.size();
  if (q < 64 && s.size() < (std::uint64_t{1} << q)) return 0;

  const auto words = s.words();
  const std::size_t nw = words.size();
  std::vector<VertexSet::Word> acc(nw), tmp(nw);
  std::vector<int> free_coords(static_cast<std::size_t>(q));
  first_combination<int>(free_coords);
  Count total = 0;
  do {
    std::copy(words.begin(), words.end(), acc.begin());
    Vertex free_mask = 0;
    for (int t : free_coords) {
      free_mask |= Vertex{1} << t;
      detail::shift_down(acc, tmp, std::uint64_t{1} << t);
      for (std::size_t i = 0; i < nw; ++i) acc[i] &= tmp[i];
    }
    // Positions whose low six bits avoid T, and words whose index avoids T >> 6.
    VertexSet::Word low_pattern = 0;
    for (unsigned b = 0; b < 64; ++b) {
      if ((b & free_mask) == 0) low_pattern |= VertexSet::Word{1} << b;
    }
    const Vertex high = free_mask >> 6;
    for (std::size_t i = 0; i < nw; ++i) {
      if ((i & high) == 0) total += std::popcount(acc[i] & low_pattern);
    }
  } while (next_combination<int>(free_coords, n));
  return total;
}

enum class Kernel { naive, bitparallel };

inline Count count_subcubes(const VertexSet& s, int q, Kernel kernel = Kernel::bitparallel) {
  return kernel == Kernel::naive ? count_subcubes_naive(s, q) : count_subcubes_bitparallel(s, q);
}

/// Three-term bound on m_q(S) along coordinate r: the light side S(r,b)
/// has at most as many members as the heavy side S(r,1-b), ties going to
/// b = 1.
struct DecompositionReport {
  int r = 0;
  int b = 1;
  Count mq_total = 0;
  Count mq_heavy = 0;
  Count mq_light = 0;
  Count mq1_light = 0;
  Count bound = 0;
  bool exact = false;
};

inline DecompositionReport three_term_report(const VertexSet& s, int q, int r,
                                             Kernel kernel = Kernel::bitparallel) {
  if (q < 1 || q > s.dim()) throw RangeError("three-term report needs 1 <= q <= dim");
  auto [zero, one] = split(s, r);
  if (zero.empty() || one.empty()) {
    throw DegenerateSplit("coordinate " + std::to_string(r) + " does not separate the set");
  }
  DecompositionReport rep;
  rep.r = r;
  rep.b = one.size() <= zero.size() ? 1 : 0;
  const VertexSet& light = rep.b == 1 ? one : zero;
  const VertexSet& heavy = rep.b == 1 ? zero : one;
  rep.mq_total = count_subcubes(s, q, kernel);
  rep.mq_heavy = count_subcubes(heavy, q, kernel);
  rep.mq_light = count_subcubes(light, q, kernel);
  rep.mq1_light = count_subcubes(light, q - 1, kernel);
  rep.bound = checked_add(checked_add(rep.mq_heavy, rep.mq_light), rep.mq1_light);
  rep.exact = rep.mq_total == rep.bound;
  return rep;
}

}  // namespace cubeseg

#endif  // CUBESEG_CUBE_HPP
