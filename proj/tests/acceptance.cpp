// Acceptance suite: one line per criterion, non-zero exit if any fails.
// Every check is exact integer or set comparison; there are no tolerances.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cubeseg/cubeseg.hpp"

namespace {

using namespace cubeseg;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> check;
};

Outcome fail(const std::string& why) { return {false, why}; }

Outcome oracle_equivalence() {
  long cases = 0;
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t k = 1; k <= (std::uint64_t{1} << n); ++k) {
      for (int q = 0; q <= n; ++q) {
        const OracleResult r = brute_force_mq(n, k, q);
        if (r.max_count != prefix_hq(k, q)) {
          std::ostringstream os;
          os << "n=" << n << " k=" << k << " q=" << q << ": brute force " << r.max_count
             << " vs prefix sum " << prefix_hq(k, q);
          return fail(os.str());
        }
        ++cases;
      }
    }
  }
  return {true, std::to_string(cases) + " (n, k, q) triples"};
}

Outcome closed_form() {
  const RecursionTable t = build_table(6, 2048);
  for (int q = 0; q <= 6; ++q) {
    for (std::uint32_t k = 1; k <= 2048; ++k) {
      if (t.value(q, k) != prefix_hq(k, q)) {
        return fail("F_" + std::to_string(q) + "(" + std::to_string(k) + ") differs");
      }
    }
  }
  return {true, "7 x 2048 entries"};
}

Outcome corollary() {
  const RecursionTable t = build_table(5, 2048);
  for (int q = 1; q <= 5; ++q) {
    for (std::uint32_t k = 2; k <= 2048; ++k) {
      if (!verify_corollary(q, k, t)) {
        return fail("q=" + std::to_string(q) + " k=" + std::to_string(k));
      }
    }
  }
  return {true, "q in [1,5], k in [2,2048]"};
}

Outcome first_order_equivalence() {
  const RecursionTable t = build_table(1, 2048);
  for (std::uint32_t k = 2; k <= 2048; ++k) {
    if (t.maximizers(1, k) != hypercubic_partitions(k)) return fail("k=" + std::to_string(k));
  }
  return {true, "k in [2,2048]"};
}

Outcome onlyif_failure() {
  const auto found = find_onlyif_counterexamples(3, 16);
  if (found.empty()) return fail("no counterexample for qmax=3, kmax=16");
  const auto it = std::find_if(found.begin(), found.end(),
                               [](const auto& c) { return c.q == 3 && c.k == 11; });
  if (it == found.end()) return fail("(q=3, k=11) not reported");
  const std::vector<std::uint32_t> expected = {1, 2};
  if (it->non_hypercubic_maximizers != expected) return fail("excess maximizers at (3, 11) differ");
  return {true, std::to_string(found.size()) + " records, (3, 11) excess {1, 2}"};
}

Outcome special_bijections() {
  long cases = 0;
  for (std::uint64_t s = 1; s <= 63; ++s) {
    for (std::uint64_t j0 = 1; j0 + s - 1 <= 63; ++j0) {
      const auto w = find_special_bijection({0, s - 1}, {j0, j0 + s - 1});
      if (!w || !verify_special(*w)) {
        return fail("s=" + std::to_string(s) + " j0=" + std::to_string(j0));
      }
      ++cases;
    }
  }
  std::mt19937_64 rng(1970);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t s = 1 + rng() % 1023;
    const std::uint64_t j0 = 1 + rng() % (1024 - s);
    const auto w = find_special_bijection({0, s - 1}, {j0, j0 + s - 1});
    if (!w || !verify_special(*w)) {
      return fail("random s=" + std::to_string(s) + " j0=" + std::to_string(j0));
    }
    ++cases;
  }
  return {true, std::to_string(cases) + " interval pairs"};
}

Outcome shifted_inequality() {
  long cases = 0;
  for (int q = 1; q <= 6; ++q) {
    for (std::uint64_t s = 1; s <= 32; ++s) {
      for (std::uint64_t j0 = s; j0 + s - 1 <= 63; ++j0) {
        const auto r = check_shifted_hq_inequality({0, s - 1}, {j0, j0 + s - 1}, q);
        if (!r.holds) {
          return fail("q=" + std::to_string(q) + " s=" + std::to_string(s) + " j0=" + std::to_string(j0));
        }
        ++cases;
      }
    }
  }
  return {true, std::to_string(cases) + " (I, J, q) cases"};
}

std::vector<Vertex> random_members(std::mt19937_64& rng, int dim) {
  std::bernoulli_distribution keep(std::uniform_real_distribution<double>(0.05, 0.95)(rng));
  std::vector<Vertex> out;
  for (Vertex v = 0; v < (Vertex{1} << dim); ++v) {
    if (keep(rng)) out.push_back(v);
  }
  return out;
}

Outcome kernel_equivalence() {
  std::mt19937_64 rng(2024);
  long comparisons = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 10);
    const VertexSet s(dim, random_members(rng, dim));
    for (int q = 0; q <= dim; ++q) {
      if (count_subcubes_naive(s, q) != count_subcubes_bitparallel(s, q)) {
        return fail("trial " + std::to_string(trial) + " dim=" + std::to_string(dim) +
                    " q=" + std::to_string(q));
      }
      ++comparisons;
    }
  }
  return {true, "250 sets, " + std::to_string(comparisons) + " comparisons"};
}

Outcome three_term_bound() {
  std::mt19937_64 rng(1990);
  int checked = 0;
  while (checked < 600) {
    const int dim = 2 + static_cast<int>(rng() % 8);
    const VertexSet s(dim, random_members(rng, dim));
    const int q = 1 + static_cast<int>(rng() % dim);
    const int r = static_cast<int>(rng() % dim);
    const auto [zero, one] = split(s, r);
    if (zero.empty() || one.empty()) continue;
    const DecompositionReport rep = three_term_report(s, q, r);
    if (rep.mq_total > rep.bound) return fail("bound violated at trial " + std::to_string(checked));
    ++checked;
  }

  struct Golden {
    std::vector<Vertex> members;
    Count total, bound;
    bool exact;
  };
  const Golden golden[] = {
      {{0, 1, 2, 3}, 4, 4, true},
      {{0, 3}, 0, 1, false},
      {{0, 1}, 1, 1, true},
  };
  for (const auto& g : golden) {
    const DecompositionReport rep = three_term_report(VertexSet(2, g.members), 1, 0);
    if (rep.mq_total != g.total || rep.bound != g.bound || rep.exact != g.exact) {
      return fail("hand-derived decomposition example differs");
    }
  }
  return {true, "600 random triples + 3 examples"};
}

Outcome pascal_shift() {
  long cases = 0;
  for (int ell = 0; ell <= 12; ++ell) {
    const std::uint64_t top = std::uint64_t{1} << ell;
    for (std::uint64_t i = 0; i < top; ++i) {
      for (int q = 1; q <= 6; ++q) {
        if (h_q(top + i, q) != h_q(i, q) + h_q(i, q - 1)) {
          return fail("l=" + std::to_string(ell) + " i=" + std::to_string(i) + " q=" + std::to_string(q));
        }
        ++cases;
      }
    }
  }
  return {true, std::to_string(cases) + " cases"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "initial segment is optimal (exhaustive, n <= 4)", 300, oracle_equivalence},
      {"AC2", "F_q(k) equals the h_q prefix sum (q <= 6, k <= 2048)", 60, closed_form},
      {"AC3", "hypercubic partitions are maximizers (q <= 5, k <= 2048)", 60, corollary},
      {"AC4", "q = 1 maximizers are exactly the hypercubic partitions", 60, first_order_equivalence},
      {"AC5", "only-if fails for q > 1 (qmax 3, kmax 16)", 60, onlyif_failure},
      {"AC6", "special bijections exist from [0:s-1]", 60, special_bijections},
      {"AC7", "shifted h_q inequality on disjoint intervals", 60, shifted_inequality},
      {"AC8", "naive and bit-parallel kernels agree", 300, kernel_equivalence},
      {"AC9", "three-term decomposition bound", 300, three_term_bound},
      {"AC10", "Pascal shift of h_q", 60, pascal_shift},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.time_limit_s) {
      o = fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %-5s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
