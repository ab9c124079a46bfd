// Compares a few vertex sets of the 4-cube against the initial segment of
// the same size, then shows the three-term split of the optimum.

#include <cstdio>
#include <vector>

#include "cubeseg/cubeseg.hpp"

int main() {
  using namespace cubeseg;
  const int n = 4;
  const int q = 2;

  const std::vector<std::vector<Vertex>> candidates = {
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
      {0, 1, 2, 3, 8, 9, 10, 11, 12, 15},
      {0, 3, 5, 6, 9, 10, 12, 15, 1, 2},
  };
  for (const auto& members : candidates) {
    const VertexSet s(n, members);
    std::printf("|S| = %zu  m_%d(S) = %llu  optimum = %llu  optimal: %s\n", s.size(), q,
                static_cast<unsigned long long>(count_subcubes(s, q)),
                static_cast<unsigned long long>(prefix_hq(s.size(), q)),
                is_optimal_set(s, q) ? "yes" : "no");
  }

  const VertexSet best = initial_segment(10, n);
  for (int r = 0; r < n; ++r) {
    const auto rep = three_term_report(best, q, r);
    std::printf("r=%d light side b=%d: %llu <= %llu + %llu + %llu (%s)\n", r, rep.b,
                static_cast<unsigned long long>(rep.mq_total),
                static_cast<unsigned long long>(rep.mq_heavy),
                static_cast<unsigned long long>(rep.mq_light),
                static_cast<unsigned long long>(rep.mq1_light), rep.exact ? "exact" : "slack");
  }
  return 0;
}
