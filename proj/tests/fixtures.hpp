#pragma once

// Frozen figures used across the test suites: the generic T_7 ideal, its
// corner generator, the 7x7 digraph pattern, the 12x12 embedding block
// patterns and the T_7 normalising isometry.

#include <utility>
#include <vector>

namespace fixtures {

using Pair = std::pair<int, int>;

// Generic ideal of T_7 (row-by-row star transcription, 22 positions).
inline std::vector<Pair> t7_ideal() {
  return {
      {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7},
      {3, 6}, {3, 7},
      {4, 6}, {4, 7},
      {5, 6}, {5, 7},
      {6, 6}, {6, 7},
      {7, 7},
  };
}

// The four L-block corners of that ideal.
inline std::vector<Pair> t7_corners() { return {{1, 1}, {2, 2}, {6, 6}, {7, 7}}; }

// 7x7 digraph algebra star pattern (not transitively closed as printed).
inline std::vector<Pair> digraph7() {
  return {
      {1, 1},
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
      {3, 2}, {3, 3}, {3, 4}, {3, 6},
      {4, 2}, {4, 3}, {4, 4}, {4, 6},
      {5, 2}, {5, 5}, {5, 6},
      {6, 2}, {6, 3}, {6, 4}, {6, 5}, {6, 6},
      {7, 7},
  };
}

// 2x2 -> 12x12 refinement: positions of each 2x2 unit in the partitioned
// matrix (a = (1,1), b = (1,2), c = (2,1), d = (2,2)).
inline std::vector<Pair> refinement12(int i, int j) {
  std::vector<Pair> out;
  for (int t = 1; t <= 6; ++t) out.push_back({(i - 1) * 6 + t, (j - 1) * 6 + t});
  return out;
}

// 2x2 -> 12x12 standard: block-diagonal copies.
inline std::vector<Pair> standard12(int i, int j) {
  std::vector<Pair> out;
  for (int t = 0; t < 6; ++t) out.push_back({i + 2 * t, j + 2 * t});
  return out;
}

// Normalising partial isometry of D_7 in T_7: ones at (1,3),(2,7),(4,5).
inline std::vector<Pair> isometry7() { return {{1, 3}, {2, 7}, {4, 5}}; }

}  // namespace fixtures
