#pragma once

#include <functional>
#include <vector>

#include "mpap/paths.hpp"
#include "mpap/series.hpp"

namespace mpap {

// Counts of paths of each length by final height, with the per-height count
// split by the class of the last step (up / down / flat; the empty path is
// counted in the up slot, matching the generating-function convention).
struct CountTable {
  struct Split {
    Int up, down, flat;
    Int total() const { return up + down + flat; }
  };
  Family family;
  int n_max, k_max;
  std::vector<std::vector<Int>> counts;          // [n][k]
  std::vector<std::vector<Split>> by_class;      // [n][k]
};

// Depth-first generation of every valid path of exactly n steps whose final
// height is at most k_cap, in lexicographic step order (rises ascending).
// The visitor sees each path once; generation is streamed, nothing is
// retained. For M1/M2 the height of a length-n path never exceeds n, so
// k_cap < 0 defaults the cap to n; M1R/M2R have unbounded heights and the
// cap is mandatory.
void enumerate_paths(Family f, int n, int k_cap,
                     const std::function<void(const LatticePath&)>& visit);

std::vector<LatticePath> collect_paths(Family f, int n, int k_cap);

CountTable count_table(Family f, int n_max, int k_max);

// Number of paths with length + final height = n (no height cap).
Int antidiagonal_count(Family f, int n);

}  // namespace mpap
