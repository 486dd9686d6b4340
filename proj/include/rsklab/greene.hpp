#pragma once

#include <span>
#include <vector>

#include "rsklab/matrix.hpp"
#include "rsklab/partition.hpp"

namespace rsklab {

// Greene invariants computed by exhaustive search, with no use of row
// insertion. This is the independent oracle for RSK shapes.

struct GreeneLimits {
  /// Inputs heavier than this are refused with CapExceeded.
  int max_weight = 12;
};

/// Largest total size of k pairwise-disjoint weakly increasing subsequences
/// of the biword's bottom row (tops are already sorted, so this is also the
/// two-row notion).
int max_k_increasing(const Biword& b, int k, const GreeneLimits& limits = {});

/// Cumulative profile i_1, i_2, ... stopping at the first k with i_k equal to
/// the weight. Empty for the empty biword.
std::vector<int> greene_profile(const Biword& b, const GreeneLimits& limits = {});

/// Consecutive differences of the profile, i.e. the shape predicted by
/// Greene's theorem.
Partition greene_shape(const Biword& b, const GreeneLimits& limits = {});
Partition greene_shape(const Matrix& m, const GreeneLimits& limits = {});

/// Longest weakly increasing subsequence, returned as positions into `word`.
/// Among maximal ones, each element takes the earliest-ending predecessor
/// available at the time it is placed.
std::vector<std::size_t> longest_increasing_positions(std::span<const int> word);

/// Total size obtained by removing a longest weakly increasing subsequence
/// k times in a row. A lower bound for max_k_increasing that is not tight in
/// general.
int greedy_k_increasing(std::span<const int> word, int k);

}  // namespace rsklab
