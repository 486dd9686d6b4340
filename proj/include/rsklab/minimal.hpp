#pragma once

#include <cstdint>
#include <vector>

#include "rsklab/matrix.hpp"
#include "rsklab/partition.hpp"

namespace rsklab {

/// How the column multiplicities r_k are distributed over paired
/// anti-diagonals. With 1-based anti-diagonal labels s_2..s_{2n}, the pairs
/// satisfy s_{k+1} + s_{2n-k+1} = r_k for 1 <= k <= n-1, and s_{n+1} = r_n.
struct SplitChoice {
  /// s_2, the (1,1) corner value; s_{2n} receives r_1 - end_split.
  int end_split = 0;
  /// Entry k-2 covers the pair for r_k, k = 2..n-1: true puts ceil(r_k/2) on
  /// the lower anti-diagonal s_{k+1}, false puts floor(r_k/2) there.
  /// Ignored for even r_k.
  std::vector<bool> ceil_on_lower;
};

/// Anti-diagonal values for one split. Throws std::invalid_argument if the
/// choice does not fit the partition.
HankelParams split_params(const Partition& p, const SplitChoice& choice);

/// Every distinct split: r_1 + 1 end splits times two orders for each odd
/// r_k with 2 <= k <= n-1. A one-part partition has a single split.
std::vector<SplitChoice> enumerate_splits(const Partition& p);

/// (r_1 + 1) * prod_{k=2}^{n-1} (r_k odd ? 2 : 1), or 1 when n == 1.
std::size_t candidate_count(const Partition& p);

/// Hankel matrices for every split, sorted, without duplicates. Their RSK
/// shape is not assumed to be `p`; callers verify that.
std::vector<Matrix> minimal_hankel_candidates(const Partition& p);

struct TwoRowMinimal {
  std::int64_t min_inversions = 0;
  std::vector<Matrix> matrices;
};

/// Minimal matrices of shape (l1, l2): [[k, l2], [l2, l1 - l2 - k]] for
/// 0 <= k <= l1 - l2, all with l2^2 inversions.
TwoRowMinimal two_row_minimal(int l1, int l2);

/// C(x, 2), taken as 0 for x < 2.
std::int64_t choose2(std::int64_t x);

/// Closed-form conjectured minimum:
///   sum_i (floor(i/2) + 1) C(c_i, 2) + sum_{i odd} sum_{j even} C(c_i + c_j - n, 2)
/// where c = conjugate(p), indices are 1-based and n = p.length().
std::int64_t minimal_inversion_formula(const Partition& p);

}  // namespace rsklab
