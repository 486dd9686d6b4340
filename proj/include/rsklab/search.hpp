#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rsklab/matrix.hpp"
#include "rsklab/partition.hpp"

namespace rsklab {

/// Size limits for the exhaustive searches. Exceeding them is a refusal
/// (CapExceeded), never a truncated answer.
struct SearchCaps {
  int max_weight_small_n = 12;  ///< applies when n <= 3
  int max_weight_large_n = 10;  ///< applies when n >= 4
  int max_n = 4;

  int weight_cap(int n) const noexcept { return n <= 3 ? max_weight_small_n : max_weight_large_n; }

  /// Throws CapExceeded if `p` is outside the caps.
  void check(const Partition& p) const;

  /// Same cap for every n.
  static SearchCaps uniform(int max_weight, int max_n = 4);
};

/// All n x n nonnegative matrices (n = p.length()) of weight |p| whose RSK
/// shape is p, sorted. Enumerates weak compositions of |p| into the n^2
/// cells, cutting branches whose heaviest right-down path already exceeds
/// p_1. The scan is split by the value of the (1,1) cell across `jobs`
/// threads.
std::vector<Matrix> enumerate_shape_class(const Partition& p, const SearchCaps& caps = {},
                                          int jobs = 1);

/// rsk_inverse over every ordered pair of SSYT of shape p with entries in
/// [1, n], sorted. As a set this must equal enumerate_shape_class(p).
std::vector<Matrix> enumerate_via_inverse_rsk(const Partition& p, const SearchCaps& caps = {});

struct MinimumResult {
  std::int64_t min_inversions = 0;
  std::vector<Matrix> minimal_set;  ///< sorted
  std::size_t class_size = 0;
};

MinimumResult minimum_over(const std::vector<Matrix>& shape_class);
MinimumResult brute_force_minimum(const Partition& p, const SearchCaps& caps = {}, int jobs = 1);

/// Outcome of checking one partition against the conjectured structure of
/// minimal matrices, the Hankel construction and the closed-form formula.
///
/// Conjecture or formula failures are findings and only show up in the
/// boolean fields. `oracle_disagreements` lists internal inconsistencies
/// between independent routes, which indicate a bug.
struct VerificationRecord {
  Partition partition;
  int n = 0;
  int weight = 0;

  bool skipped = false;
  std::string skip_reason;

  std::size_t class_size = 0;
  std::int64_t min_inversions_bruteforce = 0;
  std::vector<Matrix> minimal_set;
  bool all_minimal_symmetric = false;
  bool all_minimal_hankel = false;
  std::size_t candidate_count = 0;
  std::size_t candidates_with_other_shape = 0;
  bool candidate_set_equals_minimal_set = false;
  bool candidates_subset_of_minimal = false;
  std::int64_t formula_value = 0;
  bool formula_matches_bruteforce = false;
  bool enumeration_strategies_agree = false;
  std::vector<std::string> oracle_disagreements;
  double elapsed_seconds = 0.0;

  bool conjecture_holds() const noexcept { return all_minimal_symmetric && all_minimal_hankel; }
};

struct VerifyOptions {
  SearchCaps caps;
  int jobs = 1;
};

/// Never throws CapExceeded; a partition outside the caps yields a record
/// with skipped = true.
VerificationRecord verify_partition(const Partition& p, const VerifyOptions& options = {});

/// Partitions with a part count in `parts` and weight in
/// [min_weight, max_weight]. min_weight defaults to max_weight.
struct SweepRange {
  int max_weight = 0;
  std::vector<int> parts;
  std::optional<int> min_weight;
};

/// Weight ascending, then part count ascending, then lexicographically
/// decreasing partitions.
std::vector<Partition> sweep_partitions(const SweepRange& range);

/// One record per partition of sweep_partitions(range), in that order
/// regardless of options.jobs. `on_record` (if set) is called in order.
std::vector<VerificationRecord> sweep(
    const SweepRange& range, const VerifyOptions& options = {},
    const std::function<void(const VerificationRecord&)>& on_record = {},
    const std::function<bool(const Partition&)>& skip = {});

}  // namespace rsklab
