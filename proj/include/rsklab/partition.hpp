#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rsklab {

/// An integer partition stored as its positive parts in weakly decreasing
/// order. No trailing zeros are kept, so length() is always the number of
/// nonzero parts. The default-constructed value is the empty partition.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing with
  /// every part >= 1.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// 0-based part access; returns 0 past the last part.
  int part(int i) const noexcept {
    return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// "4,2,2,1"; the empty partition renders as "".
  std::string to_string() const;

  /// Parses "4,2,2,1". Whitespace around parts is ignored.
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Partition of the transposed Young diagram.
Partition conjugate(const Partition& p);

/// r_i = p_i - p_{i+1} for i < n and r_n = p_n (0-based vector of length n).
/// r_i counts the columns of height i in the diagram.
std::vector<int> column_multiplicities(const Partition& p);

/// Inverse of column_multiplicities: part k is the sum of r_i for i >= k.
/// Trailing zero parts (from trailing zero multiplicities) are dropped.
Partition from_column_multiplicities(std::span<const int> r);

/// Every partition of `weight` with exactly `exact_parts` positive parts,
/// in lexicographically decreasing order. Empty when exact_parts > weight.
std::vector<Partition> enumerate_partitions(int weight, int exact_parts);

}  // namespace rsklab
