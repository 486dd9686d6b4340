#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rsklab/partition.hpp"

namespace rsklab {

/// 0-based (row, column) position in a Young diagram.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A filling of a Young diagram with positive integers, stored as ragged
/// rows. The constructor enforces the diagram shape (nonempty rows of weakly
/// decreasing length, positive entries) but not the SSYT ordering; use
/// is_ssyt() for that.
class Tableau {
 public:
  using Row = std::vector<int>;

  Tableau() = default;
  explicit Tableau(std::vector<Row> rows);

  const std::vector<Row>& rows() const noexcept { return rows_; }
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  bool empty() const noexcept { return rows_.empty(); }
  int weight() const noexcept;
  int at(Cell c) const { return rows_.at(c.row).at(c.col); }

  Partition shape() const;

  /// Schensted row insertion in place. `x` replaces the leftmost entry
  /// strictly greater than it and the displaced entry moves to the next row;
  /// an entry no smaller than the whole row is appended. Returns the new cell.
  Cell insert(int x);

  /// Inverse of insert(): removes the corner at the end of `row` and
  /// reverse-bumps upward. Returns the value ejected from the first row.
  int reverse_bump(int row);

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<Row> rows_;
};

enum class SsytViolationKind {
  kEmptyRow,
  kRowLongerThanPrevious,
  kNonPositiveEntry,
  kRowDecrease,
  kColumnNotStrict,
};

struct SsytViolation {
  SsytViolationKind kind;
  Cell cell;
};

/// First cell breaking the Young-diagram shape or SSYT ordering, scanning
/// row-major. Accepts raw rows so malformed shapes can be diagnosed too.
std::optional<SsytViolation> find_ssyt_violation(const std::vector<Tableau::Row>& rows);

bool is_ssyt(const std::vector<Tableau::Row>& rows);
inline bool is_ssyt(const Tableau& t) { return is_ssyt(t.rows()); }

/// SSYT whose entries are exactly 1..weight, each once.
bool is_syt(const Tableau& t);

/// Rows concatenated from the bottom row up to the first row.
std::vector<int> reading_word(const Tableau& t);

/// Cell (i,j) moves to (j,i). Only guaranteed to be an SSYT for SYT input.
Tableau transpose_tableau(const Tableau& t);

/// Calls `visit` for every SSYT of `shape` with entries in [1, max_entry].
/// Cells are filled row-major, trying entries in ascending order, so the
/// visiting order is deterministic.
void for_each_ssyt(const Partition& shape, int max_entry,
                   const std::function<void(const Tableau&)>& visit);

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry);

/// One row per line, entries separated by single spaces.
std::string render(const Tableau& t);

}  // namespace rsklab
