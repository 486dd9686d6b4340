#include "rsklab/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsklab {

Tableau::Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) {
      throw std::invalid_argument("tableau row lengths must be weakly decreasing");
    }
    for (int v : rows_[r]) {
      if (v < 1) throw std::invalid_argument("tableau entries must be positive");
    }
  }
}

int Tableau::weight() const noexcept {
  int w = 0;
  for (const auto& row : rows_) w += static_cast<int>(row.size());
  return w;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

Cell Tableau::insert(int x) {
  if (x < 1) throw std::invalid_argument("inserted entry must be positive");
  for (std::size_t r = 0;; ++r) {
    if (r == rows_.size()) {
      rows_.push_back(Row{x});
      return {static_cast<int>(r), 0};
    }
    auto& row = rows_[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {static_cast<int>(r), static_cast<int>(row.size()) - 1};
    }
    std::swap(*it, x);
  }
}

int Tableau::reverse_bump(int row) {
  if (row < 0 || row >= num_rows()) throw std::out_of_range("reverse_bump row out of range");
  auto r = static_cast<std::size_t>(row);
  if (r + 1 < rows_.size() && rows_[r + 1].size() == rows_[r].size()) {
    throw std::invalid_argument("reverse_bump requires a corner cell");
  }
  int x = rows_[r].back();
  rows_[r].pop_back();
  if (rows_[r].empty()) rows_.pop_back();
  while (r-- > 0) {
    auto& above = rows_[r];
    // Rightmost entry strictly smaller than x.
    auto it = std::lower_bound(above.begin(), above.end(), x);
    if (it == above.begin()) throw std::logic_error("reverse_bump on non-SSYT tableau");
    --it;
    std::swap(*it, x);
  }
  return x;
}

std::optional<SsytViolation> find_ssyt_violation(const std::vector<Tableau::Row>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const int ri = static_cast<int>(r);
    if (row.empty()) return SsytViolation{SsytViolationKind::kEmptyRow, {ri, 0}};
    if (r > 0 && row.size() > rows[r - 1].size()) {
      return SsytViolation{SsytViolationKind::kRowLongerThanPrevious,
                           {ri, static_cast<int>(rows[r - 1].size())}};
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int ci = static_cast<int>(c);
      if (row[c] < 1) return SsytViolation{SsytViolationKind::kNonPositiveEntry, {ri, ci}};
      if (c > 0 && row[c] < row[c - 1]) {
        return SsytViolation{SsytViolationKind::kRowDecrease, {ri, ci}};
      }
      if (r > 0 && row[c] <= rows[r - 1][c]) {
        return SsytViolation{SsytViolationKind::kColumnNotStrict, {ri, ci}};
      }
    }
  }
  return std::nullopt;
}

bool is_ssyt(const std::vector<Tableau::Row>& rows) {
  return !find_ssyt_violation(rows).has_value();
}

bool is_syt(const Tableau& t) {
  if (!is_ssyt(t)) return false;
  const int w = t.weight();
  std::vector<bool> seen(static_cast<std::size_t>(w) + 1, false);
  for (const auto& row : t.rows()) {
    for (int v : row) {
      if (v > w || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  return true;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(t.weight()));
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) {
    word.insert(word.end(), it->begin(), it->end());
  }
  return word;
}

Tableau transpose_tableau(const Tableau& t) {
  if (t.empty()) return {};
  std::vector<Tableau::Row> cols(t.rows().front().size());
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  }
  return Tableau(std::move(cols));
}

namespace {

struct SsytFiller {
  const std::vector<int>& lengths;
  int max_entry;
  const std::function<void(const Tableau&)>& visit;
  std::vector<Tableau::Row> rows;

  void fill(std::size_t r, std::size_t c) {
    if (r == lengths.size()) {
      visit(Tableau(rows));
      return;
    }
    if (c == static_cast<std::size_t>(lengths[r])) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    // Column below still needs lengths'-many strictly larger entries.
    int below = 0;
    for (std::size_t k = r + 1; k < lengths.size() && static_cast<std::size_t>(lengths[k]) > c; ++k) {
      ++below;
    }
    const int hi = max_entry - below;
    for (int v = lo; v <= hi; ++v) {
      rows[r].push_back(v);
      fill(r, c + 1);
      rows[r].pop_back();
    }
  }
};

}  // namespace

void for_each_ssyt(const Partition& shape, int max_entry,
                   const std::function<void(const Tableau&)>& visit) {
  if (shape.empty()) {
    visit(Tableau{});
    return;
  }
  if (max_entry < shape.length()) return;
  SsytFiller filler{shape.parts(), max_entry, visit, {}};
  filler.rows.resize(static_cast<std::size_t>(shape.length()));
  filler.fill(0, 0);
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::string render(const Tableau& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace rsklab
