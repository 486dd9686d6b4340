#include "rsklab/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "rsklab/errors.hpp"

namespace rsklab {

Matrix::Matrix(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("matrix side must be nonnegative");
  cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  Matrix m(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    }
  }
  return m;
}

std::size_t Matrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
}

void Matrix::set(int i, int j, int value) {
  if (value < 0) throw std::invalid_argument("matrix entries must be nonnegative");
  cells_[index(i, j)] = value;
}

int Matrix::weight() const noexcept { return std::accumulate(cells_.begin(), cells_.end(), 0); }

std::vector<std::vector<int>> Matrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  }
  return out;
}

std::string Matrix::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i > 0) out += ';';
    for (int j = 0; j < n_; ++j) {
      if (j > 0) out += ',';
      out += std::to_string((*this)(i, j));
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = text.find(sep);
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    text.remove_prefix(pos + 1);
  }
}

int parse_entry(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
    throw ParseError("bad matrix entry '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Matrix Matrix::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty matrix text");
  std::vector<std::vector<int>> rows;
  for (auto row_text : split(text, ';')) {
    auto& row = rows.emplace_back();
    for (auto token : split(row_text, ',')) row.push_back(parse_entry(token));
  }
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw ParseError("matrix must be square: got " + std::to_string(rows.size()) +
                       " rows and a row of length " + std::to_string(row.size()));
    }
  }
  return from_rows(rows);
}

Biword::Biword(std::vector<BiwordLetter> letters) : letters_(std::move(letters)) {
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (letters_[k].top < 1 || letters_[k].bottom < 1) {
      throw std::invalid_argument("biword letters must be positive");
    }
    if (k > 0 && letters_[k] < letters_[k - 1]) {
      throw std::invalid_argument("biword must be lexicographically sorted");
    }
  }
}

std::vector<int> Biword::tops() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.top);
  return out;
}

std::vector<int> Biword::bottoms() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.bottom);
  return out;
}

Biword to_biword(const Matrix& m) {
  std::vector<BiwordLetter> letters;
  letters.reserve(static_cast<std::size_t>(m.weight()));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      for (int c = 0; c < m(i, j); ++c) letters.push_back({i + 1, j + 1});
    }
  }
  return Biword(std::move(letters));
}

Matrix from_biword(const Biword& b, int n) {
  Matrix m(n);
  for (const auto& l : b.letters()) {
    if (l.top > n || l.bottom > n) throw std::out_of_range("biword letter outside matrix");
    m.add(l.top - 1, l.bottom - 1, 1);
  }
  return m;
}

std::int64_t inversion_count(const Matrix& m) {
  // For each cell, multiply by the weight strictly below and strictly left.
  // below_left[j] accumulates column sums of rows already passed (from the
  // bottom), prefix-summed over columns < j.
  const int n = m.size();
  std::vector<std::int64_t> col_totals(static_cast<std::size_t>(n), 0);
  std::int64_t total = 0;
  for (int i = n - 1; i >= 0; --i) {
    std::int64_t left = 0;
    for (int j = 0; j < n; ++j) {
      total += static_cast<std::int64_t>(m(i, j)) * left;
      left += col_totals[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < n; ++j) col_totals[static_cast<std::size_t>(j)] += m(i, j);
  }
  return total;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.size());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) t.set(j, i, m(i, j));
  }
  return t;
}

bool is_symmetric(const Matrix& m) {
  for (int i = 0; i < m.size(); ++i) {
    for (int j = i + 1; j < m.size(); ++j) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

bool is_hankel(const Matrix& m) {
  for (int i = 1; i < m.size(); ++i) {
    for (int j = 0; j + 1 < m.size(); ++j) {
      if (m(i, j) != m(i - 1, j + 1)) return false;
    }
  }
  return true;
}

Matrix hankel_from_params(const HankelParams& p) {
  if (p.values.size() % 2 == 0) {
    throw std::invalid_argument("Hankel parameter count must be odd (2n - 1)");
  }
  const int n = p.side();
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.set(i, j, p.values[static_cast<std::size_t>(i + j)]);
  }
  return m;
}

HankelParams antidiagonal_params(const Matrix& m) {
  if (!is_hankel(m)) throw std::invalid_argument("matrix is not Hankel");
  const int n = m.size();
  if (n == 0) return {};
  HankelParams p;
  p.values.resize(static_cast<std::size_t>(2 * n - 1));
  for (int t = 0; t < 2 * n - 1; ++t) {
    const int i = std::min(t, n - 1);
    p.values[static_cast<std::size_t>(t)] = m(i, t - i);
  }
  return p;
}

Matrix permutation_matrix(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  Matrix m(n);
  std::vector<bool> seen(word.size(), false);
  for (int i = 0; i < n; ++i) {
    const int v = word[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("word is not a permutation of 1..N");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    m.set(i, v - 1, 1);
  }
  return m;
}

}  // namespace rsklab
