#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rsklab {

/// Dense n x n matrix of nonnegative integers. Indices are 0-based in the
/// API; biword letters derived from it are 1-based.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n);

  /// Throws std::invalid_argument for ragged, non-square or negative input.
  static Matrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const noexcept { return n_; }
  int operator()(int i, int j) const { return cells_[index(i, j)]; }
  void set(int i, int j, int value);
  void add(int i, int j, int delta) { set(i, j, (*this)(i, j) + delta); }

  int weight() const noexcept;
  const std::vector<int>& cells() const noexcept { return cells_; }
  std::vector<std::vector<int>> rows() const;

  /// "r1c1,r1c2;r2c1,r2c2".
  std::string to_string() const;
  static Matrix parse(std::string_view text);

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int i, int j) const;

  int n_ = 0;
  std::vector<int> cells_;
};

struct BiwordLetter {
  int top = 0;
  int bottom = 0;
  friend bool operator==(const BiwordLetter&, const BiwordLetter&) = default;
  friend auto operator<=>(const BiwordLetter&, const BiwordLetter&) = default;
};

/// Two-line array sorted lexicographically on (top, bottom).
class Biword {
 public:
  Biword() = default;
  /// Throws std::invalid_argument unless letters are positive and sorted.
  explicit Biword(std::vector<BiwordLetter> letters);

  const std::vector<BiwordLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::vector<int> tops() const;
  std::vector<int> bottoms() const;

  friend bool operator==(const Biword&, const Biword&) = default;

 private:
  std::vector<BiwordLetter> letters_;
};

/// Lists letter (i+1, j+1) exactly m(i,j) times, in sorted order.
Biword to_biword(const Matrix& m);

/// Throws std::out_of_range if a letter falls outside [1,n] x [1,n].
Matrix from_biword(const Biword& b, int n);

/// Sum of m(i,j) * m(k,l) over position pairs with i < k and j > l.
std::int64_t inversion_count(const Matrix& m);

Matrix transpose(const Matrix& m);
bool is_symmetric(const Matrix& m);
/// Constant along every anti-diagonal i + j.
bool is_hankel(const Matrix& m);

/// Anti-diagonal values of a Hankel matrix. values[t] is the common entry on
/// the anti-diagonal with 0-based index sum i + j = t, i.e. s_{t+2} in
/// 1-based notation. A side-n matrix has 2n - 1 values.
struct HankelParams {
  std::vector<int> values;

  int side() const noexcept { return (static_cast<int>(values.size()) + 1) / 2; }
  friend bool operator==(const HankelParams&, const HankelParams&) = default;
};

/// Throws std::invalid_argument on even length or negative values.
Matrix hankel_from_params(const HankelParams& p);

/// Throws std::invalid_argument if `m` is not Hankel.
HankelParams antidiagonal_params(const Matrix& m);

/// Permutation matrix of a one-line word over 1..N: entry (i, word[i]-1) = 1.
Matrix permutation_matrix(const std::vector<int>& word);

}  // namespace rsklab
