#include "rsklab/rsk.hpp"

#include <stdexcept>

namespace rsklab {

InsertResult row_insert(const Tableau& t, int x) {
  InsertResult out{t, {}};
  out.cell = out.tableau.insert(x);
  return out;
}

TableauPair rsk_forward(const Biword& b) {
  std::vector<Tableau::Row> q_rows;
  Tableau p;
  for (const auto& letter : b.letters()) {
    const Cell c = p.insert(letter.bottom);
    if (c.row == static_cast<int>(q_rows.size())) q_rows.emplace_back();
    q_rows[static_cast<std::size_t>(c.row)].push_back(letter.top);
  }
  return {std::move(p), Tableau(std::move(q_rows))};
}

TableauPair rsk_forward(const Matrix& m) { return rsk_forward(to_biword(m)); }

namespace {

void check_entries(const Tableau& t, int n, const char* name) {
  for (const auto& row : t.rows()) {
    for (int v : row) {
      if (v > n) {
        throw std::invalid_argument(std::string(name) + " has an entry larger than the matrix side");
      }
    }
  }
}

}  // namespace

Matrix rsk_inverse(const Tableau& p, const Tableau& q, int n) {
  if (p.shape() != q.shape()) throw std::invalid_argument("P and Q shapes differ");
  if (!is_ssyt(p)) throw std::invalid_argument("P is not semistandard");
  if (!is_ssyt(q)) throw std::invalid_argument("Q is not semistandard");
  check_entries(p, n, "P");
  check_entries(q, n, "Q");

  Matrix m(n);
  Tableau work = p;
  auto q_rows = q.rows();
  while (!q_rows.empty()) {
    // Copies of the largest entry form a horizontal strip, each at the end
    // of its row. The rightmost copy (topmost row) was recorded last.
    std::size_t best = 0;
    for (std::size_t r = 1; r < q_rows.size(); ++r) {
      if (q_rows[r].back() > q_rows[best].back()) best = r;
    }
    const int top = q_rows[best].back();
    q_rows[best].pop_back();
    if (q_rows[best].empty()) q_rows.erase(q_rows.begin() + static_cast<std::ptrdiff_t>(best));
    const int bottom = work.reverse_bump(static_cast<int>(best));
    m.add(top - 1, bottom - 1, 1);
  }
  return m;
}

Partition shape_of_matrix(const Matrix& m) {
  Tableau p;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      for (int c = 0; c < m(i, j); ++c) p.insert(j + 1);
    }
  }
  return p.shape();
}

}  // namespace rsklab
