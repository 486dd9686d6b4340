#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "rsklab/greene.hpp"
#include "rsklab/rsk.hpp"

namespace {

using rsklab::Matrix;
using rsklab::Partition;
using rsklab::Tableau;

Matrix M(const std::vector<std::vector<int>>& rows) { return Matrix::from_rows(rows); }

std::vector<int> digits(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(c - '0');
  return out;
}

// Quadratic DP, strict increase (permutation entries are distinct).
int lis_length(const std::vector<int>& w) {
  std::vector<int> best(w.size(), 1);
  int top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    top = std::max(top, best[i]);
  }
  return top;
}

TEST(RowInsert, BumpsLeftmostStrictlyGreater) {
  const auto r = rsklab::row_insert(Tableau({{1, 2, 2, 2, 3}}), 1);
  EXPECT_EQ(r.tableau, Tableau({{1, 1, 2, 2, 3}, {2}}));
  EXPECT_EQ(r.cell, (rsklab::Cell{1, 0}));
}

TEST(RowInsert, IntoEmpty) {
  const auto r = rsklab::row_insert(Tableau{}, 4);
  EXPECT_EQ(r.tableau, Tableau(std::vector<Tableau::Row>{{4}}));
  EXPECT_EQ(r.cell, (rsklab::Cell{0, 0}));
}

TEST(RowInsert, AppendsWhenNoGreaterEntry) {
  const auto r = rsklab::row_insert(Tableau({{1, 2, 2}, {3}}), 2);
  EXPECT_EQ(r.tableau, Tableau({{1, 2, 2, 2}, {3}}));
  EXPECT_EQ(r.cell, (rsklab::Cell{0, 3}));
}

TEST(RskForward, ZeroMatrix) {
  const auto pq = rsklab::rsk_forward(Matrix(2));
  EXPECT_TRUE(pq.p.empty());
  EXPECT_TRUE(pq.q.empty());
  EXPECT_TRUE(rsklab::shape_of_matrix(Matrix(3)).empty());
}

TEST(RskForward, AntiDiagonalTwoByTwo) {
  const auto pq = rsklab::rsk_forward(M({{0, 3}, {3, 0}}));
  EXPECT_EQ(pq.p, Tableau({{1, 1, 1}, {2, 2, 2}}));
  EXPECT_EQ(pq.q, Tableau({{1, 1, 1}, {2, 2, 2}}));
  EXPECT_EQ(rsklab::shape_of_matrix(M({{0, 3}, {3, 0}})), Partition({3, 3}));
}

TEST(RskForward, HankelWorkedExample) {
  const auto m = M({{0, 2, 2}, {2, 2, 2}, {2, 2, 4}});
  const auto pq = rsklab::rsk_forward(m);
  const Tableau expected({{1, 1, 1, 1, 2, 2, 3, 3, 3, 3}, {2, 2, 2, 2, 3, 3}, {3, 3}});
  EXPECT_EQ(pq.p, expected);
  EXPECT_EQ(pq.q, expected);
  EXPECT_EQ(rsklab::shape_of_matrix(m), Partition({10, 6, 2}));
  EXPECT_EQ(rsklab::greene_shape(m, {18}), Partition({10, 6, 2}));
}

// A published 3x3 worked example claims shape (4,2,1) for this matrix. Its
// weight is 7 and its heaviest right-down path already has weight 6, so that
// claim cannot hold; insertion and Greene invariants both give (6,1).
TEST(RskForward, DiscrepantWorkedExampleRecordsComputedPair) {
  const auto m = M({{1, 1, 0}, {0, 2, 1}, {1, 0, 1}});
  EXPECT_EQ(rsklab::to_biword(m).bottoms(), (std::vector<int>{1, 2, 2, 2, 3, 1, 3}));
  const auto pq = rsklab::rsk_forward(m);
  EXPECT_EQ(pq.p, Tableau({{1, 1, 2, 2, 3, 3}, {2}}));
  EXPECT_EQ(pq.q, Tableau({{1, 1, 2, 2, 2, 3}, {3}}));
  EXPECT_EQ(pq.p.shape(), Partition({6, 1}));
  EXPECT_EQ(rsklab::greene_shape(m), Partition({6, 1}));
  EXPECT_NE(pq.p.shape(), Partition({4, 2, 1}));
}

TEST(RskForward, PermutationShape) {
  EXPECT_EQ(rsklab::shape_of_matrix(rsklab::permutation_matrix(digits("247951368"))),
            Partition({5, 3, 1}));
}

TEST(RskInverse, Examples) {
  EXPECT_EQ(rsklab::rsk_inverse(Tableau{}, Tableau{}, 2), Matrix(2));
  const Tableau t({{1, 1, 1}, {2, 2, 2}});
  EXPECT_EQ(rsklab::rsk_inverse(t, t, 2), M({{0, 3}, {3, 0}}));
}

TEST(RskInverse, RejectsBadInput) {
  EXPECT_THROW(rsklab::rsk_inverse(Tableau({{1, 1}}), Tableau({{1}, {2}}), 2), std::invalid_argument);
  EXPECT_THROW(rsklab::rsk_inverse(Tableau({{1, 2}, {2}}), Tableau({{1, 1}, {1}}), 2),
               std::invalid_argument);
  EXPECT_THROW(rsklab::rsk_inverse(Tableau({{1, 3}}), Tableau({{1, 1}}), 2), std::invalid_argument);
}

TEST(RskProperty, RoundTripAndSsytOutputs) {
  for (auto [n, w] : {std::pair{2, 10}, std::pair{3, 8}}) {
    rsklab::testing::for_each_matrix_up_to(n, w, [&](const Matrix& m) {
      const auto pq = rsklab::rsk_forward(m);
      ASSERT_TRUE(rsklab::is_ssyt(pq.p)) << m.to_string();
      ASSERT_TRUE(rsklab::is_ssyt(pq.q)) << m.to_string();
      ASSERT_EQ(pq.p.shape(), pq.q.shape());
      ASSERT_EQ(pq.p.weight(), m.weight());
      ASSERT_EQ(rsklab::rsk_inverse(pq.p, pq.q, n), m) << m.to_string();
    });
  }
}

TEST(RskProperty, ContentsMatchRowAndColumnSums) {
  rsklab::testing::for_each_matrix_up_to(3, 6, [](const Matrix& m) {
    const auto pq = rsklab::rsk_forward(m);
    std::vector<int> p_count(4, 0), q_count(4, 0);
    for (const auto& row : pq.p.rows()) for (int v : row) ++p_count[static_cast<std::size_t>(v)];
    for (const auto& row : pq.q.rows()) for (int v : row) ++q_count[static_cast<std::size_t>(v)];
    for (int k = 0; k < 3; ++k) {
      int row_sum = 0, col_sum = 0;
      for (int t = 0; t < 3; ++t) {
        row_sum += m(k, t);
        col_sum += m(t, k);
      }
      ASSERT_EQ(q_count[static_cast<std::size_t>(k + 1)], row_sum);
      ASSERT_EQ(p_count[static_cast<std::size_t>(k + 1)], col_sum);
    }
  });
}

TEST(RskProperty, TransposeSwapsTableaux) {
  rsklab::testing::for_each_matrix_up_to(3, 8, [](const Matrix& m) {
    const auto pq = rsklab::rsk_forward(m);
    const auto swapped = rsklab::rsk_forward(rsklab::transpose(m));
    ASSERT_EQ(swapped.p, pq.q) << m.to_string();
    ASSERT_EQ(swapped.q, pq.p) << m.to_string();
    if (rsklab::is_symmetric(m)) {
      ASSERT_EQ(pq.p, pq.q) << m.to_string();
    }
  });
}

TEST(RskProperty, PermutationsFirstRowIsLisAndReversalTransposes) {
  for (int size = 1; size <= 7; ++size) {
    std::vector<int> w(static_cast<std::size_t>(size));
    std::iota(w.begin(), w.end(), 1);
    do {
      const auto pq = rsklab::rsk_forward(rsklab::permutation_matrix(w));
      ASSERT_EQ(static_cast<int>(pq.p.rows().front().size()), lis_length(w));
      ASSERT_TRUE(rsklab::is_syt(pq.p));
      if (size <= 6) {
        std::vector<int> rev(w.rbegin(), w.rend());
        const auto reversed = rsklab::rsk_forward(rsklab::permutation_matrix(rev));
        ASSERT_EQ(reversed.p, rsklab::transpose_tableau(pq.p));
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

}  // namespace
