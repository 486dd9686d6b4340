#include <gtest/gtest.h>

#include "json.hpp"
#include "oracles.hpp"
#include "rsklab/errors.hpp"
#include "rsklab/greene.hpp"
#include "rsklab/minimal.hpp"
#include "rsklab/report.hpp"
#include "rsklab/search.hpp"

namespace {

using rsklab::Matrix;
using rsklab::Partition;

Matrix M(const std::vector<std::vector<int>>& rows) { return Matrix::from_rows(rows); }

TEST(ShapeClass, Examples) {
  EXPECT_EQ(rsklab::enumerate_shape_class(Partition({1, 1})), (std::vector<Matrix>{M({{0, 1}, {1, 0}})}));
  EXPECT_EQ(rsklab::enumerate_shape_class(Partition({2})), (std::vector<Matrix>{M({{2}})}));
  EXPECT_EQ(rsklab::enumerate_shape_class(Partition({3, 3})), (std::vector<Matrix>{M({{0, 3}, {3, 0}})}));
}

// Filter every matrix of the right weight through the Greene oracle. No
// pruning, no insertion.
std::vector<Matrix> shape_class_by_greene(const Partition& p) {
  std::vector<Matrix> out;
  rsklab::testing::for_each_matrix_of_weight(p.length(), p.weight(), [&](const Matrix& m) {
    if (rsklab::greene_shape(m) == p) out.push_back(m);
  });
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ShapeClassProperty, PrunedScanMatchesUnprunedGreeneFilter) {
  for (int w = 1; w <= 7; ++w) {
    for (int n = 1; n <= 3 && n <= w; ++n) {
      for (const auto& p : rsklab::enumerate_partitions(w, n)) {
        ASSERT_EQ(rsklab::enumerate_shape_class(p), shape_class_by_greene(p)) << p.to_string();
      }
    }
  }
}

TEST(ShapeClass, ParallelScanIsIdentical) {
  const Partition p({4, 3, 2});
  EXPECT_EQ(rsklab::enumerate_shape_class(p, {}, 1), rsklab::enumerate_shape_class(p, {}, 4));
}

TEST(InverseRskEnumeration, Examples) {
  EXPECT_EQ(rsklab::enumerate_via_inverse_rsk(Partition({1, 1})),
            (std::vector<Matrix>{M({{0, 1}, {1, 0}})}));
  EXPECT_EQ(rsklab::enumerate_via_inverse_rsk(Partition({2, 1})).size(), 4u);
}

TEST(InverseRskEnumeration, AgreesWithCompositionFilter) {
  for (int w = 1; w <= 8; ++w) {
    for (int n = 1; n <= 3 && n <= w; ++n) {
      for (const auto& p : rsklab::enumerate_partitions(w, n)) {
        ASSERT_EQ(rsklab::enumerate_via_inverse_rsk(p), rsklab::enumerate_shape_class(p))
            << p.to_string();
      }
    }
  }
}

TEST(Caps, RefuseOversizedInput) {
  EXPECT_THROW(rsklab::enumerate_shape_class(Partition({12, 1})), rsklab::CapExceeded);
  EXPECT_THROW(rsklab::enumerate_shape_class(Partition({1, 1, 1, 1, 1})), rsklab::CapExceeded);
  EXPECT_THROW(rsklab::brute_force_minimum(Partition({8, 1, 1, 1})), rsklab::CapExceeded);
  EXPECT_NO_THROW(rsklab::SearchCaps{}.check(Partition({7, 1, 1, 1})));
  EXPECT_NO_THROW(rsklab::SearchCaps::uniform(13).check(Partition({12, 1})));
}

TEST(BruteForceMinimum, Examples) {
  auto r = rsklab::brute_force_minimum(Partition({3, 1}));
  EXPECT_EQ(r.min_inversions, 1);
  EXPECT_EQ(r.minimal_set, rsklab::two_row_minimal(3, 1).matrices);

  r = rsklab::brute_force_minimum(Partition({6}));
  EXPECT_EQ(r.min_inversions, 0);
  EXPECT_EQ(r.minimal_set, (std::vector<Matrix>{M({{6}})}));

  r = rsklab::brute_force_minimum(Partition({3, 3}));
  EXPECT_EQ(r.min_inversions, 9);
  EXPECT_EQ(r.minimal_set, (std::vector<Matrix>{M({{0, 3}, {3, 0}})}));
}

TEST(BruteForceMinimum, TwoRowCompleteness) {
  for (int l1 = 1; l1 <= 6; ++l1) {
    for (int l2 = 1; l2 <= l1; ++l2) {
      const auto r = rsklab::brute_force_minimum(Partition({l1, l2}));
      const auto expected = rsklab::two_row_minimal(l1, l2);
      EXPECT_EQ(r.min_inversions, expected.min_inversions) << l1 << "," << l2;
      EXPECT_EQ(r.minimal_set, expected.matrices) << l1 << "," << l2;
    }
  }
}

TEST(VerifyPartition, TwoRowRecord) {
  const auto rec = rsklab::verify_partition(Partition({3, 1}));
  EXPECT_FALSE(rec.skipped);
  EXPECT_TRUE(rec.all_minimal_symmetric);
  EXPECT_TRUE(rec.all_minimal_hankel);
  EXPECT_TRUE(rec.candidate_set_equals_minimal_set);
  EXPECT_TRUE(rec.candidates_subset_of_minimal);
  EXPECT_EQ(rec.formula_value, 1);
  EXPECT_TRUE(rec.formula_matches_bruteforce);
  EXPECT_TRUE(rec.enumeration_strategies_agree);
  EXPECT_TRUE(rec.oracle_disagreements.empty());
}

TEST(VerifyPartition, SingleMatrixClass) {
  const auto rec = rsklab::verify_partition(Partition({1, 1}));
  EXPECT_EQ(rec.class_size, 1u);
  EXPECT_EQ(rec.min_inversions_bruteforce, 1);
  EXPECT_EQ(rec.formula_value, 1);
  EXPECT_TRUE(rec.all_minimal_symmetric && rec.all_minimal_hankel);
  EXPECT_TRUE(rec.candidate_set_equals_minimal_set && rec.formula_matches_bruteforce);
}

TEST(VerifyPartition, FormulaDisagreementIsAFindingNotAnError) {
  const auto rec = rsklab::verify_partition(Partition({3, 3}));
  EXPECT_EQ(rec.formula_value, 7);
  EXPECT_EQ(rec.min_inversions_bruteforce, 9);
  EXPECT_FALSE(rec.formula_matches_bruteforce);
  EXPECT_TRUE(rec.oracle_disagreements.empty());
}

TEST(VerifyPartition, SkipsOutsideCaps) {
  const auto rec = rsklab::verify_partition(Partition({13, 1}));
  EXPECT_TRUE(rec.skipped);
  EXPECT_FALSE(rec.skip_reason.empty());
}

TEST(VerifyPartition, RecordsAreDeterministic) {
  for (const auto& p : {Partition({4, 3, 2}), Partition({3, 1, 1, 1})}) {
    const auto a = rsklab::verify_partition(p, {{}, 1});
    const auto b = rsklab::verify_partition(p, {{}, 3});
    EXPECT_EQ(rsklab::to_jsonl_line(a, false), rsklab::to_jsonl_line(b, false));
    EXPECT_TRUE(a.oracle_disagreements.empty()) << rsklab::to_jsonl_line(a);
    for (const auto& m : a.minimal_set) {
      EXPECT_EQ(m.weight(), p.weight());
      EXPECT_TRUE(std::binary_search(a.minimal_set.begin(), a.minimal_set.end(), rsklab::transpose(m)));
    }
  }
}

TEST(Sweep, PartitionListing) {
  using V = std::vector<Partition>;
  EXPECT_EQ(rsklab::sweep_partitions({4, {2}}), (V{Partition({3, 1}), Partition({2, 2})}));
  EXPECT_EQ(rsklab::sweep_partitions({6, {3}}),
            (V{Partition({4, 1, 1}), Partition({3, 2, 1}), Partition({2, 2, 2})}));
  EXPECT_TRUE(rsklab::sweep_partitions({2, {3}}).empty());
  EXPECT_EQ(rsklab::sweep_partitions({3, {1, 2}, 2}),
            (V{Partition({2}), Partition({1, 1}), Partition({3}), Partition({2, 1})}));
}

TEST(Sweep, OrderIndependentOfParallelism) {
  const rsklab::SweepRange range{7, {2, 3}, 5};
  std::vector<std::string> serial, parallel;
  for (const auto& r : rsklab::sweep(range, {{}, 1})) serial.push_back(rsklab::to_jsonl_line(r, false));
  std::vector<std::string> streamed;
  rsklab::sweep(range, {{}, 4}, [&](const rsklab::VerificationRecord& r) {
    streamed.push_back(rsklab::to_jsonl_line(r, false));
  });
  EXPECT_EQ(serial, streamed);
  EXPECT_EQ(serial.size(), rsklab::sweep_partitions(range).size());
}

TEST(Sweep, SkipPredicateOmitsPartitions) {
  const auto records = rsklab::sweep({4, {2}}, {}, {}, [](const Partition& p) { return p == Partition({3, 1}); });
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records.front().partition, Partition({2, 2}));
}

TEST(Report, JsonlSchema) {
  const auto rec = rsklab::verify_partition(Partition({2, 1}));
  const auto j = nlohmann::json::parse(rsklab::to_jsonl_line(rec));
  for (const char* key : {"partition", "n", "weight", "class_size", "min_inversions_bruteforce",
                          "minimal_set", "all_minimal_symmetric", "all_minimal_hankel",
                          "candidate_set_equals_minimal_set", "candidates_subset_of_minimal",
                          "formula_value", "formula_matches_bruteforce",
                          "enumeration_strategies_agree", "elapsed_seconds"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["partition"], nlohmann::json::array({2, 1}));
  EXPECT_TRUE(j["minimal_set"][0].is_array());
  EXPECT_TRUE(j["minimal_set"][0][0].is_array());
  EXPECT_EQ(rsklab::partition_of_jsonl_line(rsklab::to_jsonl_line(rec)), Partition({2, 1}));
  EXPECT_FALSE(rsklab::partition_of_jsonl_line("not json").has_value());

  const auto skipped = rsklab::verify_partition(Partition({20, 1}));
  const auto js = nlohmann::json::parse(rsklab::to_jsonl_line(skipped));
  EXPECT_EQ(js["status"], "skipped");
  EXPECT_TRUE(js["min_inversions_bruteforce"].is_null());
}

TEST(Report, CsvRow) {
  const auto rec = rsklab::verify_partition(Partition({3, 3}));
  EXPECT_EQ(rsklab::to_csv_row(rec), "\"3,3\",9,7,true,true,true,false");
  EXPECT_EQ(rsklab::csv_header().substr(0, 10), "partition,");
}

}  // namespace
