#include <gtest/gtest.h>

#include <random>

#include "pomnar/data_model.hpp"
#include "support/oracles.hpp"

namespace pomnar {
namespace {

std::vector<RawRow> three_rows() {
  return {{"a", 1, {0.5}, {}}, {"b", std::nullopt, {1.5}, {}}, {"c", 3, {-0.2}, {}}};
}

TEST(ValidateDataset, AcceptsMissingAndRecordsObservedCategories) {
  const auto ds = validate_dataset(three_rows(), 3);
  EXPECT_EQ(ds.size(), 3);
  EXPECT_EQ(ds.num_missing(), 1);
  EXPECT_TRUE(ds.is_missing(1));
  EXPECT_EQ(ds.observed_categories(), (std::vector<bool>{true, false, true}));
  EXPECT_FALSE(ds.all_categories_observed());
  // missingness covariates default to the outcome covariates
  EXPECT_EQ(ds.missingness_covariates(), ds.outcome_covariates());
}

TEST(ValidateDataset, RejectsCategoryOutOfRange) {
  auto rows = three_rows();
  rows[0].y = 4;
  try {
    validate_dataset(rows, 3);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("category out of range"), std::string::npos);
  }
  rows[0].y = 0;
  EXPECT_THROW(validate_dataset(rows, 3), DataError);
}

TEST(ValidateDataset, RejectsRaggedCovariates) {
  std::vector<RawRow> rows{{"a", 1, {1, 2, 3, 4}, {}}, {"b", 2, {1, 2, 3, 4, 5}, {}}};
  try {
    validate_dataset(rows, 2);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("ragged covariates"), std::string::npos);
  }
}

TEST(ValidateDataset, RejectsTooFewCategoriesAndAllMissing) {
  EXPECT_THROW(validate_dataset(three_rows(), 1), DataError);
  std::vector<RawRow> rows{{"a", std::nullopt, {1.0}, {}}, {"b", std::nullopt, {2.0}, {}}};
  EXPECT_THROW(validate_dataset(rows, 2), DataError);
  EXPECT_THROW(validate_dataset({}, 2), DataError);
}

TEST(ValidateDataset, SeparateMissingnessCovariates) {
  std::vector<RawRow> rows{{"a", 1, {1.0}, {1.0, 7.0}}, {"b", 2, {2.0}, {2.0, 8.0}}};
  const auto ds = validate_dataset(rows, 2);
  EXPECT_EQ(ds.num_outcome_covariates(), 1);
  EXPECT_EQ(ds.num_missingness_covariates(), 2);
  EXPECT_DOUBLE_EQ(ds.missingness_covariates()(1, 1), 8.0);
}

TEST(AugmentDataset, OneMissingOfThree) {
  const auto aug = augment_dataset(validate_dataset(three_rows(), 3));
  EXPECT_EQ(aug.num_rows(), 5);
  ASSERT_EQ(aug.num_subjects(), 3);
  const auto g = *aug.find_group("b");
  EXPECT_TRUE(g.missing);
  EXPECT_EQ(g.first_row, 1);
  EXPECT_EQ(g.num_rows, 3);
  for (Index k = 0; k < 3; ++k) {
    EXPECT_EQ(aug.y(1 + k), k + 1);
    EXPECT_EQ(aug.r(1 + k), 1);
    EXPECT_DOUBLE_EQ(aug.x(1 + k, 0), 1.5);
  }
  // pre-E-step weights are 1 everywhere
  EXPECT_TRUE((aug.weight.array() == 1.0).all());
  EXPECT_EQ(aug.r(0), 0);
  EXPECT_EQ(aug.r(4), 0);
}

TEST(AugmentDataset, NoMissingIsIdentity) {
  std::vector<RawRow> rows{{"a", 1, {0.1}, {}}, {"b", 2, {0.2}, {}}};
  const auto aug = augment_dataset(validate_dataset(rows, 2));
  EXPECT_EQ(aug.num_rows(), 2);
  EXPECT_TRUE((aug.weight.array() == 1.0).all());
  EXPECT_TRUE((aug.r.array() == 0).all());
}

TEST(AugmentDataset, SingleMissingFiveCategories) {
  std::vector<RawRow> rows{{"m", std::nullopt, {2.0, 3.0}, {}}, {"o", 5, {1.0, 1.0}, {}}};
  const auto aug = augment_dataset(validate_dataset(rows, 5));
  EXPECT_EQ(aug.num_rows(), 6);
  for (Index k = 0; k < 5; ++k) {
    EXPECT_EQ(aug.y(k), k + 1);
    EXPECT_EQ(aug.x.row(k), aug.x.row(0));
  }
}

// Row-count law and round trip of the missing pattern on random datasets.
TEST(AugmentDataset, RowCountLawAndRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> n_dist(1, 40), j_dist(2, 6);
  std::bernoulli_distribution miss(0.3);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = n_dist(rng), J = j_dist(rng);
    std::uniform_int_distribution<int> cat(1, J);
    std::vector<RawRow> rows;
    std::vector<bool> pattern;
    for (int i = 0; i < n; ++i) {
      const bool m = i > 0 && miss(rng);
      rows.push_back({std::to_string(i), m ? std::nullopt : std::optional<int>(cat(rng)),
                      {static_cast<double>(i)}, {}});
      pattern.push_back(m);
    }
    const auto ds = validate_dataset(rows, J);
    const auto aug = augment_dataset(ds);
    EXPECT_EQ(aug.num_rows(), ds.num_observed() + J * ds.num_missing());
    EXPECT_EQ(aug.num_subjects(), n);
    EXPECT_EQ(aug.missing_pattern(), pattern);
    Index covered = 0;
    for (const auto& g : aug.groups) {
      EXPECT_EQ(g.first_row, covered);
      covered += g.num_rows;
    }
    EXPECT_EQ(covered, aug.num_rows());
  }
}

TEST(CheckWeights, DetectsBadGroups) {
  auto aug = augment_dataset(validate_dataset(three_rows(), 3));
  aug.weight.segment(1, 3) << 0.2, 0.3, 0.5;
  auto wc = check_weights(aug);
  EXPECT_LT(wc.max_group_sum_error, 1e-15);
  EXPECT_TRUE(wc.observed_exactly_one);
  aug.weight(2) = 0.4;
  wc = check_weights(aug);
  EXPECT_NEAR(wc.max_group_sum_error, 0.1, 1e-12);
  aug.weight(0) = 0.9;
  EXPECT_FALSE(check_weights(aug).observed_exactly_one);
}

TEST(CompleteCases, DropsMissingRows) {
  const auto cc = validate_dataset(three_rows(), 3).complete_cases();
  EXPECT_EQ(cc.size(), 2);
  EXPECT_EQ(cc.num_missing(), 0);
  EXPECT_EQ(cc.ids(), (std::vector<std::string>{"a", "c"}));
}

}  // namespace
}  // namespace pomnar
