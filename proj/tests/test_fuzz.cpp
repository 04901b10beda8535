#include <gtest/gtest.h>

#include "plactic/fuzz.hpp"
#include "support.hpp"

using namespace testing_support;
namespace fuzz = plactic::fuzz;

TEST(Fuzz, SeedZeroIsClean) {
  fuzz::Options opt;
  const auto report = fuzz::run(opt);
  EXPECT_EQ(report.cases, 100u);
  for (const auto& f : report.failures) ADD_FAILURE() << f.case_index << ": " << f.property << " " << f.detail;
}

TEST(Fuzz, Deterministic) {
  fuzz::Options opt;
  opt.seed = 7;
  opt.cases = 30;
  opt.leading_rule = LeadingRule::maximal;
  const auto a = fuzz::run(opt);
  const auto b = fuzz::run(opt);
  ASSERT_EQ(a.failures.size(), b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    EXPECT_EQ(a.failures[i].case_index, b.failures[i].case_index);
    EXPECT_EQ(a.failures[i].matrix, b.failures[i].matrix);
  }
}

TEST(Fuzz, ZeroCases) {
  fuzz::Options opt;
  opt.cases = 0;
  const auto report = fuzz::run(opt);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.cases, 0u);
}

TEST(Fuzz, MaximalLeadingPointsAreCaughtAndShrunk) {
  fuzz::Options opt;
  opt.leading_rule = LeadingRule::maximal;
  const auto report = fuzz::run(opt);
  ASSERT_FALSE(report.ok());
  for (const auto& f : report.failures) {
    EXPECT_EQ(f.property, "triple-agreement");
    ASSERT_TRUE(f.matrix.has_value());
    EXPECT_LE(f.matrix->rows(), 2u);
    EXPECT_LE(f.matrix->cols(), 2u);
    EXPECT_TRUE(fuzz::check_matrix(*f.matrix, LeadingRule::maximal).has_value());
    EXPECT_FALSE(fuzz::check_matrix(*f.matrix).has_value());
  }
}

TEST(Fuzz, ShrinkReachesATinyWitness) {
  const NonNegMatrix a(std::vector<std::vector<Duration>>{
      {"0.5"_d, 0, "1.5"_d}, {0, "2/3"_d, 1}, {"0.25"_d, 1, 0}});
  ASSERT_TRUE(fuzz::check_matrix(a, LeadingRule::maximal).has_value());
  const auto small = fuzz::shrink(a, [](const NonNegMatrix& m) {
    return fuzz::check_matrix(m, LeadingRule::maximal).has_value();
  });
  EXPECT_LE(small.rows() * small.cols(), 2u) << small;
  EXPECT_TRUE(fuzz::check_matrix(small, LeadingRule::maximal).has_value());
  // A single row 1 1 already fails: the maximal rule peels column 2 first.
  EXPECT_TRUE(fuzz::check_matrix(NonNegMatrix(std::vector<std::vector<Duration>>{{1, 1}}),
                                 LeadingRule::maximal).has_value());
}
