#include <gtest/gtest.h>

#include "gridhfl/acceptance.hpp"

namespace {

using gridhfl::CriterionStatus;

const gridhfl::CriterionSpec& spec(int id) {
  static const auto all = gridhfl::acceptance_criteria();
  for (const auto& s : all) {
    if (s.id == id) return s;
  }
  throw std::out_of_range("no criterion");
}

TEST(Acceptance, TenCriteriaInOrder) {
  const auto all = gridhfl::acceptance_criteria();
  ASSERT_EQ(all.size(), 10u);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(all[i].id, i + 1);
}

TEST(Acceptance, CorpusSize) { EXPECT_EQ(gridhfl::all_words(3, 4).size(), 373u); }

TEST(Acceptance, TamperedDifferentialFailsCriterionOne) {
  gridhfl::AcceptanceOptions opt;
  EXPECT_EQ(gridhfl::run_criterion(spec(1), opt).status, CriterionStatus::pass);
  opt.tamper_differential = true;
  const auto r = gridhfl::run_criterion(spec(1), opt);
  EXPECT_EQ(r.status, CriterionStatus::fail);
  EXPECT_NE(gridhfl::format_result_line(r).find("[FAIL] 1."), std::string::npos);
}

TEST(Acceptance, LoweredCapSkips) {
  gridhfl::AcceptanceOptions opt;
  opt.caps.homology_k = opt.caps.boundary_k = opt.caps.minus_k = 3;
  const auto r = gridhfl::run_criterion(spec(1), opt);
  EXPECT_EQ(r.status, CriterionStatus::skipped_cap);
  EXPECT_NE(gridhfl::format_result_line(r).find("[skipped (cap)]"), std::string::npos);
}

TEST(Acceptance, BudgetOverrunFails) {
  gridhfl::CriterionSpec slow{99, "slow", 0.0, [](const gridhfl::AcceptanceOptions&) {
                                volatile double s = 0;
                                for (int i = 0; i < 100000; ++i) s = s + i;
                                return std::string("done");
                              }};
  const auto r = gridhfl::run_criterion(slow, {});
  EXPECT_EQ(r.status, CriterionStatus::fail);
  EXPECT_NE(r.detail.find("budget"), std::string::npos);
}

TEST(Acceptance, WordLevelCriterionPasses) {
  EXPECT_EQ(gridhfl::run_criterion(spec(9), {}).status, CriterionStatus::pass);
}

}  // namespace
