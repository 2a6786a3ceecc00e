#include <gtest/gtest.h>

#include <set>

#include "mcda/errors.hpp"
#include "mcda/rule_engine.hpp"
#include "mcda/uncertainty.hpp"
#include "oracle.hpp"
#include "support.hpp"
#include "published_rules.hpp"

using namespace mcda;
using mcda::testing::abbreviations;
using mcda::testing::canonical_engine;
using mcda::testing::canonical_kb;
using mcda::testing::vec;

constexpr int Q = -1;

namespace {

std::vector<std::string> select_abbr(const DescriptorVector& v) {
  return abbreviations(canonical_kb(), canonical_engine().select_methods(v));
}

}  // namespace

TEST(SelectMethods, FuzzyRankingExample) {
  EXPECT_EQ(select_abbr(vec({1, 2, 2, 1, 1, 3, 0, 3, 2})),
            (std::vector<std::string>{"S_F", "T_F", "V_F"}));
  const auto set = canonical_engine().select_methods(vec({1, 2, 2, 1, 1, 3, 0, 3, 2}));
  EXPECT_EQ(std::vector<int>(set.begin(), set.end()), (std::vector<int>{20, 21, 22}));
}

TEST(SelectMethods, AllUnknownReturnsEverything) {
  const auto set = canonical_engine().select_methods(DescriptorVector{});
  EXPECT_EQ(set.size(), 56u);
  for (std::size_t i = 0; i < set.size(); ++i) EXPECT_EQ(set.ids()[i], static_cast<int>(i + 1));
}

TEST(SelectMethods, EmptyResult) {
  EXPECT_TRUE(canonical_engine().select_methods(vec({1, 2, 3, 0, 0, 0, 0, 3, 2})).empty());
}

TEST(SelectMethods, InvalidVectorNamesStep) {
  try {
    canonical_engine().select_methods(vec({0, 3, Q, Q, Q, Q, Q, Q, Q}));
    FAIL() << "expected InvalidRequest";
  } catch (const InvalidRequest& e) {
    EXPECT_EQ(e.step(), 1);
    EXPECT_NE(std::string(e.what()).find("step 1"), std::string::npos);
  }
  try {
    canonical_engine().select_methods(vec({1, 2, 2, 1, 1, 0, 0, 3, 2}));
    FAIL() << "expected InvalidRequest";
  } catch (const InvalidRequest& e) {
    EXPECT_EQ(e.step(), 3);
  }
  try {
    canonical_engine().select_methods(vec({Q, Q, Q, Q, Q, Q, Q, 2, 1}));
    FAIL() << "expected InvalidRequest";
  } catch (const InvalidRequest& e) {
    EXPECT_EQ(e.step(), 4);
  }
}

TEST(SelectMethods, ExactMatchingOnProblematic) {
  // A selection problem does not pull in ranking methods.
  EXPECT_EQ(select_abbr(vec({0, 0, 2, 0, 0, 0, 0, 1, 0})), (std::vector<std::string>{"G_P"}));
}

TEST(SelectMethods, LowerLevelsIgnoreDeeperSlots) {
  const auto& engine = canonical_engine();
  const auto v = vec({1, 2, 2, 1, 1, 0, 3, 3, 2});  // invalid only at level 3
  EXPECT_THROW(engine.select_methods(v), InvalidRequest);
  const auto got = engine.select_methods(v, Level::Two);
  EXPECT_EQ(std::vector<int>(got.begin(), got.end()),
            oracle::scan(engine.kb(), vec({1, 2, 2, 1, 1, Q, Q, 3, 2})));
}

TEST(ActivatedRule, Examples) {
  const auto& engine = canonical_engine();
  const auto* r30 = engine.activated_rule(vec({1, 3, 3, 0, 0, 0, 0, 3, 2}));
  ASSERT_NE(r30, nullptr);
  EXPECT_EQ(r30->id, "R30");
  EXPECT_EQ(abbreviations(canonical_kb(), r30->methods),
            (std::vector<std::string>{"A_H", "A_N", "M_B", "D_M", "R_M"}));
  const auto* r21 = engine.activated_rule(vec({1, 2, 2, 1, 2, 0, 3, 3, 2}));
  ASSERT_NE(r21, nullptr);
  EXPECT_EQ(r21->id, "R21");
  EXPECT_EQ(abbreviations(canonical_kb(), r21->methods), (std::vector<std::string>{"P_2"}));
  EXPECT_EQ(engine.activated_rule(vec({1, 2, 3, 0, 0, 0, 0, 3, 2})), nullptr);
  EXPECT_EQ(engine.activated_rule(vec({1, 2, Q, 0, 0, 0, 0, 3, 2})), nullptr);
  EXPECT_THROW(engine.activated_rule(vec({0, 3, 1, 0, 0, 0, 0, 1, 0})), InvalidRequest);
}

TEST(RuleBase, CountsPerLevel) {
  EXPECT_EQ(derive_rule_base(canonical_kb(), Level::One).size(), 13u);
  EXPECT_EQ(derive_rule_base(canonical_kb(), Level::Two).size(), 25u);
  EXPECT_EQ(derive_rule_base(canonical_kb(), Level::Three).size(), 31u);
}

TEST(RuleBase, LevelThreeMatchesPublishedTable) {
  const auto& rules = canonical_engine().rule_base(Level::Three);
  const auto& expected = mcda::testing::published_rules();
  ASSERT_EQ(rules.size(), expected.size());
  for (std::size_t i = 0; i < rules.size(); ++i) {
    EXPECT_EQ(rules[i].id, expected[i].label);
    EXPECT_EQ(rules[i].pattern, vec(expected[i].pattern)) << expected[i].label;
    const auto got = abbreviations(canonical_kb(), rules[i].methods);
    EXPECT_EQ(got, std::vector<std::string>(expected[i].methods.begin(),
                                            expected[i].methods.end()))
        << expected[i].label;
  }
}

TEST(RuleBase, R14HasEightMethods) {
  const auto& rules = canonical_engine().rule_base(Level::Three);
  const auto it = std::find_if(rules.begin(), rules.end(), [](const Rule& r) { return r.id == "R14"; });
  ASSERT_NE(it, rules.end());
  std::vector<std::string> names;
  for (int id : it->methods) names.push_back(canonical_kb().get_method(id).name);
  EXPECT_EQ(names, (std::vector<std::string>{"EVAMIX", "MAUT", "MAVT", "SAW", "SMART", "TOPSIS",
                                             "UTA", "VIKOR"}));
}

TEST(RuleBase, PartitionAndValidityAtEveryLevel) {
  for (Level level : kAllLevels) {
    const auto rules = derive_rule_base(canonical_kb(), level);
    std::set<int> seen;
    std::set<DescriptorVector> patterns;
    std::size_t total = 0;
    for (const auto& r : rules) {
      EXPECT_FALSE(r.methods.empty());
      EXPECT_TRUE(is_valid(r.pattern, level)) << r.id;
      EXPECT_EQ(count_unknowns(r.pattern, level), 0);
      EXPECT_EQ(r.level, level);
      total += r.methods.size();
      seen.insert(r.methods.begin(), r.methods.end());
      patterns.insert(r.pattern);
      // The rule's set is exactly what a query with its pattern returns.
      EXPECT_EQ(canonical_engine().select_methods(r.pattern, level), r.methods) << r.id;
    }
    EXPECT_EQ(total, 56u);
    EXPECT_EQ(seen.size(), 56u);
    EXPECT_EQ(patterns.size(), rules.size());
  }
}

TEST(RuleBase, GeneratedLabelsBelowLevelThree) {
  const auto& one = canonical_engine().rule_base(Level::One);
  EXPECT_EQ(one.front().id, "L1-01");
  EXPECT_EQ(one.back().id, "L1-13");
  EXPECT_EQ(canonical_engine().rule_base(Level::Two).back().id, "L2-25");
}

TEST(RuleBase, MemoizedMatchesFreshDerivation) {
  for (Level level : kAllLevels) {
    const auto fresh = derive_rule_base(canonical_kb(), level);
    const auto& memo = canonical_engine().rule_base(level);
    ASSERT_EQ(fresh.size(), memo.size());
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      EXPECT_EQ(fresh[i].id, memo[i].id);
      EXPECT_EQ(fresh[i].methods, memo[i].methods);
    }
  }
}

TEST(OracleProperty, EngineEqualsLinearScanOnAllValidVectors) {
  std::size_t checked = 0;
  for (const auto& v : filter_valid(enumerate_combinations(Level::Three), Level::Three)) {
    const auto got = canonical_engine().select_methods(v);
    ASSERT_EQ(std::vector<int>(got.begin(), got.end()), oracle::scan(canonical_kb(), v))
        << v.to_string();
    ++checked;
  }
  EXPECT_EQ(checked, 4536u);
}

TEST(OracleProperty, LowerLevelsEqualLinearScanOfProjection) {
  for (Level level : {Level::One, Level::Two}) {
    for (const auto& v : filter_valid(enumerate_combinations(level), level)) {
      const auto got = canonical_engine().select_methods(v, level);
      ASSERT_EQ(std::vector<int>(got.begin(), got.end()), oracle::scan(canonical_kb(), v));
    }
  }
}

TEST(MonotonicityProperty, ErasingAKnownSlotNeverShrinksTheResult) {
  std::size_t pairs = 0;
  for (const auto& v : filter_valid(enumerate_combinations(Level::Three), Level::Three)) {
    const auto base = canonical_engine().select_methods(v);
    for (Slot s : kAllSlots) {
      if (!v.is_known(s)) continue;
      auto erased = v;
      erased.clear(s);
      if (!is_valid(erased, Level::Three)) continue;
      ASSERT_TRUE(base.is_subset_of(canonical_engine().select_methods(erased)))
          << v.to_string() << " erasing " << descriptor_name(s);
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 0u);
}

TEST(MethodMask, BasicOperations) {
  MethodMask a(70);
  a.set(0);
  a.set(65);
  MethodMask b(70, true);
  EXPECT_EQ(b.count(), 70u);
  b.subtract(a);
  EXPECT_EQ(b.count(), 68u);
  b |= a;
  EXPECT_EQ(b.count(), 70u);
  b &= a;
  EXPECT_EQ(b, a);
  EXPECT_TRUE(a.test(65));
  EXPECT_FALSE(a.test(64));
}

TEST(Selection, CarriesRuleAndOptionalExplanation) {
  const auto s = run_selection(canonical_engine(), vec({1, 2, 2, 1, 1, 3, 0, 3, 2}), true);
  ASSERT_NE(s.rule, nullptr);
  EXPECT_EQ(s.rule->id, "R16");
  ASSERT_TRUE(s.explanation);
  EXPECT_EQ(s.explanation->evaluate(canonical_kb()), s.methods);
  EXPECT_FALSE(run_selection(canonical_engine(), DescriptorVector{}, false).explanation);
}
