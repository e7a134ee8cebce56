#include "mak/instance.h"

#include <gtest/gtest.h>

#include "mak/errors.h"
#include "mak/satisfaction.h"
#include "test_util.h"

namespace mak {
namespace {

using ::mak::testing::MakeInstance;

TEST(InstanceTest, RejectsMalformedData) {
  EXPECT_THROW(MakeInstance({1, 2}, {{1, 2, 3}}, 3), InputError);
  EXPECT_THROW(MakeInstance({0}, {{1}}, 3), InputError);
  EXPECT_THROW(MakeInstance({1}, {{-1}}, 3), InputError);
  EXPECT_THROW(MakeInstance({1}, {{1}}, -1), InputError);
  EXPECT_THROW(MakeInstance({1}, {}, 3), InputError);
  EXPECT_THROW(MakeInstance({1}, {{1}}, 3, Rule::kDiverse, 2), InputError);
  EXPECT_THROW(MakeInstance({1}, {{1}}, 3, Rule::kMedian, 0), InputError);

  InstanceData dup;
  dup.item_ids = {"a", "a"};
  dup.costs = {1, 1};
  dup.voter_ids = {"v"};
  dup.utils = {{1, 2}};
  EXPECT_THROW(Instance{dup}, InputError);

  InstanceData bad_order;
  bad_order.item_ids = {"a"};
  bad_order.costs = {1};
  bad_order.voter_ids = {"v", "w"};
  bad_order.utils = {{1}, {2}};
  bad_order.sc_order = std::vector<int>{0, 0};
  EXPECT_THROW(Instance{bad_order}, InputError);
}

TEST(InstanceTest, RuleNames) {
  EXPECT_EQ(ParseRule("median"), Rule::kMedian);
  EXPECT_EQ(RuleName(Rule::kBest), "best");
  EXPECT_THROW(ParseRule("mean"), InputError);
}

TEST(InstanceTest, Stats) {
  const Instance instance = MakeInstance({1, 1, 1}, {{3, 2, 5}, {1, 4, 0}}, 2);
  const InstanceStats stats = ComputeStats(instance);
  EXPECT_EQ(stats.u_max, 5);
  EXPECT_EQ(stats.u_bar, 9);
  EXPECT_EQ(stats.u_hat, 15);
}

TEST(InstanceTest, NormalizeDropsUnaffordableItems) {
  const Instance instance =
      MakeInstance({3, 9, 4}, {{1, 2, 3}, {4, 5, 6}}, 5);
  const NormalizeResult result = Normalize(instance);
  ASSERT_EQ(result.instance.num_items(), 2);
  EXPECT_EQ(result.instance.item_id(0), "p1");
  EXPECT_EQ(result.instance.item_id(1), "p3");
  EXPECT_EQ(result.instance.util(1, 1), 6);
  EXPECT_EQ(result.removed_items, std::vector<std::string>{"p2"});
  EXPECT_FALSE(result.trivially_infeasible);
}

TEST(InstanceTest, NormalizeIdentityWhenAllAffordable) {
  const Instance instance = MakeInstance({1, 2}, {{1, 2}}, 5);
  EXPECT_EQ(Normalize(instance).instance, instance);
}

TEST(InstanceTest, NormalizeZeroBudgetEmptiesItems) {
  InstanceData data = MakeInstance({1, 2}, {{1, 2}}, 0).data();
  data.target = 1;
  const NormalizeResult result = Normalize(Instance(data));
  EXPECT_EQ(result.instance.num_items(), 0);
  EXPECT_TRUE(result.trivially_infeasible);
}

TEST(InstanceTest, NormalizeRemapsAxis) {
  InstanceData data = MakeInstance({1, 9, 1}, {{1, 2, 3}}, 5).data();
  data.sp_axis = std::vector<int>{2, 1, 0};
  const NormalizeResult result = Normalize(Instance(data));
  ASSERT_TRUE(result.instance.sp_axis());
  EXPECT_EQ(*result.instance.sp_axis(), (std::vector<int>{1, 0}));
}

TEST(InstanceTest, WithRuleAndBudget) {
  const Instance instance = MakeInstance({1, 2}, {{1, 2}}, 5);
  const Instance median = WithRule(instance, Rule::kMedian, 2);
  EXPECT_EQ(median.rule(), Rule::kMedian);
  EXPECT_EQ(median.lambda(), 2);
  EXPECT_EQ(WithBudget(instance, 1).budget(), 1);
  EXPECT_THROW(WithRule(instance, Rule::kDiverse, 2), InputError);
}

TEST(InstanceTest, FindIds) {
  const Instance instance = MakeInstance({1, 2}, {{1, 2}}, 5);
  EXPECT_EQ(instance.FindItem("p2"), 1);
  EXPECT_EQ(instance.FindItem("p7"), -1);
  EXPECT_EQ(instance.FindVoter("v1"), 0);
}

}  // namespace
}  // namespace mak
