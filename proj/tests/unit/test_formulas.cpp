#include <numeric>

#include <gtest/gtest.h>

#include "hyperpd/classify.hpp"
#include "hyperpd/errors.hpp"
#include "hyperpd/formulas.hpp"

using namespace hyperpd;

TEST(OpenString, Values) {
  EXPECT_EQ(pd_open_string(3), 2);
  EXPECT_EQ(pd_open_string(1), 1);
  EXPECT_EQ(pd_open_string(11), 8);
  EXPECT_EQ(reg_open_string(3), 1);
  EXPECT_EQ(reg_open_string(1), 1);
  EXPECT_EQ(reg_open_string(4), 2);
  EXPECT_THROW(pd_open_string(0), PreconditionError);
  EXPECT_THROW(reg_open_string(-1), PreconditionError);
}

TEST(OpenCycle, Values) {
  EXPECT_EQ(pd_open_cycle(3), 2);
  EXPECT_EQ(pd_open_cycle(4), 3);
  EXPECT_EQ(pd_open_cycle(6), 4);
  EXPECT_EQ(pd_open_cycle(10), 7);
  EXPECT_THROW(pd_open_cycle(2), PreconditionError);
}

TEST(DisjointStrings, Values) {
  EXPECT_EQ(pd_disjoint_open_strings({3, 3}), 4);
  EXPECT_EQ(pd_disjoint_open_strings({}), 0);
  EXPECT_EQ(pd_disjoint_open_strings({0, 5}), 4);
  EXPECT_EQ(pd_disjoint_open_strings({4, 7}), 4 + 7 - 1 - 2);
  EXPECT_THROW(pd_disjoint_open_strings({-1}), PreconditionError);
}

TEST(StringWithEdge, Examples) {
  auto h1 = pd_string_with_edge(std::vector<int>{2, 1, 2, 1});
  EXPECT_EQ(h1.pd, 7);
  EXPECT_EQ(h1.case_tag, "jump");
  EXPECT_EQ(pd_string_with_edge(std::vector<int>{2, 1, 1, 2}).pd, 7);
  auto h3 = pd_string_with_edge(std::vector<int>{2, 2, 2, 0});
  EXPECT_EQ(h3.pd, 6);
  EXPECT_EQ(h3.case_tag, "sum-r=2k-with-zero");
  auto eleven = pd_string_with_edge(std::vector<int>{1, 2, 2, 2, 0});
  EXPECT_EQ(eleven.pd, 8);
  EXPECT_EQ(eleven.case_tag, "sum-r<2k");
  EXPECT_EQ(pd_string_with_edge(std::vector<int>{2, 2, 2}).case_tag, "sum-r>=2k+1");
}

TEST(StringWithEdge, FromConfig) {
  auto cfg = string_config(9, {3, 5, 8}, true, true);
  EXPECT_EQ(cfg.gaps, (std::vector<int>{2, 1, 2, 1}));
  EXPECT_EQ(pd_string_with_edge(cfg).pd, 7);
  auto open_end = string_config(10, {1, 4, 7, 10}, false, false);
  EXPECT_THROW(pd_string_with_edge(open_end), PreconditionError);
}

TEST(StringWithEdge, Preconditions) {
  EXPECT_THROW(pd_string_with_edge(std::vector<int>{2, 2}), PreconditionError);     // k = 1
  EXPECT_THROW(pd_string_with_edge(std::vector<int>{1, 0, 1}), PreconditionError);  // F = {v,v+1} is an edge union
  EXPECT_THROW(pd_string_with_edge(std::vector<int>{2, -1, 2}), PreconditionError);
  EXPECT_TRUE(string_edge_is_union({1, 0, 1}));
  EXPECT_FALSE(string_edge_is_union({1, 1, 1}));
  EXPECT_TRUE(string_edge_is_union({0, 0, 0}));
}

TEST(StringWithEdge, AlwaysOpenStringOrOneMore) {
  for (int k = 2; k <= 5; ++k) {
    std::vector<int> gaps(static_cast<std::size_t>(k) + 1, 0);
    while (true) {
      if (!string_edge_is_union(gaps)) {
        const int mu = k + std::accumulate(gaps.begin(), gaps.end(), 0);
        const int pd = pd_string_with_edge(gaps).pd;
        EXPECT_TRUE(pd == pd_open_string(mu) || pd == pd_open_string(mu) + 1);
      }
      std::size_t i = 0;
      while (i < gaps.size() && ++gaps[i] > 4) gaps[i++] = 0;
      if (i == gaps.size()) break;
    }
  }
}

TEST(CycleWithEdge, Examples) {
  EXPECT_EQ(pd_cycle_with_edge(std::vector<int>{1, 3}).pd, 4);
  EXPECT_EQ(pd_cycle_with_edge(std::vector<int>{2, 2}).pd, 4);
  EXPECT_EQ(pd_cycle_with_edge(std::vector<int>{1, 1}).pd, 3);
  EXPECT_EQ(pd_cycle_with_edge(std::vector<int>{2, 2, 2, 0}).pd, 7);
  EXPECT_EQ(pd_cycle_with_edge(std::vector<int>{1, 1}).case_tag, "cycle-with-edge");
  EXPECT_THROW(pd_cycle_with_edge(std::vector<int>{0, 0}), PreconditionError);
}

TEST(Lemmas, Examples) {
  auto base = lemma_case_pd(LemmaCase::Stringedge, {2, 0});
  EXPECT_EQ(base.pd, 2);
  EXPECT_EQ(base.reg_upper_bound, 1);
  EXPECT_EQ(lemma_case_pd(LemmaCase::Stringedge, {5, 2, 0}).pd, 2 * 2 + 2);
  EXPECT_EQ(lemma_case_pd(LemmaCase::SubStinky, {0, 2, 0}).pd, 3);
  EXPECT_EQ(lemma_case_pd(LemmaCase::SubStinky, {0, 2, 2, 2, 0}).pd, 7);
  EXPECT_EQ(lemma_case_pd(LemmaCase::TwoStringedge, {0, 2, 2, 2, 0}).pd, 6);
  EXPECT_EQ(lemma_case_pd(LemmaCase::StinkyString2k, {1, 2, 1}).pd, pd_open_string(6) + 1);
  EXPECT_EQ(lemma_name(LemmaCase::TwoStringedge), "2stringedge");
}

TEST(Lemmas, HypothesesChecked) {
  EXPECT_THROW(lemma_case_pd(LemmaCase::Stringedge, {2, 1}), PreconditionError);
  EXPECT_THROW(lemma_case_pd(LemmaCase::Stringedge, {1, 0}), PreconditionError);
  EXPECT_THROW(lemma_case_pd(LemmaCase::SubStinky, {1, 2, 0}), PreconditionError);
  EXPECT_THROW(lemma_case_pd(LemmaCase::SubStinky, {0, 0}), PreconditionError);
  EXPECT_THROW(lemma_case_pd(LemmaCase::StinkyString2k, {2, 2, 1}), PreconditionError);
}

TEST(FloorArithmetic, SmallInstances) {
  // k = 2, n = (1,1,1): sum r = 3 < 4.
  auto lhs = [](const std::vector<int>& n) {
    int s = 0;
    for (int x : n) s += x - x / 3;
    return s;
  };
  auto rhs = [](int k, const std::vector<int>& n) {
    const int t = k + std::accumulate(n.begin(), n.end(), 0);
    return t - t / 3;
  };
  EXPECT_LT(lhs({1, 1, 1}), rhs(2, {1, 1, 1}));
  EXPECT_EQ(lhs({2, 2, 1}), rhs(2, {2, 2, 1}));
  EXPECT_EQ(lhs({2, 2, 2}), rhs(2, {2, 2, 2}));
}
