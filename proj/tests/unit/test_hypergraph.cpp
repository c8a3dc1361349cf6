#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "hyperpd/errors.hpp"
#include "hyperpd/families.hpp"
#include "hyperpd/hypergraph.hpp"
#include "hyperpd/oracle.hpp"

using namespace hyperpd;

namespace {

const char* kEightGenerators = "abk, bcl, cdklm, dekn, efgn, ghmn, hikl, ijk";

int oracle_pd(const Hypergraph& h) { return pd_reg(to_ideal(h, true)).first; }

std::vector<int> vertices_of(const Hypergraph& h, std::string_view label) { return h.edge(label).vertices; }

Hypergraph redundant_edges_example() {
  std::vector<Edge> e;
  for (int v = 1; v < 11; ++v) e.push_back({default_edge_label(v), {v, v + 1}, 1});
  e.push_back({"a", {1}, 1});
  e.push_back({"z", {11}, 1});
  e.push_back({"F", {3, 4, 5, 9}, 1});
  e.push_back({"R1", {1, 11}, 1});
  e.push_back({"R2", {5, 6, 7, 8}, 1});
  e.push_back({"R3", {2, 3, 9, 10}, 1});
  return Hypergraph(11, e);
}

Hypergraph random_separated(std::mt19937_64& rng) { return from_ideal(random_squarefree_ideal(rng, 6, 5)); }

}  // namespace

TEST(FromIdeal, OpenString) {
  auto h = from_ideal(parse_ideal("ab, bc, cd"));
  EXPECT_EQ(h.mu(), 3);
  EXPECT_EQ(vertices_of(h, "a"), std::vector<int>{1});
  EXPECT_EQ(vertices_of(h, "b"), (std::vector<int>{1, 2}));
  EXPECT_EQ(vertices_of(h, "c"), (std::vector<int>{2, 3}));
  EXPECT_EQ(vertices_of(h, "d"), std::vector<int>{3});
  EXPECT_TRUE(h.is_closed(1));
  EXPECT_EQ(h.kind(2), VertexKind::Open);
  EXPECT_TRUE(h.is_closed(3));
  EXPECT_EQ(h.dimension(), 1);
  EXPECT_EQ(h, open_string(3));
}

TEST(FromIdeal, OpenCycleAfterReorder) {
  auto h = from_ideal(parse_ideal("ac, ab, bc"));
  EXPECT_EQ(vertices_of(h, "a"), (std::vector<int>{1, 2}));
  EXPECT_EQ(vertices_of(h, "b"), (std::vector<int>{2, 3}));
  EXPECT_EQ(vertices_of(h, "c"), (std::vector<int>{1, 3}));
  for (int v = 1; v <= 3; ++v) EXPECT_FALSE(h.is_closed(v));
}

TEST(FromIdeal, LargerExample) {
  auto h = from_ideal(parse_ideal(kEightGenerators));
  EXPECT_EQ(h.edges().size(), 14u);
  EXPECT_EQ(vertices_of(h, "k"), (std::vector<int>{1, 3, 4, 7, 8}));
  EXPECT_EQ(vertices_of(h, "n"), (std::vector<int>{4, 5, 6}));
  EXPECT_TRUE(is_separated(h));
}

TEST(FromIdeal, RejectsNonMinimal) {
  EXPECT_THROW(from_ideal(parse_ideal("ab, abc")), PreconditionError);
}

TEST(ToIdeal, OpenString) {
  std::vector<Edge> e{{"a", {1}, 1}, {"b", {1, 2}, 1}, {"c", {2, 3}, 1}, {"d", {3}, 1}};
  EXPECT_EQ(to_ideal(Hypergraph(3, e)).to_string(), "(ab, bc, cd)");
}

TEST(ToIdeal, NonSeparatedNeedsForce) {
  // Vertex 1 lies only on edges that also contain vertex 2.
  Hypergraph h(2, {{"a", {1, 2}, 1}, {"b", {2}, 1}});
  EXPECT_FALSE(is_separated(h));
  EXPECT_THROW(to_ideal(h), PreconditionError);
  EXPECT_EQ(to_ideal(h, true).size(), 2u);
}

TEST(Hypergraph, MergesEqualEdges) {
  Hypergraph h(2, {{"a", {1}, 1}, {"b", {1, 2}, 1}, {"c", {1}, 1}, {"d", {2}, 1}});
  EXPECT_EQ(h.edges().size(), 3u);
  EXPECT_EQ(h.edge("a").multiplicity, 2);
  EXPECT_EQ(h.variable_count(), 4);
  EXPECT_EQ(to_ideal(h).to_string(), "(a*a_2*b, b*d)");
}

TEST(Hypergraph, RejectsUncoveredVertex) {
  EXPECT_THROW(Hypergraph(3, {{"a", {1, 2}, 1}}), PreconditionError);
}

TEST(RemoveUnionEdges, LargerExampleDropsKAndN) {
  std::vector<std::string> removed;
  auto r = remove_union_edges(from_ideal(parse_ideal(kEightGenerators)), &removed);
  std::sort(removed.begin(), removed.end());
  EXPECT_EQ(removed, (std::vector<std::string>{"k", "n"}));
  EXPECT_EQ(r.edges().size(), 12u);
}

TEST(RemoveUnionEdges, ThreeRedundantEdges) {
  std::vector<std::string> removed;
  auto r = remove_union_edges(redundant_edges_example(), &removed);
  std::sort(removed.begin(), removed.end());
  EXPECT_EQ(removed, (std::vector<std::string>{"R1", "R2", "R3"}));
  EXPECT_EQ(r, string_with_edge(11, {3, 4, 5, 9}));
}

TEST(RemoveUnionEdges, OpenStringUnchanged) {
  std::vector<std::string> removed;
  EXPECT_EQ(remove_union_edges(open_string(7), &removed), open_string(7));
  EXPECT_TRUE(removed.empty());
}

TEST(ColonByEdge, StringWithEdgeLosesF) {
  auto h = string_with_edge(9, {3, 5, 8});
  EXPECT_EQ(colon_by_edge(h, "F"), open_string(9));
  EXPECT_THROW(colon_by_edge(h, "nope"), PreconditionError);
}

TEST(ColonByEdge, JoiningEdgeMakesLeafClosed) {
  // The branch {9} hangs off vertex 8 through edge {8,9}.
  auto h = string_with_edge(9, {3, 5, 8});
  const auto& e = h.edges();
  auto it = std::find_if(e.begin(), e.end(), [](const Edge& x) { return x.vertices == std::vector<int>{8, 9}; });
  ASSERT_NE(it, e.end());
  auto r = colon_by_edge(h, it->label);
  EXPECT_EQ(r.mu(), 9);
  EXPECT_TRUE(r.is_closed(9));
  EXPECT_FALSE(r.has_edge({8, 9}));
  EXPECT_EQ(connected_components(r).size(), 2u);
  EXPECT_EQ(oracle_pd(r), 7);
}

TEST(ColonByEdge, MultiplicityDecrements) {
  Hypergraph h(2, {{"a", {1}, 2}, {"b", {1, 2}, 1}, {"c", {2}, 1}});
  auto r = colon_by_edge(h, "a");
  EXPECT_EQ(r.mu(), 2);
  EXPECT_EQ(r.edge("a").multiplicity, 1);
  EXPECT_EQ(r.edges().size(), 3u);
}

TEST(AddEdgeVariable, StringWithEdgeSplits) {
  auto h = string_with_edge(9, {3, 5, 8});
  VertexMap map;
  auto r = add_edge_variable(h, "F", &map);
  EXPECT_EQ(r.mu(), 7);
  EXPECT_EQ(map, (std::vector<int>{1, 2, 0, 3, 0, 4, 5, 0, 6}));
  auto comps = connected_components(r);
  std::vector<std::size_t> sizes;
  for (const auto& c : comps) sizes.push_back(c.vertices.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 1, 2, 1, 1}));
  EXPECT_TRUE(r.is_closed(7));
  EXPECT_EQ(oracle_pd(r), 7);
}

TEST(AddEdgeVariable, SingleClosedVertex) {
  auto r = add_edge_variable(Hypergraph(1, {{"a", {1}, 1}}), "a");
  EXPECT_EQ(r.mu(), 1);
  EXPECT_TRUE(r.is_closed(1));
}

TEST(RemoveVertex, MiddleOfShortString) {
  auto r = remove_vertex(open_string(3), 2);
  EXPECT_EQ(r.mu(), 2);
  EXPECT_TRUE(r.is_closed(1));
  EXPECT_TRUE(r.is_closed(2));
  EXPECT_EQ(connected_components(r).size(), 2u);
  EXPECT_THROW(remove_vertex(open_string(1), 1), PreconditionError);
}

TEST(RemoveVertex, HubOfStringWithEdgeFlattensF) {
  auto r = remove_vertex(string_with_edge(9, {3, 5, 8}), 3);
  EXPECT_EQ(r.mu(), 8);
  EXPECT_EQ(r.dimension(), 1);
  EXPECT_TRUE(r.has_edge({4, 7}));
}

TEST(RemoveVertex, OpenEndedStringGivesTwoStringedgeGraph) {
  auto h = string_with_edge(10, {1, 4, 7, 10}, false, false);
  auto g = remove_vertex(h, 4);
  EXPECT_EQ(g.mu(), 9);
  EXPECT_TRUE(g.has_edge({1, 6, 9}));
  EXPECT_TRUE(g.is_closed(3));
  EXPECT_TRUE(g.is_closed(4));
  EXPECT_FALSE(g.is_closed(1));
  EXPECT_EQ(g, lemma_hypergraph(LemmaCase::TwoStringedge, {0, 2, 2, 2, 0}));
}

TEST(ColonVertex, Examples) {
  auto r = colon_vertex(open_string(3), 2);
  EXPECT_EQ(r.mu(), 2);
  EXPECT_TRUE(r.is_closed(1) && r.is_closed(2));
  EXPECT_EQ(to_ideal(r).to_string(), "(a, d)");

  auto leaf = colon_vertex(open_string(2), 1);
  EXPECT_EQ(leaf.mu(), 1);
  EXPECT_TRUE(leaf.is_closed(1));
  EXPECT_THROW(colon_vertex(open_string(1), 1), PreconditionError);
}

TEST(ColonVertex, StringWithEdgeAtFirstVertexOfF) {
  // k = 2, gaps (2,2,2): two isolated vertices and strings of lengths
  // n_1 - 2 = 0 and n_2 + n_3 - 1 = 3.
  auto h = string_with_edge_from_gaps({2, 2, 2});
  auto r = colon_vertex(h, 3);
  std::vector<std::size_t> sizes;
  for (const auto& c : connected_components(r)) sizes.push_back(c.vertices.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 3}));
}

TEST(BranchReduce, BothRulesOnTheBranchedExample) {
  auto h = string_with_edge(9, {3, 5, 8});
  auto at3 = branch_reduce(h, 3);
  EXPECT_EQ(at3.rule, BranchRule::RemoveHub);
  EXPECT_EQ(at3.branch, (std::vector<int>{2, 1}));
  EXPECT_EQ(at3.result, remove_vertex(h, 3));
  EXPECT_EQ(oracle_pd(at3.result), 7);

  auto at8 = branch_reduce(h, 8);
  EXPECT_EQ(at8.rule, BranchRule::ColonEdge);
  EXPECT_EQ(at8.branch, std::vector<int>{9});
  EXPECT_EQ(h.edge(at8.joining_edge).vertices, (std::vector<int>{8, 9}));
  EXPECT_EQ(oracle_pd(at8.result), 7);

  EXPECT_EQ(branch_reduce(h).hub, 3);
  EXPECT_EQ(find_branches(h).size(), 2u);
}

TEST(BranchReduce, NoRuleForLengthThree) {
  // Spider: hub 1 with legs of lengths 3, 1, 1.
  std::vector<Edge> e{{"a", {1, 2}, 1}, {"b", {2, 3}, 1}, {"c", {3, 4}, 1}, {"d", {4}, 1},
                      {"e", {1, 5}, 1}, {"f", {5}, 1},    {"g", {1, 6}, 1}, {"h", {6}, 1}};
  Hypergraph h(6, e);
  auto r = branch_reduce(h, 1);
  EXPECT_EQ(r.rule, BranchRule::ColonEdge);
  bool saw_no_rule = false;
  for (const auto& b : find_branches(h)) {
    if (b.branch.size() == 3) {
      saw_no_rule = true;
      EXPECT_EQ(b.rule, BranchRule::NoRule);
      EXPECT_EQ(b.result, h);
    }
  }
  EXPECT_TRUE(saw_no_rule);
}

TEST(BranchReduce, OpenStringHasNoBranch) {
  EXPECT_THROW(branch_reduce(open_string(6)), PreconditionError);
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(Hypergraph(2, {{"a", {1}, 1}, {"b", {2}, 1}})).size(), 2u);
  auto one = connected_components(open_cycle(5));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].graph, open_cycle(5));
  EXPECT_EQ(one[0].vertices, (std::vector<int>{1, 2, 3, 4, 5}));
}

TEST(Json, RoundTrip) {
  auto h = string_with_edge(9, {3, 5, 8});
  auto back = hypergraph_from_json(hypergraph_to_json(h));
  EXPECT_EQ(back, h);
  EXPECT_EQ(back.edge("F").vertices, (std::vector<int>{3, 5, 8}));

  auto m = hypergraph_from_json(R"({"mu": 2, "edges": {"a": [1], "b": [1, 2], "c": [2]}, "multiplicity": {"b": 3}})");
  EXPECT_EQ(m.edge("b").multiplicity, 3);
  EXPECT_EQ(hypergraph_from_json(hypergraph_to_json(m)), m);
}

TEST(Json, Errors) {
  EXPECT_THROW(hypergraph_from_json("{"), ParseError);
  EXPECT_THROW(hypergraph_from_json(R"({"mu": 2, "edges": {"a": [1, 3]}})"), ParseError);
  EXPECT_THROW(hypergraph_from_json(R"({"edges": {"a": [1]}})"), ParseError);
}

TEST(DefaultLabels, Sequence) {
  EXPECT_EQ(default_edge_label(0), "a");
  EXPECT_EQ(default_edge_label(25), "z");
  EXPECT_EQ(default_edge_label(26), "e27");
}

TEST(Properties, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto h = random_separated(rng);
    EXPECT_TRUE(is_separated(h));
    EXPECT_EQ(from_ideal(to_ideal(h)), h);
  }
}

TEST(Properties, OperationsMatchIdealLayer) {
  // Every edge of H that survives an operation maps, through the vertex map,
  // onto an edge of the result; the result's vertex count matches the
  // minimal generating set computed directly on ideals.
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    auto h = random_separated(rng);
    auto I = to_ideal(h);
    for (const auto& f : h.edges()) {
      auto direct = colon_by_monomial(I, Monomial({f.label}));
      if (direct.is_unit()) {
        EXPECT_THROW(colon_by_edge(h, f.label), PreconditionError);
        continue;
      }
      VertexMap map;
      auto r = colon_by_edge(h, f.label, &map);
      EXPECT_EQ(r.mu(), static_cast<int>(direct.size()));
      for (const auto& e : h.edges()) {
        if (e.label == f.label && f.multiplicity == 1) continue;
        std::vector<int> image;
        for (int v : e.vertices) {
          if (map[v - 1] > 0) image.push_back(map[v - 1]);
        }
        std::sort(image.begin(), image.end());
        if (!image.empty()) {
          EXPECT_TRUE(r.has_edge(image));
        }
      }

      auto added = add_edge_variable(h, f.label);
      EXPECT_EQ(added.mu(), static_cast<int>(minimalize(I.with_generator(Monomial({f.label}))).size()));
    }
    if (h.mu() < 2) continue;
    for (int v = 1; v <= h.mu(); ++v) {
      std::vector<std::size_t> rest;
      for (int u = 1; u <= h.mu(); ++u) {
        if (u != v) rest.push_back(static_cast<std::size_t>(u - 1));
      }
      auto Iv = I.subideal(rest);
      EXPECT_EQ(remove_vertex(h, v).mu(), static_cast<int>(minimalize(Iv).size()));
      auto q = colon_by_monomial(Iv, I.generators()[v - 1]);
      EXPECT_EQ(colon_vertex(h, v).mu(), static_cast<int>(q.size()));
    }
  }
}

TEST(Properties, MultiplicityDoesNotChangeBettiTotals) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int t = 0; t < 25; ++t) {
    auto h = from_ideal(random_squarefree_ideal(rng, 5, 4));
    std::vector<Edge> edges = h.edges();
    for (auto& e : edges) e.multiplicity = mult(rng);
    Hypergraph heavy(h.mu(), edges);
    EXPECT_EQ(betti_table(to_ideal(h)).totals(), betti_table(to_ideal(heavy)).totals());
  }
}

TEST(Properties, UnionRemovalKeepsPd) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 60; ++t) {
    auto h = random_separated(rng);
    EXPECT_EQ(oracle_pd(h), oracle_pd(remove_union_edges(h)));
  }
  EXPECT_EQ(oracle_pd(redundant_edges_example()), 8);
}
