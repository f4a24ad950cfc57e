#include <random>

#include <gtest/gtest.h>

#include "spex/constructions.hpp"
#include "spex/graph6.hpp"
#include "spex/partitions.hpp"
#include "spex/patterns.hpp"
#include "support.hpp"

namespace spex {
namespace {

Graph join_of(std::vector<int> parts) { return join_k2(realize_partition(PathPartition(std::move(parts)))); }

TEST(ContainsSubgraph, Examples) {
  EXPECT_TRUE(contains_subgraph(cll_pattern(3), cll_pattern(3)));
  EXPECT_FALSE(contains_subgraph(k2_bipartite(10), cll_pattern(3)));
  Graph k4(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  EXPECT_TRUE(contains_subgraph(k4, theta_family(4)[0]));
  EXPECT_TRUE(contains_subgraph(cycle(5), Graph(0)));
  EXPECT_FALSE(contains_subgraph(path(3), path(4)));
}

TEST(ContainsSubgraph, EmbeddingIsValidAndDeterministic) {
  Graph host = join_of({3, 2, 2});
  Graph pattern = cll_pattern(4);
  auto emb = find_subgraph(host, pattern);
  ASSERT_TRUE(emb.has_value());
  std::vector<bool> seen(host.order(), false);
  for (Vertex h : *emb) {
    ASSERT_FALSE(seen[h]);
    seen[h] = true;
  }
  for (auto [a, b] : pattern.edges()) EXPECT_TRUE(host.has_edge((*emb)[a], (*emb)[b]));
  EXPECT_EQ(find_subgraph(host, pattern), emb);
}

TEST(ContainsSubgraph, AgreesWithInjectiveMapEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> hs(1, 7), ps(1, 5);
    Graph host = testing::random_graph(hs(rng), 0.5, rng);
    Graph pattern = testing::random_graph(ps(rng), 0.5, rng);
    ASSERT_EQ(contains_subgraph(host, pattern), testing::brute_force_contains(host, pattern))
        << to_graph6(host) << " " << to_graph6(pattern);
  }
}

TEST(ContainsSubgraph, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> hs(4, 10), ps(3, 6);
    Graph host = testing::random_graph(hs(rng), 0.35, rng);
    Graph pattern = testing::random_connected_graph(ps(rng), 0.2, rng);
    bool before = contains_subgraph(host, pattern);
    std::uniform_int_distribution<Vertex> pick(0, host.order() - 1);
    for (int add = 0; add < 5; ++add) {
      Vertex u = pick(rng), v = pick(rng);
      if (u != v) host.add_edge(u, v);
      bool after = contains_subgraph(host, pattern);
      ASSERT_TRUE(!before || after);
      before = after;
    }
  }
}

TEST(ContainsSubgraph, PathPatternMatchesLongestPath) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> hs(1, 10);
    Graph host = testing::random_graph(hs(rng), 0.25, rng);
    const std::size_t longest = testing::longest_path_order(host);
    for (int k = 1; k <= 10; ++k)
      ASSERT_EQ(contains_subgraph(host, path(k)), static_cast<std::size_t>(k) <= longest);
  }
}

TEST(Freeness, CllExamples) {
  EXPECT_TRUE(is_cll_free(k2_bipartite(12), 3));
  EXPECT_FALSE(is_cll_free(join_of({3, 2}), 4));
  EXPECT_TRUE(is_cll_free(disjoint_union(cycle(3), cycle(3)), 3));
  EXPECT_THROW(is_cll_free(cycle(3), 2), InvalidArgument);
}

TEST(Freeness, ThetaExamples) {
  EXPECT_TRUE(is_theta_free(k2_bipartite(12), 4));
  Graph c6 = cycle(6);
  c6.add_edge(0, 3);
  EXPECT_FALSE(is_theta_free(c6, 6));  // this host is C4 . C4
  EXPECT_TRUE(is_theta_free(cycle(5), 5));
  EXPECT_THROW(is_theta_free(cycle(5), 3), InvalidArgument);
}

TEST(Predicates, Claim4) {
  EXPECT_TRUE(claim4_free_predicate(PathPartition({2, 2}), 4));
  EXPECT_FALSE(claim4_free_predicate(PathPartition({3, 2}), 4));
  EXPECT_TRUE(claim4_free_predicate(PathPartition({4, 1, 1}), 5));
  EXPECT_TRUE(is_cll_free(join_of({4, 1, 1}), 5));
  EXPECT_THROW(claim4_free_predicate(PathPartition({1}), 3), InvalidArgument);
}

TEST(Predicates, C33) {
  EXPECT_TRUE(c33_free_predicate(PathPartition({1, 1, 1, 1})));
  EXPECT_FALSE(c33_free_predicate(PathPartition({2, 1})));
  EXPECT_FALSE(c33_free_predicate(PathPartition({3})));
  EXPECT_FALSE(is_cll_free(join_of({2, 1}), 3));
  EXPECT_FALSE(is_cll_free(join_of({3}), 3));
  // K2 + P2 = K4 is too small to hold the 5-vertex bowtie.
  EXPECT_TRUE(c33_free_predicate(PathPartition({2})));
  EXPECT_TRUE(is_cll_free(join_of({2}), 3));
}

TEST(Predicates, Claim8) {
  EXPECT_TRUE(claim8_free_predicate(PathPartition({1, 1}), 5));
  EXPECT_FALSE(claim8_free_predicate(PathPartition({2, 2}), 6));
  EXPECT_FALSE(is_theta_free(join_of({2, 2}), 6));
  EXPECT_TRUE(claim8_free_predicate(PathPartition({2, 1, 1, 1}), 6));
  EXPECT_THROW(claim8_free_predicate(PathPartition({1}), 4), InvalidArgument);
}

TEST(Predicates, ExhaustiveAgreementWithOracle) {
  for (int l : {4, 5, 6}) {
    auto r = oracle_agreement(Claim::Claim4, l, 12, 4);
    EXPECT_EQ(r.checked, 271u);
    EXPECT_TRUE(r.mismatches.empty()) << "claim4 l=" << l;
  }
  for (int k : {5, 6, 7, 8}) EXPECT_TRUE(oracle_agreement(Claim::Claim8, k, 12, 4).mismatches.empty()) << k;
  auto c33 = oracle_agreement(Claim::C33, 3, 10);
  EXPECT_EQ(c33.checked, 138u);
  EXPECT_TRUE(c33.mismatches.empty());
}

TEST(Predicates, AgreementReportIsIndependentOfWorkerCount) {
  auto a = oracle_agreement(Claim::Claim8, 7, 10, 1);
  auto b = oracle_agreement(Claim::Claim8, 7, 10, 8);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.free_count, b.free_count);
  EXPECT_EQ(a.mismatches.size(), b.mismatches.size());
}

TEST(DecomposeJoin, RecoversExtremalPartitions) {
  auto dec = decompose_join(extremal_construction(Cll{5}, 20));
  ASSERT_TRUE(dec.has_value());
  EXPECT_EQ(dec->partition, h_partition(20, 3, 3));
  EXPECT_EQ(dec->u1, 18u);
  EXPECT_EQ(dec->u2, 19u);

  EXPECT_FALSE(decompose_join(cycle(5)).has_value());
  EXPECT_FALSE(decompose_join(k2_bipartite(6)).has_value());

  for (int n = 5; n <= 60; ++n)
    for (ForbiddenPattern pat : {ForbiddenPattern(Cll{3}), ForbiddenPattern(Cll{4}), ForbiddenPattern(Cll{5}),
                                 ForbiddenPattern(Theta{5}), ForbiddenPattern(Theta{6}), ForbiddenPattern(Theta{7}),
                                 ForbiddenPattern(Theta{8})}) {
      PathPartition expected;
      try {
        expected = extremal_partition(pat, n);
      } catch (const InvalidArgument&) {
        continue;
      }
      auto d = decompose_join(extremal_construction(pat, n));
      ASSERT_TRUE(d.has_value()) << pat.to_string() << " n=" << n;
      ASSERT_EQ(d->partition, expected) << pat.to_string() << " n=" << n;
    }
}

TEST(DecomposeJoin, RejectsCyclesInRemainder) {
  // K2 + C4 has the dominating pair but the rest is not a path union.
  EXPECT_FALSE(decompose_join(join_k2(cycle(4))).has_value());
}

TEST(ForbiddenPatternParse, AcceptsAndRejects) {
  EXPECT_EQ(ForbiddenPattern::parse("cll:4"), ForbiddenPattern(Cll{4}));
  EXPECT_EQ(ForbiddenPattern::parse("theta:7").to_string(), "theta:7");
  EXPECT_THROW(ForbiddenPattern::parse("cll:2"), InvalidArgument);
  EXPECT_THROW(ForbiddenPattern::parse("theta:x"), InvalidArgument);
  EXPECT_THROW(ForbiddenPattern::parse("star:3"), InvalidArgument);
  EXPECT_THROW(ForbiddenPattern::parse("cll4"), InvalidArgument);
}

}  // namespace
}  // namespace spex
