#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "spex/constructions.hpp"
#include "spex/enumeration.hpp"
#include "spex/partitions.hpp"
#include "spex/search.hpp"
#include "support.hpp"

namespace spex {
namespace {

using Parts = std::vector<int>;

constexpr double kPinTol = 1e-9;

Parts repeat(std::initializer_list<std::pair<int, int>> runs) {
  Parts out;
  for (auto [value, times] : runs) out.insert(out.end(), times, value);
  return out;
}

TEST(Partitions, Counts) {
  EXPECT_EQ(enumerate_partitions(4).size(), 5u);
  EXPECT_EQ(enumerate_partitions(7, 2).size(), 4u);
  ASSERT_EQ(enumerate_partitions(1).size(), 1u);
  EXPECT_EQ(enumerate_partitions(1)[0].parts(), Parts{1});
  EXPECT_EQ(enumerate_partitions(12).size(), 77u);
  auto four = enumerate_partitions(4);
  EXPECT_EQ(four.front().parts(), Parts{4});
  EXPECT_EQ(four.back().parts(), (Parts{1, 1, 1, 1}));
}

TEST(Enumeration, ConnectedGraphCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(connected_graphs(n).size(), expected[n - 1]) << n;
  EXPECT_THROW(connected_graphs(9), InvalidArgument);
}

TEST(Enumeration, CanonicalFormIsPermutationInvariant) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 8);
    Graph g = testing::random_graph(size(rng), 0.45, rng);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(canonical_graph6(g), canonical_graph6(permuted(g, perm)));
  }
  EXPECT_FALSE(are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
  EXPECT_TRUE(are_isomorphic(path(5), permuted(path(5), {4, 2, 0, 1, 3})));
}

TEST(Enumeration, GraphsAreConnectedAndPairwiseDistinct) {
  std::set<std::string> keys;
  for (const auto& g : connected_graphs(6)) {
    ASSERT_TRUE(is_connected(g));
    ASSERT_TRUE(keys.insert(canonical_graph6(g)).second);
  }
}

void expect_top(const SearchReport& r, std::size_t i, const Parts& parts, double rho) {
  ASSERT_GT(r.ranked.size(), i);
  ASSERT_TRUE(r.ranked[i].partition.has_value());
  EXPECT_EQ(r.ranked[i].partition->parts(), parts);
  EXPECT_NEAR(r.ranked[i].rho, rho, kPinTol);
  EXPECT_TRUE(r.ranked[i].planar);
  EXPECT_TRUE(r.ranked[i].free);
}

TEST(FamilySearch, C44AtForty) {
  auto r = family_search(Cll{4}, 40);
  EXPECT_EQ(r.stats.free, 20u);
  expect_top(r, 0, Parts(19, 2), 9.7177978870813497);
  expect_top(r, 1, repeat({{2, 18}, {1, 2}}), 9.6941001775457636);
  expect_top(r, 2, repeat({{2, 17}, {1, 4}}), 9.6702201763091971);
  EXPECT_NEAR(r.ranked[0].rho, 1 + std::sqrt(76.0), kPinTol);
  EXPECT_EQ(r.matches_theorem_extremal, true);
  EXPECT_EQ(r.gap_flags.front(), GapFlag::Strict);
}

TEST(FamilySearch, C55AtForty) {
  auto r = family_search(Cll{5}, 40);
  EXPECT_EQ(r.stats.free, 142u);
  expect_top(r, 0, repeat({{3, 12}, {2, 1}}), 9.8870360542518316);
  expect_top(r, 1, repeat({{3, 12}, {1, 2}}), 9.8646548110865364);
  expect_top(r, 2, repeat({{3, 11}, {2, 2}, {1, 1}}), 9.8620929493551088);
  EXPECT_EQ(r.matches_theorem_extremal, true);
}

TEST(FamilySearch, ThetaSixAndSevenAtForty) {
  auto t6 = family_search(Theta{6}, 40);
  EXPECT_EQ(t6.stats.free, 2u);
  expect_top(t6, 0, repeat({{2, 1}, {1, 36}}), 9.2598100799029499);
  expect_top(t6, 1, Parts(38, 1), 9.2321245982864895);
  EXPECT_EQ(t6.matches_theorem_extremal, true);

  auto t7 = family_search(Theta{7}, 40);
  EXPECT_EQ(t7.stats.free, 21u);
  expect_top(t7, 0, Parts(19, 2), 9.7177978870813497);
  EXPECT_EQ(t7.matches_theorem_extremal, true);
}

TEST(FamilySearch, CandidateCountsFollowPartitionCounts) {
  for (int n = 8; n <= 40; ++n) {
    const int total = n - 2;
    EXPECT_EQ(family_search(Theta{5}, n).stats.free, 1u) << n;
    EXPECT_EQ(family_search(Theta{6}, n).stats.free, 2u) << n;
    EXPECT_EQ(family_search(Theta{7}, n).stats.free, static_cast<std::size_t>(total / 2 + 2)) << n;
    EXPECT_EQ(family_search(Cll{4}, n).stats.free, static_cast<std::size_t>(total / 2 + 1)) << n;
  }
}

TEST(FamilySearch, SmallPinsAndErrors) {
  auto c44 = family_search(Cll{4}, 30);
  expect_top(c44, 0, Parts(14, 2), 8.4833147735478853);
  auto t5 = family_search(Theta{5}, 20);
  ASSERT_EQ(t5.ranked.size(), 1u);
  EXPECT_NEAR(t5.ranked[0].rho, 6.5207972893961506, kPinTol);
  auto c33 = family_search(Cll{3}, 15);
  ASSERT_EQ(c33.ranked.size(), 1u);
  EXPECT_NEAR(c33.ranked[0].rho, 5.6234753829797999, kPinTol);
  EXPECT_NEAR(c33.ranked[0].rho, (1 + std::sqrt(1.0 + 8 * 13)) / 2, kPinTol);

  EXPECT_THROW(family_search(Theta{4}, 10), InvalidArgument);
  EXPECT_THROW(family_search(Explicit{cycle(4)}, 10), InvalidArgument);
}

TEST(FamilySearch, TopKLimitsRankedList) {
  SearchOptions opt;
  opt.top_k = 3;
  auto r = family_search(Cll{5}, 30, opt);
  EXPECT_EQ(r.ranked.size(), 3u);
  EXPECT_EQ(r.gap_flags.size(), 2u);
}

TEST(ExhaustiveSearch, ThetaFourAtSix) {
  auto r = exhaustive_search(6, Theta{4});
  EXPECT_EQ(r.stats.visited, 112u);
  EXPECT_EQ(r.stats.connected, 112u);
  EXPECT_EQ(r.stats.planar, 99u);
  EXPECT_EQ(r.stats.free, 38u);
  const std::pair<const char*, double> pins[] = {{"E{Sw", 3.0},
                                                 {"E?~o", 2.8284271247461898},
                                                 {"EEhw", 2.8136065026483306},
                                                 {"EENg", 2.7964374026209575},
                                                 {"E[Sw", 2.7410819813819329}};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(r.ranked[i].graph6, pins[i].first);
    EXPECT_NEAR(r.ranked[i].rho, pins[i].second, kPinTol);
  }
  ASSERT_TRUE(r.reference.has_value());
  EXPECT_EQ(r.reference->graph6, "E?~o");
  EXPECT_NEAR(*r.reference->rho_closed_form, std::sqrt(8.0), 1e-15);
  EXPECT_EQ(r.reference->top_vs_reference, RhoOrdering::Greater);
  EXPECT_EQ(r.matches_theorem_extremal, false);
}

TEST(ExhaustiveSearch, BowtieAtFiveAndSix) {
  auto r6 = exhaustive_search(6, Cll{3});
  EXPECT_EQ(r6.stats.free, 58u);
  EXPECT_EQ(r6.ranked[0].graph6, "E?~w");
  EXPECT_NEAR(r6.ranked[0].rho, (1 + std::sqrt(33.0)) / 2, kPinTol);
  EXPECT_NEAR(r6.ranked[1].rho, 3.2360679774997898, kPinTol);
  EXPECT_EQ(r6.matches_theorem_extremal, true);

  auto r5 = exhaustive_search(5, Cll{3});
  EXPECT_EQ(r5.ranked[0].graph6, "DJ{");
  EXPECT_NEAR(r5.ranked[0].rho, 3.0861301976514937, kPinTol);
  EXPECT_EQ(r5.matches_theorem_extremal, false);
  EXPECT_EQ(r5.reference->graph6, "DF{");
  EXPECT_NEAR(r5.reference->rho, 3.0, kPinTol);
}

TEST(ExhaustiveSearch, ThetaFiveAtSeven) {
  auto r = exhaustive_search(7, Theta{5});
  EXPECT_EQ(r.stats.free, 175u);
  EXPECT_EQ(r.ranked[0].graph6, "F?B~w");
  EXPECT_NEAR(r.ranked[0].rho, (1 + std::sqrt(41.0)) / 2, kPinTol);
  EXPECT_EQ(r.matches_theorem_extremal, true);
}

TEST(ExhaustiveSearch, RankedListIsSortedAndVerified) {
  auto r = exhaustive_search(6, Cll{3});
  for (std::size_t i = 0; i + 1 < r.ranked.size(); ++i) {
    EXPECT_GE(r.ranked[i].rho + kDefaultGapTol, r.ranked[i + 1].rho);
    EXPECT_LE(r.ranked[i].residual, kDefaultResidualTol);
  }
  EXPECT_THROW(exhaustive_search(9, Cll{3}), InvalidArgument);
}

std::string all_graphs_of_order(std::size_t n) {
  std::string s;
  for (const auto& g : connected_graphs(n)) s += to_graph6(g) + "\n";
  return s;
}

TEST(StreamSearch, MatchesInternalEnumeration) {
  std::istringstream in(all_graphs_of_order(6));
  auto stream = exhaustive_search_stream(in, 6, Theta{4});
  auto internal = exhaustive_search(6, Theta{4});
  EXPECT_EQ(stream.source, CandidateSource::Graph6Stream);
  EXPECT_EQ(stream.stats.free, internal.stats.free);
  ASSERT_EQ(stream.ranked.size(), internal.ranked.size());
  for (std::size_t i = 0; i < stream.ranked.size(); ++i) EXPECT_EQ(stream.ranked[i].graph6, internal.ranked[i].graph6);
}

TEST(StreamSearch, MalformedLinesAndOrderMismatch) {
  std::istringstream in("A_\nC~\n\nnot graph6\nCl\nC\n");
  auto r = exhaustive_search_stream(in, 4, Cll{3});
  EXPECT_EQ(r.stats.visited, 2u);
  ASSERT_EQ(r.diagnostics.size(), 3u);
  EXPECT_EQ(r.diagnostics[0].line, 1u);
  EXPECT_NE(r.diagnostics[0].message.find("order"), std::string::npos);
  EXPECT_EQ(r.diagnostics[1].line, 4u);
  EXPECT_EQ(r.diagnostics[2].line, 6u);

  std::istringstream bad("C~\nxx\n");
  EXPECT_THROW(exhaustive_search_stream(bad, 4, Cll{3}, StreamOptions{false, true}), FormatError);
}

TEST(StreamSearch, TrustPlanarSkipsPlanarityFilter) {
  Graph k5(5);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) k5.add_edge(u, v);
  std::istringstream a(to_graph6(k5) + "\n"), b(to_graph6(k5) + "\n");
  EXPECT_EQ(exhaustive_search_stream(a, 5, Theta{8}).stats.planar, 0u);
  auto trusted = exhaustive_search_stream(b, 5, Theta{8}, StreamOptions{true, false});
  EXPECT_EQ(trusted.stats.planar, 1u);
  ASSERT_EQ(trusted.ranked.size(), 1u);
  EXPECT_FALSE(trusted.ranked[0].planar);  // re-verification still reports the truth
}

TEST(TransformAscent, NonExtremalStartHasIncreasingStep) {
  PathPartition p(repeat({{2, 1}, {1, 26}}));
  auto r = verify_transformation_ascent(p, Cll{4}, 30);
  EXPECT_FALSE(r.is_local_max);
  EXPECT_FALSE(r.is_extremal_partition);
  auto step = std::find_if(r.steps.begin(), r.steps.end(), [](const TransformStep& s) { return s.s1 == 1 && s.s2 == 1; });
  ASSERT_NE(step, r.steps.end());
  EXPECT_EQ(step->ordering, RhoOrdering::Greater);
  EXPECT_EQ(step->result.parts(), repeat({{2, 2}, {1, 24}}));
}

TEST(TransformAscent, ExtremalPartitionIsLocalMax) {
  auto r = verify_transformation_ascent(h_partition(30, 2, 2), Cll{4}, 30);
  EXPECT_TRUE(r.is_extremal_partition);
  EXPECT_TRUE(r.is_local_max);
  EXPECT_TRUE(r.steps.empty());
  EXPECT_GT(r.excluded, 0u);

  auto c55 = verify_transformation_ascent(h_partition(40, 3, 3), Cll{5}, 40);
  EXPECT_TRUE(c55.is_local_max);
  for (const auto& s : c55.steps) EXPECT_NE(s.ordering, RhoOrdering::Greater);
}

TEST(TransformAscent, RejectsBadInput) {
  EXPECT_THROW(verify_transformation_ascent(PathPartition({2, 2}), Cll{4}, 10), InvalidArgument);
  EXPECT_THROW(verify_transformation_ascent(PathPartition({3, 2}), Cll{4}, 7), InvalidArgument);
}

void expect_same(const SearchReport& a, const SearchReport& b) {
  ASSERT_EQ(a.ranked.size(), b.ranked.size());
  for (std::size_t i = 0; i < a.ranked.size(); ++i) {
    EXPECT_EQ(a.ranked[i].graph6, b.ranked[i].graph6);
    EXPECT_EQ(a.ranked[i].rho, b.ranked[i].rho);
  }
  EXPECT_EQ(a.gap_flags, b.gap_flags);
  EXPECT_EQ(a.stats.free, b.stats.free);
  EXPECT_EQ(a.matches_theorem_extremal, b.matches_theorem_extremal);
}

TEST(Determinism, ReportsDoNotDependOnWorkerCount) {
  SearchOptions one, many;
  many.jobs = 8;
  expect_same(family_search(Cll{5}, 40, one), family_search(Cll{5}, 40, many));
  expect_same(exhaustive_search(7, Theta{5}, one), exhaustive_search(7, Theta{5}, many));
}

}  // namespace
}  // namespace spex
