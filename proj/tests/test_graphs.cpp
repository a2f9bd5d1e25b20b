#include <gtest/gtest.h>

#include <tuple>

#include "metdim/error.hpp"
#include "metdim/graphs.hpp"
#include "support/oracles.hpp"

using namespace metdim;

namespace {

KSubset S(int n, std::initializer_list<int> e) { return KSubset::from_elements(n, e); }

/// Every pair of vertices: formula distance equals BFS over the brute-force
/// adjacency.
void expect_formula_matches_bfs(Family f, int n, int k) {
  const GraphInstance g = GraphInstance::make(f, n, k);
  const auto ref = oracle::all_pairs(f, n, k);
  const auto verts = enumerate_k_subsets(n, k);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      ASSERT_EQ(distance(g, verts[i], verts[j]), ref.dist[i][j]) << g.name() << " " << i << " " << j;
}

}  // namespace

TEST(Instances, Validation) {
  EXPECT_NO_THROW(GraphInstance::johnson(6, 3));
  EXPECT_THROW(GraphInstance::johnson(5, 3), ParameterError);
  EXPECT_THROW(GraphInstance::kneser(6, 3), ParameterError);
  EXPECT_THROW(GraphInstance::kneser(300, 2), ParameterError);
  EXPECT_EQ(GraphInstance::kneser(13, 4).name(), "K(13,4)");
  EXPECT_EQ(parse_family("J"), Family::johnson);
  EXPECT_EQ(parse_family("kneser"), Family::kneser);
  EXPECT_THROW(parse_family("petersen"), ParameterError);
}

TEST(JohnsonDistance, Examples) {
  const auto g = GraphInstance::johnson(9, 3);
  EXPECT_EQ(johnson_distance(g, S(9, {1, 2, 3}), S(9, {1, 2, 3})), 0);
  EXPECT_EQ(johnson_distance(g, S(9, {1, 2, 3}), S(9, {1, 2, 4})), 1);
  const auto g7 = GraphInstance::johnson(7, 3);
  EXPECT_EQ(johnson_distance(g7, S(7, {1, 2, 3}), S(7, {4, 5, 6})), 3);
}

TEST(KneserDistance, Examples) {
  const auto petersen = GraphInstance::kneser(5, 2);
  EXPECT_EQ(kneser_distance(petersen, S(5, {1, 2}), S(5, {3, 4})), 1);
  EXPECT_EQ(kneser_distance(petersen, S(5, {1, 2}), S(5, {1, 3})), 2);
  EXPECT_EQ(GraphInstance::kneser(7, 3).distance_for_intersection(1), 3);
  EXPECT_EQ(GraphInstance::kneser(8, 3).distance_for_intersection(2), 2);
}

TEST(OddGraphDistance, Examples) {
  EXPECT_EQ(odd_graph_distance(2, S(5, {1, 2}), S(5, {1, 3})), 2);
  EXPECT_EQ(odd_graph_distance(3, S(7, {1, 2, 3}), S(7, {1, 2, 3})), 0);
  EXPECT_EQ(odd_graph_distance(3, S(7, {1, 2, 3}), S(7, {1, 4, 5})), 3);
}

TEST(Distance, RejectsForeignVertices) {
  const auto g = GraphInstance::johnson(6, 2);
  EXPECT_THROW(distance(g, S(6, {1, 2}), S(7, {1, 3})), GroundSetMismatch);
  EXPECT_THROW(distance(g, S(6, {1, 2}), S(6, {1, 3, 4})), ParameterError);
}

TEST(Distance, GenericDispatch) {
  EXPECT_EQ(distance(GraphInstance::johnson(6, 2), S(6, {1, 2}), S(6, {3, 4})), 2);
  EXPECT_EQ(distance(GraphInstance::kneser(5, 2), S(5, {1, 2}), S(5, {1, 3})), 2);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(GraphInstance::johnson(9, 3).diameter(), 3);
  EXPECT_EQ(GraphInstance::kneser(9, 3).diameter(), 2);
  EXPECT_EQ(GraphInstance::kneser(10, 4).diameter(), 3);
  EXPECT_EQ(GraphInstance::kneser(7, 3).diameter(), 3);
  EXPECT_EQ(diameter(GraphInstance::kneser(5, 2)), 2);
}

TEST(Diameter, MatchesBfsEccentricities) {
  for (int n = 4; n <= 9; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      const auto ref = oracle::all_pairs(Family::kneser, n, k);
      int worst = 0;
      for (const auto& row : ref.dist)
        for (int d : row) worst = std::max(worst, d);
      EXPECT_EQ(GraphInstance::kneser(n, k).diameter(), worst) << n << " " << k;
    }
}

TEST(FormulaVsBfs, JohnsonSmall) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; 2 * k <= n; ++k) expect_formula_matches_bfs(Family::johnson, n, k);
}

TEST(FormulaVsBfs, KneserSmall) {
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; 2 * k < n; ++k) expect_formula_matches_bfs(Family::kneser, n, k);
}

TEST(FormulaVsBfs, LibraryBfsAgrees) {
  for (auto [f, n, k] : {std::tuple{Family::johnson, 8, 3}, std::tuple{Family::kneser, 9, 3},
                         std::tuple{Family::kneser, 10, 4}}) {
    const GraphInstance g = GraphInstance::make(f, n, k);
    const auto verts = enumerate_k_subsets(n, k);
    for (std::size_t i = 0; i < verts.size(); i += 7) {
      const auto from = bfs_distances_from(g, verts[i]);
      for (std::size_t j = 0; j < verts.size(); ++j) ASSERT_EQ(from[j], distance(g, verts[i], verts[j]));
    }
    EXPECT_EQ(bfs_distance(g, verts[0], verts.back()), distance(g, verts[0], verts.back()));
  }
}

TEST(Bfs, RefusesLargeInstances) {
  const auto g = GraphInstance::kneser(40, 5);
  EXPECT_THROW(bfs_distances_from(g, S(40, {1, 2, 3, 4, 5})), InstanceTooLarge);
}

TEST(Neighbours, DegreesMatchDefinitions) {
  const auto j = GraphInstance::johnson(8, 3);
  EXPECT_EQ(neighbours(j, S(8, {1, 2, 3})).size(), 3u * 5u);
  const auto k = GraphInstance::kneser(8, 3);
  EXPECT_EQ(neighbours(k, S(8, {1, 2, 3})).size(), binomial(5, 3));
}

TEST(OddGraphs, ParityRuleAgreesWithKneserFormula) {
  for (int k = 1; k <= 5; ++k) {
    const GraphInstance g = GraphInstance::kneser(2 * k + 1, k);
    ASSERT_TRUE(g.is_odd_graph());
    const auto verts = enumerate_k_subsets(2 * k + 1, k);
    for (std::size_t i = 0; i < verts.size(); i += 3)
      for (const auto& w : verts) ASSERT_EQ(odd_graph_distance(k, verts[i], w), kneser_distance(g, verts[i], w));
  }
}
