#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <sstream>
#include <tuple>

#include "metdim/designs.hpp"
#include "metdim/error.hpp"
#include "metdim/verify.hpp"
#include "support/oracles.hpp"

using namespace metdim;

namespace {

std::vector<KSubset> random_family(std::mt19937_64& rng, int n, int k, int count) {
  std::vector<KSubset> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_subset(rng, n, k));
  return out;
}

}  // namespace

TEST(Verify, FanoResolvesJohnson73) {
  const auto fano = projective_plane(2).blocks;
  EXPECT_TRUE(verify_resolving(GraphInstance::johnson(7, 3), fano).resolved);
  EXPECT_TRUE(verify_johnson_by_pairs(7, 3, fano).resolved);
  EXPECT_TRUE(kneser_set_resolves_johnson(7, 3, fano));
}

TEST(Verify, AllVerticesResolve) {
  for (auto g : {GraphInstance::johnson(7, 3), GraphInstance::kneser(8, 3)}) {
    const auto all = enumerate_k_subsets(g.n(), g.k());
    const auto r = verify_resolving(g, all);
    EXPECT_TRUE(r.resolved);
    EXPECT_EQ(r.vertices_checked, all.size());
    EXPECT_EQ(r.landmarks_used, all.size());
  }
}

TEST(Verify, EmptySetFailsWithLeastWitness) {
  const auto r = verify_resolving(GraphInstance::johnson(5, 2), {});
  ASSERT_FALSE(r.resolved);
  EXPECT_EQ(r.witness->first.to_string(), "1 2");
  EXPECT_EQ(r.witness->second.to_string(), "1 3");
  const auto p = verify_johnson_by_pairs(5, 1, {});
  ASSERT_FALSE(p.resolved);
  EXPECT_EQ(p.witness->first.to_string(), "1");
  EXPECT_EQ(p.witness->second.to_string(), "2");
  EXPECT_TRUE(kneser_set_resolves_johnson(9, 3, {}));
}

TEST(Verify, ProjectivePlaneOfOrderThreeFailsOnKneser) {
  const auto lines = projective_plane(3).blocks;
  const auto g = GraphInstance::kneser(13, 4);
  const auto r = verify_resolving(g, lines);
  ASSERT_FALSE(r.resolved);
  EXPECT_TRUE(witness_is_genuine(g, lines, *r.witness));
  // {p} ∪ T against {p'} ∪ T for a common 3-set T.
  EXPECT_EQ(intersection_size(r.witness->first, r.witness->second), 3);
}

TEST(Verify, WitnessIsLeastCollidingPair) {
  std::mt19937_64 rng(oracle::test_seed());
  const auto ref = oracle::all_pairs(Family::kneser, 8, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto S = random_family(rng, 8, 3, 1 + trial % 6);
    const auto r = verify_resolving(GraphInstance::kneser(8, 3), S);
    const auto idx = oracle::indices_of(ref, S);
    const int N = static_cast<int>(ref.vertices.size());
    // The least first vertex belongs to the least class; take its least partner.
    std::optional<std::pair<int, int>> least;
    for (int a = 0; a < N && !least; ++a)
      for (int b = a + 1; b < N; ++b) {
        bool same = true;
        for (int l : idx) same = same && ref.dist[l][a] == ref.dist[l][b];
        if (same) {
          least = std::pair{a, b};
          break;
        }
      }
    ASSERT_EQ(r.resolved, !least.has_value());
    if (least) {
      EXPECT_EQ(r.witness->first.elements(), ref.vertices[least->first]);
      EXPECT_EQ(r.witness->second.elements(), ref.vertices[least->second]);
    }
  }
}

TEST(Verify, AgreesWithBruteForceOracle) {
  std::mt19937_64 rng(oracle::test_seed());
  for (auto [f, n, k] : {std::tuple{Family::johnson, 7, 3}, std::tuple{Family::kneser, 7, 2},
                         std::tuple{Family::kneser, 9, 3}, std::tuple{Family::johnson, 8, 2}}) {
    const auto ref = oracle::all_pairs(f, n, k);
    const auto g = GraphInstance::make(f, n, k);
    for (int trial = 0; trial < 60; ++trial) {
      const auto S = random_family(rng, n, k, 2 + trial % 12);
      ASSERT_EQ(verify_resolving(g, S).resolved, oracle::resolves(ref, oracle::indices_of(ref, S)));
    }
  }
}

TEST(Verify, BfsOracleAgreesWithFormula) {
  std::mt19937_64 rng(oracle::test_seed());
  for (auto [f, n, k] : {std::tuple{Family::johnson, 8, 3}, std::tuple{Family::kneser, 10, 3},
                         std::tuple{Family::kneser, 7, 3}}) {
    const auto g = GraphInstance::make(f, n, k);
    for (int trial = 0; trial < 15; ++trial) {
      const auto S = random_family(rng, n, k, 3 + trial);
      VerifyOptions bfs;
      bfs.oracle = Oracle::bfs;
      const auto a = verify_resolving(g, S);
      auto b = verify_resolving(g, S, bfs);
      EXPECT_EQ(b.oracle, Oracle::bfs);
      b.oracle = Oracle::formula;
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Verify, ReportIndependentOfWorkerCount) {
  std::mt19937_64 rng(oracle::test_seed());
  const auto g = GraphInstance::kneser(14, 4);
  for (int trial = 0; trial < 6; ++trial) {
    const auto S = random_family(rng, 14, 4, 10 + 3 * trial);
    const auto base = verify_resolving(g, S);
    for (unsigned w : {2u, 3u, 8u}) {
      VerifyOptions o;
      o.workers = w;
      EXPECT_EQ(verify_resolving(g, S, o), base);
    }
  }
}

TEST(Verify, PairCriterionAgreesOnJohnson) {
  std::mt19937_64 rng(oracle::test_seed());
  for (int n = 4; n <= 9; ++n)
    for (int k = 1; k <= 4 && 2 * k <= n; ++k) {
      const auto g = GraphInstance::johnson(n, k);
      for (int trial = 0; trial < 200; ++trial) {
        const auto S = random_family(rng, n, k, 1 + trial % (n + 2));
        const auto a = verify_resolving(g, S);
        const auto b = verify_johnson_by_pairs(n, k, S);
        ASSERT_EQ(a.resolved, b.resolved) << n << " " << k << " trial " << trial;
        if (!b.resolved) ASSERT_TRUE(witness_is_genuine(g, S, *b.witness));
      }
    }
}

TEST(Verify, KneserResolvingSetsResolveJohnson) {
  std::mt19937_64 rng(oracle::test_seed());
  for (int trial = 0; trial < 100; ++trial) {
    const auto S = random_family(rng, 9, 3, 6 + trial % 10);
    ASSERT_TRUE(kneser_set_resolves_johnson(9, 3, S));
  }
}

TEST(Verify, SupersetsStayResolving) {
  std::mt19937_64 rng(oracle::test_seed());
  const auto g = GraphInstance::kneser(9, 3);
  int resolved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto S = random_family(rng, 9, 3, 12 + trial % 8);
    if (!verify_resolving(g, S).resolved) continue;
    ++resolved;
    S.push_back(oracle::random_subset(rng, 9, 3));
    S.push_back(oracle::random_subset(rng, 9, 3));
    EXPECT_TRUE(verify_resolving(g, S).resolved);
  }
  EXPECT_GT(resolved, 0);
}

TEST(Verify, BudgetIsEnforced) {
  VerifyOptions o;
  o.budget = 100;
  EXPECT_THROW(verify_resolving(GraphInstance::kneser(12, 4), {}, o), InstanceTooLarge);
}

TEST(Verify, RejectsLandmarksOfWrongShape) {
  EXPECT_THROW(verify_resolving(GraphInstance::kneser(9, 3), std::vector{KSubset::from_elements(9, {1, 2})}),
               ParameterError);
}

TEST(Signature, ListsDistances) {
  const auto g = GraphInstance::kneser(5, 2);
  const std::vector S{KSubset::from_elements(5, {1, 2}), KSubset::from_elements(5, {3, 4})};
  EXPECT_EQ(signature(g, KSubset::from_elements(5, {1, 3}), S), (std::vector<int>{2, 2}));
}

TEST(Reports, JsonRoundTrip) {
  const auto lines = projective_plane(3).blocks;
  const auto r = verify_resolving(GraphInstance::kneser(13, 4), lines);
  EXPECT_EQ(report_from_json(to_json(r)), r);
  const auto ok = verify_resolving(GraphInstance::johnson(7, 3), projective_plane(2).blocks);
  EXPECT_EQ(report_from_json(to_json(ok)), ok);
  EXPECT_THROW(report_from_json("{not json"), ParseError);
}

TEST(Reports, TextHasWitnessLines) {
  const auto r = verify_resolving(GraphInstance::kneser(13, 4), projective_plane(3).blocks);
  const std::string text = to_text(r);
  EXPECT_NE(text.find("resolved=false"), std::string::npos);
  EXPECT_NE(text.find("witness_u="), std::string::npos);
}

TEST(CandidateFiles, RoundTrip) {
  CandidateSet set{Family::kneser, 7, 3, projective_plane(2).blocks};
  std::stringstream buf;
  write_candidate_set(buf, set);
  const CandidateSet back = read_candidate_set(buf);
  EXPECT_EQ(back.family, set.family);
  EXPECT_EQ(back.n, 7);
  EXPECT_EQ(back.k, 3);
  EXPECT_EQ(back.members, set.members);
}

TEST(CandidateFiles, ErrorsCarryLineNumbers) {
  std::stringstream truncated("# kneser 7 3\n1 2 3\n\n4 5\n");
  try {
    read_candidate_set(truncated);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  std::stringstream header("kneser 7 3\n");
  EXPECT_THROW(read_candidate_set(header), ParseError);
  std::stringstream range("# johnson 7 3\n1 2 9\n");
  try {
    read_candidate_set(range);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}
