#include "lkc/matcher.hpp"

#include <gtest/gtest.h>

#include "lkc/reducer.hpp"
#include "lkc/solver.hpp"
#include "test_support.hpp"

namespace lkc {
namespace {

using testing::brute_force_max_matching;
using testing::enumerate_colorable;
using testing::linked;
using testing::make_instance;
using testing::random_instance;

std::vector<Instance> reduced_instances(std::uint64_t seed, std::size_t want) {
  SplitMix64 rng(seed);
  return testing::sample_reduced(rng, want, 10, 4);
}

bool has_augmenting_path(const BipartiteGraph& g, const Matching& m) {
  std::vector<char> seen_left(static_cast<std::size_t>(g.left), 0);
  std::vector<int> frontier;
  for (int a = 0; a < g.left; ++a) {
    if (m.left_mate[static_cast<std::size_t>(a)] < 0) {
      seen_left[static_cast<std::size_t>(a)] = 1;
      frontier.push_back(a);
    }
  }
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    int a = frontier[i];
    for (int e = g.offsets[static_cast<std::size_t>(a)]; e < g.offsets[static_cast<std::size_t>(a) + 1]; ++e) {
      int b = g.targets[static_cast<std::size_t>(e)];
      int mate = m.right_mate[static_cast<std::size_t>(b)];
      if (mate < 0) return true;
      if (!seen_left[static_cast<std::size_t>(mate)]) {
        seen_left[static_cast<std::size_t>(mate)] = 1;
        frontier.push_back(mate);
      }
    }
  }
  return false;
}

void expect_valid_matching(const BipartiteGraph& g, const Matching& m) {
  std::size_t count = 0;
  for (int a = 0; a < g.left; ++a) {
    int b = m.left_mate[static_cast<std::size_t>(a)];
    if (b < 0) continue;
    ++count;
    EXPECT_EQ(m.right_mate[static_cast<std::size_t>(b)], a);
    bool edge = false;
    for (int e = g.offsets[static_cast<std::size_t>(a)]; e < g.offsets[static_cast<std::size_t>(a) + 1]; ++e) {
      edge |= g.targets[static_cast<std::size_t>(e)] == b;
    }
    EXPECT_TRUE(edge);
  }
  EXPECT_EQ(count, m.size);
}

TEST(DecomposeTest, EdgeAndIsolatedPair) {
  auto edge = decompose(make_instance(2, {{0, 1}}, 1, {{1}, {1}}));
  EXPECT_EQ(edge.components[0], (std::vector<VertexSet>{{0, 1}}));
  auto pair = decompose(make_instance(2, {}, 1, {{1}, {1}}));
  EXPECT_EQ(pair.components[0], (std::vector<VertexSet>{{0}, {1}}));
}

TEST(DecomposeTest, NonCliqueClassIsNamed) {
  auto p3 = make_instance(3, {{0, 1}, {1, 2}}, 2, {{1}, {1, 2}, {1}});
  try {
    decompose(p3);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("color 1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("{0, 1, 2}"), std::string::npos);
  }
  EXPECT_THROW(decompose(p3, Execution::kParallel), PreconditionError);
  EXPECT_THROW(decide_reduced(p3), PreconditionError);
}

TEST(DecomposeTest, ComponentsAreCliquesAndParallelMatchesSerial) {
  for (const auto& inst : reduced_instances(101, 200)) {
    auto d = decompose(inst);
    for (Color c = 1; c <= inst.k(); ++c) {
      std::size_t covered = 0;
      for (const auto& comp : d.components[static_cast<std::size_t>(c - 1)]) {
        covered += comp.size();
        for (Vertex a : comp)
          for (Vertex b : comp)
            if (a != b) EXPECT_TRUE(linked(inst.graph(), a, b));
      }
      EXPECT_EQ(covered, d.members[static_cast<std::size_t>(c - 1)].size());
    }
    auto p = decompose(inst, Execution::kParallel);
    EXPECT_EQ(p.components, d.components);
  }
}

TEST(BuildGammaTest, CountsMatchFormulas) {
  auto g = build_gamma(decompose(make_instance(2, {{0, 1}}, 1, {{1}, {1}})));
  EXPECT_EQ(g.graph.left, 2);
  EXPECT_EQ(g.graph.right, 1);
  EXPECT_EQ(g.graph.edge_count(), 2u);
  EXPECT_EQ(g.b_labels[0].color, 1);
  EXPECT_EQ(g.b_labels[0].clique, (VertexSet{0, 1}));

  for (const auto& inst : reduced_instances(202, 200)) {
    auto d = decompose(inst);
    auto gamma = build_gamma(d);
    std::size_t cliques = 0;
    for (const auto& per_color : d.components) cliques += per_color.size();
    EXPECT_EQ(gamma.graph.left, inst.order());
    EXPECT_EQ(static_cast<std::size_t>(gamma.graph.right), cliques);
    EXPECT_EQ(gamma.graph.edge_count(), inst.total_list_size());
    EXPECT_LE(gamma.node_count(), (static_cast<std::size_t>(inst.k()) + 1) * static_cast<std::size_t>(inst.order()));
    for (Vertex v = 0; v < inst.order(); ++v) {
      auto deg = gamma.graph.offsets[static_cast<std::size_t>(v) + 1] - gamma.graph.offsets[static_cast<std::size_t>(v)];
      EXPECT_EQ(static_cast<std::size_t>(deg), inst.list(v).size());
    }
    for (std::size_t b = 1; b < gamma.b_labels.size(); ++b) {
      const auto& prev = gamma.b_labels[b - 1];
      const auto& cur = gamma.b_labels[b];
      EXPECT_TRUE(prev.color < cur.color || (prev.color == cur.color && prev.clique.front() < cur.clique.front()));
    }
  }
}

TEST(HopcroftKarpTest, SmallCases) {
  std::vector<std::pair<int, int>> k33;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) k33.emplace_back(a, b);
  EXPECT_EQ(hopcroft_karp(BipartiteGraph::from_edges(3, 3, k33)).size, 3u);

  std::vector<std::pair<int, int>> star;
  for (int b = 0; b < 5; ++b) star.emplace_back(0, b);
  EXPECT_EQ(hopcroft_karp(BipartiteGraph::from_edges(1, 5, star)).size, 1u);

  EXPECT_EQ(hopcroft_karp(BipartiteGraph::from_edges(0, 0, {})).size, 0u);
  EXPECT_EQ(hopcroft_karp(BipartiteGraph::from_edges(3, 0, {})).size, 0u);
}

TEST(HopcroftKarpTest, MaximumAndNoAugmentingPath) {
  SplitMix64 rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    const int left = static_cast<int>(rng.below(13));
    const int right = static_cast<int>(rng.below(13));
    const double p = rng.unit();
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < left; ++a)
      for (int b = 0; b < right; ++b)
        if (rng.chance(p)) edges.emplace_back(a, b);
    auto g = BipartiteGraph::from_edges(left, right, edges);
    auto m = hopcroft_karp(g);
    expect_valid_matching(g, m);
    EXPECT_FALSE(has_augmenting_path(g, m));
    EXPECT_EQ(static_cast<int>(m.size), brute_force_max_matching(left, right, edges));

    // Relabel both sides; the size must not move.
    auto pl = testing::random_permutation(rng, left);
    auto pr = testing::random_permutation(rng, right);
    std::vector<std::pair<int, int>> relabeled;
    for (auto [a, b] : edges) relabeled.emplace_back(pl[static_cast<std::size_t>(a)], pr[static_cast<std::size_t>(b)]);
    EXPECT_EQ(hopcroft_karp(BipartiteGraph::from_edges(left, right, relabeled)).size, m.size);
  }
}

TEST(DecideReducedTest, SmallCases) {
  EXPECT_FALSE(decide_reduced(make_instance(2, {{0, 1}}, 1, {{1}, {1}})).admissible);
  auto pair = decide_reduced(make_instance(2, {}, 1, {{1}, {1}}));
  ASSERT_TRUE(pair.admissible);
  EXPECT_EQ(*pair.certificate, (Coloring{1, 1}));
  auto tri = decide_reduced(make_instance(3, {{0, 1}, {1, 2}, {0, 2}}, 3, {{1}, {2}, {3}}));
  ASSERT_TRUE(tri.admissible);
  EXPECT_EQ(*tri.certificate, (Coloring{1, 2, 3}));
  EXPECT_TRUE(decide_reduced(make_instance(0, {}, 2, {})).admissible);
  EXPECT_THROW(decide_reduced(make_instance(1, {}, 2, {{}})), PreconditionError);
}

TEST(DecideReducedTest, AgreesWithOracles) {
  for (const auto& inst : reduced_instances(303, 500)) {
    auto v = decide_reduced(inst);
    auto o = oracle_decide(inst);
    ASSERT_EQ(v.admissible, o.admissible) << write_instance(inst);
    if (inst.order() <= 7) EXPECT_EQ(v.admissible, enumerate_colorable(inst));
    if (v.admissible) EXPECT_TRUE(verify_coloring(inst, *v.certificate));
    EXPECT_EQ(decide_reduced(inst, Execution::kParallel).certificate, v.certificate);
  }
}

TEST(ExtractColoringTest, RejectsUnsaturatedMatching) {
  auto inst = make_instance(2, {{0, 1}}, 1, {{1}, {1}});
  auto gamma = build_gamma(decompose(inst));
  auto m = hopcroft_karp(gamma.graph);
  EXPECT_THROW(extract_coloring(inst, gamma, m), std::logic_error);
}

}  // namespace
}  // namespace lkc
