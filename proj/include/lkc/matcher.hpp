#pragma once

// Decision kernel for reduced instances (no induced P3 whose three lists share
// a color). Every color class G_i = G[{v : i in L(v)}] is then a disjoint union
// of cliques, and the instance is colorable iff the bipartite graph joining
// each vertex to the (color, clique) pairs containing it has a matching that
// covers every vertex.

#include <stdexcept>
#include <vector>

#include "lkc/instance.hpp"
#include "lkc/verdict.hpp"

namespace lkc {

/// The instance handed to the matcher was not reduced.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ColorClassDecomposition {
  Vertex n = 0;
  Color k = 0;
  /// members[i - 1]: vertices whose list contains color i, ascending.
  std::vector<VertexSet> members;
  /// components[i - 1]: cliques of G_i ordered by minimum vertex.
  std::vector<std::vector<VertexSet>> components;
};

/// Throws PreconditionError naming the color and component if some G_i
/// component is not a clique.
ColorClassDecomposition decompose(const Instance& inst, Execution exec = Execution::kSerial);

/// Left nodes 0..left-1, right nodes 0..right-1, adjacency stored from the left (CSR).
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<int> offsets{0};
  std::vector<int> targets;

  static BipartiteGraph from_edges(int left, int right, const std::vector<std::pair<int, int>>& edges);

  std::size_t edge_count() const { return targets.size(); }
};

struct GammaGraph {
  struct Label {
    Color color = 0;
    VertexSet clique;
  };

  /// Left side is A (one node per vertex), right side is B.
  BipartiteGraph graph;
  /// One label per B-node: colors ascending, then cliques by minimum vertex.
  std::vector<Label> b_labels;

  std::size_t node_count() const {
    return static_cast<std::size_t>(graph.left) + static_cast<std::size_t>(graph.right);
  }
};

GammaGraph build_gamma(const ColorClassDecomposition& d);

struct Matching {
  /// left_mate[a] is the matched right node or -1.
  std::vector<int> left_mate;
  std::vector<int> right_mate;
  std::size_t size = 0;
  /// BFS phases that found at least one augmenting path.
  std::size_t phases = 0;

  bool saturates_left() const { return size == left_mate.size(); }
};

/// Maximum-cardinality matching by Hopcroft-Karp.
Matching hopcroft_karp(const BipartiteGraph& g);

/// Reads phi(v) off the B-node matched to a_v and re-verifies it.
/// Throws std::logic_error if the matching does not cover A or phi is not an L-coloring.
Coloring extract_coloring(const Instance& inst, const GammaGraph& gamma, const Matching& m);

/// Requires a reduced instance without empty lists (PreconditionError otherwise).
Verdict decide_reduced(const Instance& inst, Execution exec = Execution::kSerial);

}  // namespace lkc
