#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lkc {

using Vertex = std::int32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed caller input: bad vertex ids, self-loops, bad files.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based source line, 0 when not tied to a file.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);
  /// Duplicate edges are merged; self-loops and out-of-range ids throw InputError.
  Graph(Vertex n, std::span<const Edge> edges);

  Vertex order() const noexcept { return static_cast<Vertex>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }

  /// Binary search in the adjacency of the lower-degree endpoint.
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Three vertices inducing a path x - y - z with y in the middle.
struct InducedP3 {
  Vertex x = 0;
  Vertex y = 0;
  Vertex z = 0;

  bool operator==(const InducedP3&) const = default;
};

struct InducedSubgraph {
  Graph graph;
  /// old id -> new id, or -1 for vertices outside the kept set.
  std::vector<Vertex> old_to_new;
};

/// Sorts and deduplicates; does not range-check.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Components sorted internally and ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);

/// True iff every connected component is a clique (a cluster graph).
bool is_p3_free(const Graph& g);

/// Lexicographically least (y, x, z) with x < z, xy and yz edges, xz a non-edge.
std::optional<InducedP3> find_induced_p3(const Graph& g);

/// Every induced P3 of g in the same order find_induced_p3 scans them.
std::vector<InducedP3> all_induced_p3s(const Graph& g);

struct P3Packing {
  enum class Status { kFree, kWitness, kSkipped };
  Status status = Status::kFree;
  /// Pairwise vertex-disjoint induced P3s; filled only for kWitness.
  std::vector<InducedP3> witness;
};

inline constexpr Vertex kDefaultPackingCap = 60;

/// Exact search for r vertex-disjoint induced P3s. Backtracking over triples,
/// exponential in r in the worst case; refuses with kSkipped above `cap` vertices.
P3Packing find_disjoint_induced_p3s(const Graph& g, int r, Vertex cap = kDefaultPackingCap);

}  // namespace lkc
