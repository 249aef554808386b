#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lkc/graph.hpp"

namespace lkc {

/// Colors are 1-based: the universe for a list-k-assignment is {1, ..., k}.
using Color = std::int32_t;

/// Sorted, duplicate-free set of colors.
using ColorList = std::vector<Color>;

/// phi[v] is the color of vertex v.
using Coloring = std::vector<Color>;

/// A graph together with a list-k-assignment. The graph is shared between
/// copies, so list surgery only pays for the lists.
class Instance {
 public:
  Instance() : graph_(std::make_shared<const Graph>()) {}
  /// Throws InputError if a list leaves [k] or the list count differs from n.
  Instance(std::shared_ptr<const Graph> graph, Color k, std::vector<ColorList> lists);
  Instance(Graph graph, Color k, std::vector<ColorList> lists);

  /// Every vertex gets the full list [k].
  static Instance with_full_lists(Graph graph, Color k);

  const Graph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Graph>& shared_graph() const noexcept { return graph_; }
  Color k() const noexcept { return k_; }
  Vertex order() const noexcept { return graph_->order(); }

  const ColorList& list(Vertex v) const { return lists_[static_cast<std::size_t>(v)]; }
  const std::vector<ColorList>& lists() const noexcept { return lists_; }

  bool has_color(Vertex v, Color c) const;
  std::size_t total_list_size() const;
  bool has_empty_list() const;

  /// Same graph, L'(v) = L(v) \ {c}. `c` need not be present.
  Instance remove_color(Vertex v, Color c) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.k_ == b.k_ && a.lists_ == b.lists_ &&
           (a.graph_ == b.graph_ || *a.graph_ == *b.graph_);
  }

 private:
  std::shared_ptr<const Graph> graph_;
  Color k_ = 1;
  std::vector<ColorList> lists_;
};

/// Removes the color of every single-color vertex from its neighbours' lists,
/// repeating until stable. The set of L-colorings is unchanged. Returns none
/// when some list runs empty (no L-coloring exists).
std::optional<Instance> propagate_forced(const Instance& inst);

/// Proper on every edge and phi(v) in L(v) for every v.
bool verify_coloring(const Instance& inst, const Coloring& phi);

/// An induced P3 whose three lists share `color`.
struct Violation {
  InducedP3 triple;
  Color color = 0;

  bool operator==(const Violation&) const = default;
};

/// Lexicographically least induced P3 (ordered as find_induced_p3) whose lists
/// intersect, with the smallest common color. None means the instance is reduced.
std::optional<Violation> find_violating_triple(const Instance& inst);

struct ValidationReport {
  bool list_range_ok = true;
  std::size_t empty_lists = 0;
  P3Packing packing;
};

ValidationReport validate(const Instance& inst, int r, Vertex cap = kDefaultPackingCap);

/// Parses the `p lkc <n> <m> <k>` text format. Throws InputError with the line number.
Instance parse_instance(std::string_view text);

/// Canonical form: header, sorted edges, one list line per vertex.
std::string write_instance(const Instance& inst);

/// Canonical bytes of (edge list, lists). Equal instances produce equal keys.
std::string dedup_key(const Instance& inst);

/// The list part of dedup_key, one bitset per vertex. Enough when the graph is shared.
std::string list_state_key(const Instance& inst);

}  // namespace lkc
