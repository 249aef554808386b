#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lkc/instance.hpp"
#include "lkc/verdict.hpp"

namespace lkc {

struct ProfileLeaf {
  /// Same graph as the root; every list a subset of the root's.
  Instance instance;
  std::size_t depth = 0;
};

inline constexpr std::size_t kDefaultDedupCap = 1'000'000;

struct ReducerOptions {
  /// Visited list states remembered; 0 disables dedup.
  std::size_t dedup_cap = kDefaultDedupCap;
  /// Drop nodes that cannot be colored: those with an empty list, after
  /// forced-color propagation when that is on. Off by default so the stream
  /// is the plain branching profile.
  bool prune_dead = false;
  /// Apply propagate_forced to every node before branching on it.
  bool propagate = false;
};

/// Lazily enumerates a profile of reduced sub-instances: the root is colorable
/// iff some leaf is. Depth-first; at a node with violating triple x - y - z
/// sharing color c, the children drop c from x, then y, then z. A proper
/// coloring cannot give c to all three (y is adjacent to both ends), so some
/// child keeps it. Each step shrinks the total list size, so depth <= sum |L(v)|.
///
/// Single consumer. No work is done beyond the leaf returned by the last next().
class ProfileStream {
 public:
  explicit ProfileStream(Instance root, ReducerOptions options = {});

  std::optional<ProfileLeaf> next();

  const ReducerStats& stats() const noexcept { return stats_; }

 private:
  struct Node {
    Instance instance;
    std::size_t depth = 0;
    bool expanded = false;
    std::optional<Violation> violation;
    int next_child = 0;
  };

  bool first_visit(const Instance& inst);
  void push(Instance inst, std::size_t depth);

  std::vector<Node> stack_;
  std::unordered_set<std::string> visited_;
  ReducerOptions options_;
  ReducerStats stats_;
};

/// Drains a ProfileStream. Convenience for tests and small instances.
std::vector<ProfileLeaf> reduce_to_profile(const Instance& inst, ReducerOptions options = {});

}  // namespace lkc
