#pragma once

#include <cstddef>
#include <optional>

#include "lkc/instance.hpp"

namespace lkc {

/// Serial code is the reference; kParallel runs the OpenMP kernels.
enum class Execution { kSerial, kParallel };

struct ReducerStats {
  std::size_t leaves = 0;
  /// Search-tree nodes visited, leaves included.
  std::size_t branches = 0;
  std::size_t max_depth = 0;
  std::size_t dedup_hits = 0;
};

struct SolveStats {
  std::size_t leaves_decided = 0;
  ReducerStats reducer;
  std::size_t matching_phases = 0;
  /// Largest |V(Gamma)| built during the solve.
  std::size_t gamma_nodes = 0;
  double time_ms = 0.0;
};

struct Verdict {
  bool admissible = false;
  /// Present iff admissible.
  std::optional<Coloring> certificate;
  SolveStats stats;
};

}  // namespace lkc
