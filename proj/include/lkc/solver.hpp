#pragma once

#include "lkc/instance.hpp"
#include "lkc/reducer.hpp"
#include "lkc/verdict.hpp"

namespace lkc {

struct SolveOptions {
  Execution execution = Execution::kSerial;
  /// Dead-node pruning and forced-color propagation are sound shortcuts: they
  /// only discard list states with no L-coloring.
  ReducerOptions reducer{kDefaultDedupCap, true, true};
  /// Leaves pulled from the profile per parallel round.
  std::size_t parallel_batch = 64;
};

/// Screens empty lists, streams the profile, and decides each leaf with the
/// matching kernel; stops at the first colorable leaf. The certificate is
/// checked against `inst` itself before returning.
///
/// Parallel mode decides leaves in batches and keeps the earliest colorable one
/// in stream order, so verdict and certificate match the serial path.
Verdict decide(const Instance& inst, const SolveOptions& options = {});

/// Exact backtracking with forward checking over a smallest-last (degeneracy)
/// order. Exponential; meant for n up to about 20.
Verdict oracle_decide(const Instance& inst);

/// Smallest-last order: repeatedly strip a minimum-degree vertex (ties by id)
/// and return the stripped sequence reversed.
std::vector<Vertex> degeneracy_order(const Graph& g);

}  // namespace lkc
