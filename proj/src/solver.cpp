#include "lkc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "lkc/matcher.hpp"

namespace lkc {

namespace {

void absorb(SolveStats& into, const SolveStats& leaf) {
  into.matching_phases += leaf.matching_phases;
  into.gamma_nodes = std::max(into.gamma_nodes, leaf.gamma_nodes);
}

Verdict decide_leaf(const Instance& leaf, Execution exec) {
  if (leaf.has_empty_list()) return {};
  return decide_reduced(leaf, exec);
}

Verdict finish(const Instance& inst, Verdict verdict, const ReducerStats& reducer,
               std::chrono::steady_clock::time_point start) {
  if (verdict.admissible && !verify_coloring(inst, *verdict.certificate)) {
    throw std::logic_error("leaf certificate is not an L-coloring of the input");
  }
  verdict.stats.reducer = reducer;
  verdict.stats.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

}  // namespace

Verdict decide(const Instance& inst, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Verdict verdict;
  if (inst.has_empty_list()) return finish(inst, std::move(verdict), {}, start);

  ProfileStream stream(inst, options.reducer);

  if (options.execution == Execution::kSerial) {
    while (auto leaf = stream.next()) {
      Verdict v = decide_leaf(leaf->instance, Execution::kSerial);
      ++verdict.stats.leaves_decided;
      absorb(verdict.stats, v.stats);
      if (v.admissible) {
        verdict.admissible = true;
        verdict.certificate = std::move(v.certificate);
        break;
      }
    }
    return finish(inst, std::move(verdict), stream.stats(), start);
  }

  std::vector<Instance> batch;
  std::vector<Verdict> results;
  const std::size_t batch_size = std::max<std::size_t>(options.parallel_batch, 1);
  while (true) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto leaf = stream.next();
      if (!leaf) break;
      batch.push_back(std::move(leaf->instance));
    }
    if (batch.empty()) break;

    results.assign(batch.size(), Verdict{});
    const auto count = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      results[static_cast<std::size_t>(i)] = decide_leaf(batch[static_cast<std::size_t>(i)], Execution::kSerial);
    }

    verdict.stats.leaves_decided += batch.size();
    for (auto& v : results) {
      absorb(verdict.stats, v.stats);
      if (v.admissible && !verdict.admissible) {
        verdict.admissible = true;
        verdict.certificate = std::move(v.certificate);
      }
    }
    if (verdict.admissible) break;
  }
  return finish(inst, std::move(verdict), stream.stats(), start);
}

}  // namespace lkc
