#pragma once

#include <span>

#include "lkc/instance.hpp"
#include "lkc/verdict.hpp"

namespace lkc {

struct MatcherTiming {
  std::size_t n = 0;
  std::size_t gamma_nodes = 0;
  std::size_t phases = 0;
  bool admissible = false;
  /// Best of the repetitions.
  double time_ms = 0.0;
};

/// Times decide_reduced on an already reduced instance without empty lists.
MatcherTiming time_matcher(const Instance& inst, int repetitions, Execution exec);

/// Least-squares slope of log(y) against log(x). Needs two or more points, all positive.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace lkc
