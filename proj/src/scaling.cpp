#include "lkc/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lkc/matcher.hpp"

namespace lkc {

MatcherTiming time_matcher(const Instance& inst, int repetitions, Execution exec) {
  MatcherTiming timing;
  timing.n = static_cast<std::size_t>(inst.order());
  timing.time_ms = std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < std::max(repetitions, 1); ++rep) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = decide_reduced(inst, exec);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    timing.time_ms = std::min(timing.time_ms, ms);
    timing.gamma_nodes = v.stats.gamma_nodes;
    timing.phases = v.stats.matching_phases;
    timing.admissible = v.admissible;
  }
  return timing;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need two or more points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw std::invalid_argument("log-log fit needs positive data");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw std::invalid_argument("x values must differ");
  return sxy / sxx;
}

}  // namespace lkc
