#include <algorithm>
#include <chrono>

#include "lkc/solver.hpp"

namespace lkc {

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::size_t> degree(n);
  std::vector<char> removed(n, 0);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(static_cast<Vertex>(v));

  std::vector<Vertex> stripped;
  stripped.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (best == n || degree[v] < degree[best])) best = v;
    }
    removed[best] = 1;
    stripped.push_back(static_cast<Vertex>(best));
    for (Vertex w : g.neighbors(static_cast<Vertex>(best))) {
      if (!removed[static_cast<std::size_t>(w)]) --degree[static_cast<std::size_t>(w)];
    }
  }
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

namespace {

class Backtracker {
 public:
  explicit Backtracker(const Instance& inst)
      : graph_(inst.graph()),
        order_(degeneracy_order(inst.graph())),
        position_(static_cast<std::size_t>(inst.order())),
        domains_(inst.lists()),
        phi_(static_cast<std::size_t>(inst.order()), 0) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
      position_[static_cast<std::size_t>(order_[i])] = i;
    }
  }

  bool solve() {
    for (const auto& d : domains_) {
      if (d.empty()) return false;
    }
    return assign(0);
  }

  const Coloring& coloring() const { return phi_; }

 private:
  bool assign(std::size_t index) {
    if (index == order_.size()) return true;
    const Vertex v = order_[index];
    const ColorList choices = domains_[static_cast<std::size_t>(v)];
    for (Color c : choices) {
      phi_[static_cast<std::size_t>(v)] = c;
      const std::size_t mark = trail_.size();
      bool wiped = false;
      for (Vertex w : graph_.neighbors(v)) {
        if (position_[static_cast<std::size_t>(w)] <= index) continue;
        auto& dom = domains_[static_cast<std::size_t>(w)];
        auto it = std::lower_bound(dom.begin(), dom.end(), c);
        if (it == dom.end() || *it != c) continue;
        dom.erase(it);
        trail_.emplace_back(w, c);
        if (dom.empty()) {
          wiped = true;
          break;
        }
      }
      if (!wiped && assign(index + 1)) return true;
      while (trail_.size() > mark) {
        auto [w, color] = trail_.back();
        trail_.pop_back();
        auto& dom = domains_[static_cast<std::size_t>(w)];
        dom.insert(std::lower_bound(dom.begin(), dom.end(), color), color);
      }
    }
    return false;
  }

  const Graph& graph_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<ColorList> domains_;
  std::vector<std::pair<Vertex, Color>> trail_;
  Coloring phi_;
};

}  // namespace

Verdict oracle_decide(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  Backtracker search(inst);
  Verdict verdict;
  if (search.solve()) {
    verdict.admissible = true;
    verdict.certificate = search.coloring();
  }
  verdict.stats.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

}  // namespace lkc
