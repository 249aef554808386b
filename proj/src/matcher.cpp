#include "lkc/matcher.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lkc {

namespace {

std::string describe(Color color, const VertexSet& component) {
  std::string s = "color " + std::to_string(color) + " class component {";
  for (std::size_t i = 0; i < component.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(component[i]);
  }
  return s + "} is not a clique";
}

// Components of G_color as cliques. `stamp` and `seen` are per-thread scratch
// tagged with the color, so they never need clearing between classes.
std::vector<VertexSet> clique_components(const Graph& g, Color color, const VertexSet& members,
                                         std::vector<Color>& stamp, std::vector<Color>& seen,
                                         std::string& error) {
  for (Vertex v : members) stamp[static_cast<std::size_t>(v)] = color;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root : members) {
    if (seen[static_cast<std::size_t>(root)] == color) continue;
    VertexSet component;
    seen[static_cast<std::size_t>(root)] = color;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (stamp[static_cast<std::size_t>(w)] == color && seen[static_cast<std::size_t>(w)] != color) {
          seen[static_cast<std::size_t>(w)] = color;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    // Connected, so a clique iff each member has |C| - 1 neighbours inside the class.
    for (Vertex v : component) {
      std::size_t inside = 0;
      for (Vertex w : g.neighbors(v)) inside += stamp[static_cast<std::size_t>(w)] == color;
      if (inside + 1 != component.size()) {
        if (error.empty()) error = describe(color, component);
        break;
      }
    }
    out.push_back(std::move(component));
  }
  return out;
}

}  // namespace

ColorClassDecomposition decompose(const Instance& inst, Execution exec) {
  const Graph& g = inst.graph();
  const auto n = static_cast<std::size_t>(inst.order());
  const Color k = inst.k();

  ColorClassDecomposition d;
  d.n = inst.order();
  d.k = k;
  d.members.resize(static_cast<std::size_t>(k));
  d.components.resize(static_cast<std::size_t>(k));
  for (Vertex v = 0; v < inst.order(); ++v) {
    for (Color c : inst.list(v)) d.members[static_cast<std::size_t>(c - 1)].push_back(v);
  }

  std::vector<std::string> errors(static_cast<std::size_t>(k));
  if (exec == Execution::kParallel) {
#pragma omp parallel
    {
      std::vector<Color> stamp(n, 0);
      std::vector<Color> seen(n, 0);
#pragma omp for schedule(dynamic)
      for (Color c = 1; c <= k; ++c) {
        auto i = static_cast<std::size_t>(c - 1);
        d.components[i] = clique_components(g, c, d.members[i], stamp, seen, errors[i]);
      }
    }
  } else {
    std::vector<Color> stamp(n, 0);
    std::vector<Color> seen(n, 0);
    for (Color c = 1; c <= k; ++c) {
      auto i = static_cast<std::size_t>(c - 1);
      d.components[i] = clique_components(g, c, d.members[i], stamp, seen, errors[i]);
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw PreconditionError(e);
  }
  return d;
}

BipartiteGraph BipartiteGraph::from_edges(int left, int right,
                                          const std::vector<std::pair<int, int>>& edges) {
  BipartiteGraph g;
  g.left = left;
  g.right = right;
  g.offsets.assign(static_cast<std::size_t>(left) + 1, 0);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= left || b < 0 || b >= right) throw InputError("bipartite edge out of range");
    ++g.offsets[static_cast<std::size_t>(a) + 1];
  }
  for (std::size_t i = 1; i < g.offsets.size(); ++i) g.offsets[i] += g.offsets[i - 1];
  g.targets.resize(edges.size());
  std::vector<int> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (auto [a, b] : edges) g.targets[static_cast<std::size_t>(cursor[static_cast<std::size_t>(a)]++)] = b;
  return g;
}

GammaGraph build_gamma(const ColorClassDecomposition& d) {
  GammaGraph gamma;
  auto& bg = gamma.graph;
  bg.left = d.n;
  bg.offsets.assign(static_cast<std::size_t>(d.n) + 1, 0);

  for (Color c = 1; c <= d.k; ++c) {
    for (const auto& clique : d.components[static_cast<std::size_t>(c - 1)]) {
      for (Vertex v : clique) ++bg.offsets[static_cast<std::size_t>(v) + 1];
      gamma.b_labels.push_back({c, clique});
    }
  }
  for (std::size_t i = 1; i < bg.offsets.size(); ++i) bg.offsets[i] += bg.offsets[i - 1];
  bg.right = static_cast<int>(gamma.b_labels.size());
  bg.targets.resize(static_cast<std::size_t>(bg.offsets.back()));

  // B-nodes are visited in id order, so each a_v's targets come out ascending.
  std::vector<int> cursor(bg.offsets.begin(), bg.offsets.end() - 1);
  for (int b = 0; b < bg.right; ++b) {
    for (Vertex v : gamma.b_labels[static_cast<std::size_t>(b)].clique) {
      bg.targets[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = b;
    }
  }

  const auto bound = (static_cast<std::size_t>(d.k) + 1) * static_cast<std::size_t>(d.n);
  if (gamma.node_count() > bound) {
    throw std::logic_error("Gamma has " + std::to_string(gamma.node_count()) +
                           " nodes, above (k+1)n = " + std::to_string(bound));
  }
  return gamma;
}

Matching hopcroft_karp(const BipartiteGraph& g) {
  constexpr int kInf = std::numeric_limits<int>::max();
  const auto left = static_cast<std::size_t>(g.left);

  Matching m;
  m.left_mate.assign(left, -1);
  m.right_mate.assign(static_cast<std::size_t>(g.right), -1);

  std::vector<int> dist(left);
  std::vector<int> queue;
  std::vector<int> arc(left);
  std::vector<int> stack;
  queue.reserve(left);

  auto bfs = [&] {
    queue.clear();
    for (std::size_t a = 0; a < left; ++a) {
      if (m.left_mate[a] < 0) {
        dist[a] = 0;
        queue.push_back(static_cast<int>(a));
      } else {
        dist[a] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int a = queue[head];
      for (int e = g.offsets[static_cast<std::size_t>(a)]; e < g.offsets[static_cast<std::size_t>(a) + 1]; ++e) {
        int mate = m.right_mate[static_cast<std::size_t>(g.targets[static_cast<std::size_t>(e)])];
        if (mate < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(mate)] == kInf) {
          dist[static_cast<std::size_t>(mate)] = dist[static_cast<std::size_t>(a)] + 1;
          queue.push_back(mate);
        }
      }
    }
    return found;
  };

  // Iterative layered DFS with current-arc pointers; each phase is O(|E|).
  auto augment = [&](int root) {
    stack.clear();
    stack.push_back(root);
    while (!stack.empty()) {
      auto a = static_cast<std::size_t>(stack.back());
      if (arc[a] == g.offsets[a + 1]) {
        dist[a] = kInf;
        stack.pop_back();
        continue;
      }
      int b = g.targets[static_cast<std::size_t>(arc[a])];
      int mate = m.right_mate[static_cast<std::size_t>(b)];
      if (mate < 0) {
        for (int x : stack) {
          int y = g.targets[static_cast<std::size_t>(arc[static_cast<std::size_t>(x)])];
          m.left_mate[static_cast<std::size_t>(x)] = y;
          m.right_mate[static_cast<std::size_t>(y)] = x;
        }
        return true;
      }
      if (dist[static_cast<std::size_t>(mate)] == dist[a] + 1) {
        stack.push_back(mate);
      } else {
        ++arc[a];
      }
    }
    return false;
  };

  while (bfs()) {
    ++m.phases;
    for (std::size_t a = 0; a < left; ++a) arc[a] = g.offsets[a];
    for (std::size_t a = 0; a < left; ++a) {
      if (m.left_mate[a] < 0 && augment(static_cast<int>(a))) ++m.size;
    }
  }
  return m;
}

Coloring extract_coloring(const Instance& inst, const GammaGraph& gamma, const Matching& m) {
  if (!m.saturates_left() || m.left_mate.size() != static_cast<std::size_t>(inst.order())) {
    throw std::logic_error("matching does not cover every vertex");
  }
  Coloring phi(m.left_mate.size());
  for (std::size_t v = 0; v < phi.size(); ++v) {
    phi[v] = gamma.b_labels[static_cast<std::size_t>(m.left_mate[v])].color;
  }
  if (!verify_coloring(inst, phi)) {
    throw std::logic_error("matching-derived coloring failed verification");
  }
  return phi;
}

Verdict decide_reduced(const Instance& inst, Execution exec) {
  if (inst.has_empty_list()) throw PreconditionError("instance has an empty list");
  const GammaGraph gamma = build_gamma(decompose(inst, exec));
  const Matching m = hopcroft_karp(gamma.graph);

  Verdict verdict;
  verdict.stats.matching_phases = m.phases;
  verdict.stats.gamma_nodes = gamma.node_count();
  if (m.saturates_left()) {
    verdict.admissible = true;
    verdict.certificate = extract_coloring(inst, gamma, m);
  }
  return verdict;
}

}  // namespace lkc
