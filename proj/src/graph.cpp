#include "lkc/graph.hpp"

#include <algorithm>

namespace lkc {

Graph::Graph(Vertex n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(Vertex n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> old_to_new(static_cast<std::size_t>(g.order()), -1);
  Vertex next = 0;
  for (Vertex v : keep) {
    if (v < 0 || v >= g.order()) {
      throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    if (old_to_new[static_cast<std::size_t>(v)] < 0) old_to_new[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> edges;
  for (Vertex u : keep) {
    for (Vertex v : g.neighbors(u)) {
      Vertex nv = old_to_new[static_cast<std::size_t>(v)];
      Vertex nu = old_to_new[static_cast<std::size_t>(u)];
      if (nv >= 0 && nu < nv) edges.emplace_back(nu, nv);
    }
  }
  return {Graph(next, edges), std::move(old_to_new)};
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> components;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    VertexSet component;
    seen[static_cast<std::size_t>(root)] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (g.degree(s[i]) + 1 < s.size()) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_p3_free(const Graph& g) {
  for (const auto& component : connected_components(g)) {
    // A connected set is a clique iff every member sees all the others.
    for (Vertex v : component) {
      if (g.degree(v) + 1 != component.size()) return false;
    }
  }
  return true;
}

namespace {

// Visits induced P3s in (y, x, z) lexicographic order; stops when `visit` returns true.
template <typename Visit>
bool scan_induced_p3s(const Graph& g, Visit&& visit) {
  for (Vertex y = 0; y < g.order(); ++y) {
    auto nbrs = g.neighbors(y);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!g.adjacent(nbrs[i], nbrs[j]) && visit(InducedP3{nbrs[i], y, nbrs[j]})) return true;
      }
    }
  }
  return false;
}

bool disjoint(const InducedP3& a, const InducedP3& b) {
  for (Vertex u : {a.x, a.y, a.z}) {
    if (u == b.x || u == b.y || u == b.z) return false;
  }
  return true;
}

bool pack(const std::vector<InducedP3>& candidates, int need, std::vector<InducedP3>& chosen,
          std::vector<char>& mark) {
  if (need == 0) return true;
  if (candidates.size() < static_cast<std::size_t>(need)) return false;

  // Not enough distinct vertices left to host `need` disjoint triples.
  std::size_t distinct = 0;
  for (const auto& t : candidates) {
    for (Vertex u : {t.x, t.y, t.z}) {
      if (!mark[static_cast<std::size_t>(u)]) {
        mark[static_cast<std::size_t>(u)] = 1;
        ++distinct;
      }
    }
  }
  for (const auto& t : candidates) {
    for (Vertex u : {t.x, t.y, t.z}) mark[static_cast<std::size_t>(u)] = 0;
  }
  if (distinct < 3 * static_cast<std::size_t>(need)) return false;

  std::vector<InducedP3> rest;
  for (std::size_t i = 0; i + static_cast<std::size_t>(need) <= candidates.size(); ++i) {
    rest.clear();
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (disjoint(candidates[i], candidates[j])) rest.push_back(candidates[j]);
    }
    chosen.push_back(candidates[i]);
    if (pack(rest, need - 1, chosen, mark)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<InducedP3> find_induced_p3(const Graph& g) {
  std::optional<InducedP3> found;
  scan_induced_p3s(g, [&](const InducedP3& t) {
    found = t;
    return true;
  });
  return found;
}

std::vector<InducedP3> all_induced_p3s(const Graph& g) {
  std::vector<InducedP3> out;
  scan_induced_p3s(g, [&](const InducedP3& t) {
    out.push_back(t);
    return false;
  });
  return out;
}

P3Packing find_disjoint_induced_p3s(const Graph& g, int r, Vertex cap) {
  if (r < 1) throw InputError("r must be at least 1");
  if (g.order() > cap) return {P3Packing::Status::kSkipped, {}};
  std::vector<InducedP3> chosen;
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  if (pack(all_induced_p3s(g), r, chosen, mark)) {
    return {P3Packing::Status::kWitness, std::move(chosen)};
  }
  return {P3Packing::Status::kFree, {}};
}

}  // namespace lkc
