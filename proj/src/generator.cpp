#include "lkc/generator.hpp"

#include <numeric>

namespace lkc {

namespace {

std::vector<Edge> cluster_edges(SplitMix64& rng, Vertex n, Vertex max_clique) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  std::vector<Edge> edges;
  std::size_t start = 0;
  while (start < perm.size()) {
    std::size_t size = 1 + rng.below(static_cast<std::uint64_t>(max_clique));
    std::size_t end = std::min(perm.size(), start + size);
    for (std::size_t i = start; i < end; ++i) {
      for (std::size_t j = i + 1; j < end; ++j) {
        edges.emplace_back(std::min(perm[i], perm[j]), std::max(perm[i], perm[j]));
      }
    }
    start = end;
  }
  return edges;
}

std::vector<Edge> random_edges(SplitMix64& rng, Vertex n, double density) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(density)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

ColorList random_list(SplitMix64& rng, Color k) {
  ColorList list;
  if (k <= 62) {
    const std::uint64_t mask = 1 + rng.below((std::uint64_t{1} << k) - 1);
    for (Color c = 1; c <= k; ++c) {
      if (mask >> (c - 1) & 1) list.push_back(c);
    }
    return list;
  }
  while (list.empty()) {
    for (Color c = 1; c <= k; ++c) {
      if (rng.chance(0.5)) list.push_back(c);
    }
  }
  return list;
}

}  // namespace

Instance generate(const GenOptions& o) {
  if (o.n < 0) throw GenerationError("n must be non-negative");
  if (o.k < 1) throw GenerationError("k must be at least 1");
  if (o.r < 1) throw GenerationError("r must be at least 1");
  if (o.density < 0.0 || o.density > 1.0) throw GenerationError("density must lie in [0, 1]");

  SplitMix64 rng(o.seed);
  const Vertex max_clique = o.max_clique > 0 ? o.max_clique : o.k;
  std::vector<Edge> edges;

  switch (o.mode) {
    case GenMode::kCluster:
      edges = cluster_edges(rng, o.n, max_clique);
      break;
    case GenMode::kRandom:
      edges = random_edges(rng, o.n, o.density);
      break;
    case GenMode::kRp3Free: {
      if (o.n > o.cap) {
        throw GenerationError("rp3free needs n <= cap (" + std::to_string(o.cap) + ")");
      }
      bool accepted = false;
      for (int draw = 0; draw < o.budget && !accepted; ++draw) {
        edges = random_edges(rng, o.n, o.density);
        accepted = find_disjoint_induced_p3s(Graph(o.n, edges), o.r, o.cap).status ==
                   P3Packing::Status::kFree;
      }
      if (!accepted) {
        throw GenerationError("no " + std::to_string(o.r) + "P3-free graph in " +
                              std::to_string(o.budget) + " draws; try a lower density");
      }
      break;
    }
    case GenMode::kApex: {
      // Every induced P3 meets an apex, so at most r-1 of them are disjoint.
      const Vertex apexes = std::min<Vertex>(o.n, o.r - 1);
      const Vertex base = o.n - apexes;
      edges = cluster_edges(rng, base, max_clique);
      for (Vertex a = base; a < o.n; ++a) {
        for (Vertex v = 0; v < a; ++v) {
          if (rng.chance(o.density)) edges.emplace_back(v, a);
        }
      }
      break;
    }
  }

  Graph graph(o.n, edges);
  if (o.full_lists) return Instance::with_full_lists(std::move(graph), o.k);
  std::vector<ColorList> lists;
  lists.reserve(static_cast<std::size_t>(o.n));
  for (Vertex v = 0; v < o.n; ++v) lists.push_back(random_list(rng, o.k));
  return Instance(std::move(graph), o.k, std::move(lists));
}

GenMode parse_gen_mode(std::string_view name) {
  if (name == "cluster") return GenMode::kCluster;
  if (name == "rp3free") return GenMode::kRp3Free;
  if (name == "random") return GenMode::kRandom;
  if (name == "apex") return GenMode::kApex;
  throw GenerationError("unknown mode '" + std::string(name) + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace lkc
