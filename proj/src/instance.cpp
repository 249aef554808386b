#include "lkc/instance.hpp"

#include <algorithm>

namespace lkc {

Instance::Instance(std::shared_ptr<const Graph> graph, Color k, std::vector<ColorList> lists)
    : graph_(std::move(graph)), k_(k), lists_(std::move(lists)) {
  if (k_ < 1) throw InputError("k must be at least 1");
  if (lists_.size() != static_cast<std::size_t>(graph_->order())) {
    throw InputError("expected " + std::to_string(graph_->order()) + " lists, got " +
                     std::to_string(lists_.size()));
  }
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    auto& list = lists_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InputError("repeated color in list of vertex " + std::to_string(v));
    }
    if (!list.empty() && (list.front() < 1 || list.back() > k_)) {
      throw InputError("color out of range [1, " + std::to_string(k_) + "] at vertex " +
                       std::to_string(v));
    }
  }
}

Instance::Instance(Graph graph, Color k, std::vector<ColorList> lists)
    : Instance(std::make_shared<const Graph>(std::move(graph)), k, std::move(lists)) {}

Instance Instance::with_full_lists(Graph graph, Color k) {
  ColorList full(static_cast<std::size_t>(std::max<Color>(k, 0)));
  for (Color c = 1; c <= k; ++c) full[static_cast<std::size_t>(c - 1)] = c;
  auto n = static_cast<std::size_t>(graph.order());
  return Instance(std::move(graph), k, std::vector<ColorList>(n, full));
}

bool Instance::has_color(Vertex v, Color c) const {
  const auto& l = list(v);
  return std::binary_search(l.begin(), l.end(), c);
}

std::size_t Instance::total_list_size() const {
  std::size_t total = 0;
  for (const auto& l : lists_) total += l.size();
  return total;
}

bool Instance::has_empty_list() const {
  return std::any_of(lists_.begin(), lists_.end(), [](const ColorList& l) { return l.empty(); });
}

Instance Instance::remove_color(Vertex v, Color c) const {
  Instance out = *this;
  auto& l = out.lists_[static_cast<std::size_t>(v)];
  auto it = std::lower_bound(l.begin(), l.end(), c);
  if (it != l.end() && *it == c) l.erase(it);
  return out;
}

std::optional<Instance> propagate_forced(const Instance& inst) {
  if (inst.has_empty_list()) return std::nullopt;
  std::vector<ColorList> lists = inst.lists();
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < inst.order(); ++v) {
    if (lists[static_cast<std::size_t>(v)].size() == 1) queue.push_back(v);
  }
  bool changed = false;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const Color c = lists[static_cast<std::size_t>(v)].front();
    for (Vertex w : inst.graph().neighbors(v)) {
      auto& lw = lists[static_cast<std::size_t>(w)];
      auto it = std::lower_bound(lw.begin(), lw.end(), c);
      if (it == lw.end() || *it != c) continue;
      lw.erase(it);
      changed = true;
      if (lw.empty()) return std::nullopt;
      if (lw.size() == 1) queue.push_back(w);
    }
  }
  if (!changed) return inst;
  return Instance(inst.shared_graph(), inst.k(), std::move(lists));
}

bool verify_coloring(const Instance& inst, const Coloring& phi) {
  if (phi.size() != static_cast<std::size_t>(inst.order())) return false;
  for (Vertex v = 0; v < inst.order(); ++v) {
    if (!inst.has_color(v, phi[static_cast<std::size_t>(v)])) return false;
    for (Vertex w : inst.graph().neighbors(v)) {
      if (phi[static_cast<std::size_t>(v)] == phi[static_cast<std::size_t>(w)]) return false;
    }
  }
  return true;
}

namespace {

// Smallest color common to a and b, writing the full intersection to `out`.
void intersect(const ColorList& a, const ColorList& b, ColorList& out) {
  out.clear();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

std::optional<Color> first_common(const ColorList& a, const ColorList& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return *i;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> find_violating_triple(const Instance& inst) {
  const Graph& g = inst.graph();
  ColorList xy;
  for (Vertex y = 0; y < g.order(); ++y) {
    const auto& ly = inst.list(y);
    if (ly.empty()) continue;
    auto nbrs = g.neighbors(y);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      intersect(inst.list(nbrs[i]), ly, xy);
      if (xy.empty()) continue;
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.adjacent(nbrs[i], nbrs[j])) continue;
        if (auto c = first_common(xy, inst.list(nbrs[j]))) {
          return Violation{{nbrs[i], y, nbrs[j]}, *c};
        }
      }
    }
  }
  return std::nullopt;
}

ValidationReport validate(const Instance& inst, int r, Vertex cap) {
  ValidationReport report;
  for (const auto& l : inst.lists()) {
    if (l.empty()) {
      ++report.empty_lists;
    } else if (l.front() < 1 || l.back() > inst.k()) {
      report.list_range_ok = false;
    }
  }
  report.packing = find_disjoint_induced_p3s(inst.graph(), r, cap);
  return report;
}

std::string list_state_key(const Instance& inst) {
  const auto bytes_per_vertex = static_cast<std::size_t>(inst.k() + 7) / 8;
  std::string key(bytes_per_vertex * static_cast<std::size_t>(inst.order()), '\0');
  for (Vertex v = 0; v < inst.order(); ++v) {
    for (Color c : inst.list(v)) {
      auto bit = static_cast<std::size_t>(c - 1);
      key[static_cast<std::size_t>(v) * bytes_per_vertex + bit / 8] |=
          static_cast<char>(1u << (bit % 8));
    }
  }
  return key;
}

std::string dedup_key(const Instance& inst) {
  std::string key;
  auto put = [&key](std::int32_t value) {
    for (int shift = 0; shift < 32; shift += 8) key.push_back(static_cast<char>(value >> shift));
  };
  put(inst.order());
  put(inst.k());
  put(static_cast<std::int32_t>(inst.graph().size()));
  for (auto [u, v] : inst.graph().edges()) {
    put(u);
    put(v);
  }
  key += list_state_key(inst);
  return key;
}

}  // namespace lkc
