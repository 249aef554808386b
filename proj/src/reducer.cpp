#include "lkc/reducer.hpp"

#include <algorithm>

namespace lkc {

ProfileStream::ProfileStream(Instance root, ReducerOptions options) : options_(options) {
  push(std::move(root), 0);
}

bool ProfileStream::first_visit(const Instance& inst) {
  if (options_.dedup_cap == 0) return true;
  std::string key = list_state_key(inst);
  if (visited_.contains(key)) {
    ++stats_.dedup_hits;
    return false;
  }
  // Once full, stop remembering but keep answering from what is stored.
  if (visited_.size() < options_.dedup_cap) visited_.insert(std::move(key));
  return true;
}

void ProfileStream::push(Instance inst, std::size_t depth) {
  if (options_.propagate) {
    auto forced = propagate_forced(inst);
    if (!forced) {
      if (options_.prune_dead) return;
    } else {
      inst = std::move(*forced);
    }
  }
  if (options_.prune_dead && inst.has_empty_list()) return;
  if (first_visit(inst)) stack_.push_back(Node{std::move(inst), depth, false, std::nullopt, 0});
}

std::optional<ProfileLeaf> ProfileStream::next() {
  while (!stack_.empty()) {
    Node& top = stack_.back();
    if (!top.expanded) {
      top.expanded = true;
      ++stats_.branches;
      stats_.max_depth = std::max(stats_.max_depth, top.depth);
      top.violation = find_violating_triple(top.instance);
      if (!top.violation) {
        ProfileLeaf leaf{std::move(top.instance), top.depth};
        stack_.pop_back();
        ++stats_.leaves;
        return leaf;
      }
    }
    if (top.next_child == 3) {
      stack_.pop_back();
      continue;
    }
    const auto& t = top.violation->triple;
    const Vertex target = top.next_child == 0 ? t.x : top.next_child == 1 ? t.y : t.z;
    ++top.next_child;
    // `top` may dangle once push() grows the stack.
    Instance child = top.instance.remove_color(target, top.violation->color);
    push(std::move(child), top.depth + 1);
  }
  return std::nullopt;
}

std::vector<ProfileLeaf> reduce_to_profile(const Instance& inst, ReducerOptions options) {
  ProfileStream stream(inst, options);
  std::vector<ProfileLeaf> leaves;
  while (auto leaf = stream.next()) leaves.push_back(std::move(*leaf));
  return leaves;
}

}  // namespace lkc
