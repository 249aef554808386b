#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lkc/instance.hpp"

namespace lkc {

/// SplitMix64 (Steele, Lea and Flood, "Fast splittable pseudorandom number
/// generators", OOPSLA 2014). Chosen so that seeds reproduce across ports.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// next() mod bound; bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Top 53 bits as a double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

enum class GenMode {
  kCluster,  ///< disjoint cliques; P3-free
  kRp3Free,  ///< G(n, density) rejection-sampled until rP3-free
  kRandom,   ///< G(n, density)
  kApex,     ///< cluster graph plus r-1 apex vertices; rP3-free by construction
};

struct GenOptions {
  GenMode mode = GenMode::kCluster;
  Vertex n = 10;
  Color k = 3;
  int r = 1;
  std::uint64_t seed = 1;
  double density = 0.3;
  bool full_lists = false;
  /// Clique sizes are uniform in [1, max_clique]; 0 means k.
  Vertex max_clique = 0;
  /// rp3free: largest n the packing check accepts.
  Vertex cap = kDefaultPackingCap;
  /// rp3free: graph draws before giving up.
  int budget = 10'000;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic in the options. Lists are uniform nonempty subsets of [k]
/// unless full_lists is set.
Instance generate(const GenOptions& options);

GenMode parse_gen_mode(std::string_view name);

/// FNV-1a over bytes; used to fingerprint generated instances.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace lkc
