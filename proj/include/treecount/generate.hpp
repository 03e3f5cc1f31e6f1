#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "treecount/graph.hpp"

namespace treecount {

enum class Family { Complete, RandomConnected, RandomRightRegular, RandomBiregular };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::Complete;
  int n = 1;
  int m = 1;
  double p = 0.5;              // random-connected
  std::optional<int> a;        // random-biregular: first-class degree
  std::optional<int> b;        // random-right-regular / random-biregular: second-class degree
  std::uint64_t seed = 0;
};

inline constexpr int kMaxConnectivityAttempts = 10'000;

/// Random source for every generator: std::mt19937_64 (the standard 64-bit
/// Mersenne Twister, whose output sequence is fixed by the C++ standard).
/// Distributions are implemented here rather than taken from <random>,
/// because the standard distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);
  // Uniform double in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

// Seed of trial t in a sweep seeded with `seed` (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial);

BipartiteGraph generate(const GeneratorSpec& spec);

}  // namespace treecount
