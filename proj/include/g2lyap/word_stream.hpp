#pragma once

#include <cstdint>

namespace g2lyap {

// splitmix64 step: advances the state and returns the next 64-bit output.
std::uint64_t splitmix64(std::uint64_t& state);

// Seed for an independently restarted block, derived from the master seed by
// an integer mix (XOR with golden-ratio multiples, then one splitmix64 step).
std::uint64_t block_seed(std::uint64_t master_seed, int block_index);

enum class WalkKind { iid_uniform, non_backtracking };

// Deterministic stream of signed 1-based generator symbols: +g means the
// generator, -g its inverse. A pure function of the constructor arguments;
// draws are rejection-sampled so the sequence is platform-independent.
class WordStream {
 public:
  // use_inverses: walk over generators and their inverses (2*gen_count
  // symbols); otherwise over the generators only. Throws
  // std::invalid_argument for a non-backtracking walk on a single generator
  // with inverses, which leaves one admissible symbol and no randomness.
  WordStream(int gen_count, WalkKind kind, bool use_inverses, std::uint64_t seed);

  int next();

 private:
  std::uint64_t draw_below(std::uint64_t bound);

  int gen_count_;
  WalkKind kind_;
  bool use_inverses_;
  std::uint64_t state_;
  int prev_ = 0;  // 0 until the first symbol is emitted
};

}  // namespace g2lyap
