#include "g2lyap/word_stream.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace g2lyap {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t block_seed(std::uint64_t master_seed, int block_index) {
  std::uint64_t state =
      master_seed ^ (static_cast<std::uint64_t>(block_index + 1) * 0x9E3779B97F4A7C15ULL);
  return splitmix64(state);
}

WordStream::WordStream(int gen_count, WalkKind kind, bool use_inverses, std::uint64_t seed)
    : gen_count_(gen_count), kind_(kind), use_inverses_(use_inverses), state_(seed) {
  if (gen_count < 1) throw std::invalid_argument("WordStream: need at least one generator");
  if (kind == WalkKind::non_backtracking && use_inverses && gen_count == 1)
    throw std::invalid_argument(
        "WordStream: non-backtracking walk on one generator with inverses is deterministic; "
        "use the iid walk or drop inverses");
}

std::uint64_t WordStream::draw_below(std::uint64_t bound) {
  const std::uint64_t limit = bound * (std::numeric_limits<std::uint64_t>::max() / bound);
  std::uint64_t draw;
  do {
    draw = splitmix64(state_);
  } while (draw >= limit);
  return draw % bound;
}

int WordStream::next() {
  // alphabet index: +g at 2(g-1), -g at 2(g-1)+1 when inverses are in play
  const std::uint64_t alphabet = use_inverses_ ? 2ull * gen_count_ : gen_count_;
  auto symbol_at = [&](std::uint64_t idx) -> int {
    if (!use_inverses_) return static_cast<int>(idx) + 1;
    const int gen = static_cast<int>(idx / 2) + 1;
    return idx % 2 == 0 ? gen : -gen;
  };

  std::uint64_t idx;
  if (kind_ == WalkKind::non_backtracking && use_inverses_ && prev_ != 0) {
    const std::uint64_t forbidden =
        2ull * (std::abs(prev_) - 1) + (prev_ < 0 ? 0 : 1);  // index of the inverse of prev_
    idx = draw_below(alphabet - 1);
    if (idx >= forbidden) ++idx;
  } else {
    idx = draw_below(alphabet);
  }
  const int symbol = symbol_at(idx);
  prev_ = symbol;
  return symbol;
}

}  // namespace g2lyap
