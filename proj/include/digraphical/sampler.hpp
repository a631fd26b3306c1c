#pragma once

// Swap-move random walk over the realizations of a fixed bi-degree sequence.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "digraphical/core.hpp"
#include "digraphical/swaps.hpp"

namespace digraphical {

struct ChainConfig {
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  double pair_move_probability = 0.5;
  /// A sample is recorded after every `thinning` steps, rejected or not.
  std::uint64_t thinning = 1;

  /// Throws InvalidArgument.
  void check() const;
};

/// Lazy Metropolis chain. Each step draws an ordered pair (or triple) of
/// distinct arcs uniformly and applies the matching rewiring when it keeps
/// the graph simple; otherwise the state is unchanged. The arc count is
/// fixed by the degrees, so every move and its inverse are drawn with equal
/// probability and the stationary distribution is uniform.
class SwapChain {
 public:
  SwapChain(DiGraph start, const ChainConfig& cfg);

  /// Draws one candidate move without applying it; nullopt is a rejection.
  std::optional<Swap> propose();
  /// One chain step; returns true if a move was applied.
  bool step();

  const DiGraph& current() const noexcept { return current_; }
  std::uint64_t step_count() const noexcept { return step_count_; }
  std::uint64_t accept_count() const noexcept { return accept_count_; }

 private:
  void apply(const Swap& s);

  DiGraph current_;
  std::vector<Arc> arc_slots_;  // draw table, same set as current_.arcs()
  std::mt19937_64 rng_;
  double pair_probability_;
  std::uint64_t step_count_ = 0;
  std::uint64_t accept_count_ = 0;
};

/// floor(steps / thinning) samples; deterministic given (start, cfg).
std::vector<DiGraph> run_chain(const DiGraph& start, const ChainConfig& cfg);

/// Total-variation distance between sample frequencies and the uniform
/// distribution on `support` (graphs keyed by arc set). Throws
/// SampleOutsideSupport and InvalidArgument on empty input.
double empirical_tv(const std::vector<DiGraph>& samples, const std::vector<DiGraph>& support);

}  // namespace digraphical
