#include "digraphical/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace digraphical {

void ChainConfig::check() const {
  if (thinning == 0) throw Error(Errc::InvalidArgument, "thinning must be positive");
  if (!(pair_move_probability >= 0.0 && pair_move_probability <= 1.0)) {
    throw Error(Errc::InvalidArgument, "pair move probability must lie in [0,1]");
  }
}

SwapChain::SwapChain(DiGraph start, const ChainConfig& cfg)
    : current_(std::move(start)),
      arc_slots_(current_.arcs()),
      rng_(cfg.seed),
      pair_probability_(cfg.pair_move_probability) {
  cfg.check();
}

std::optional<Swap> SwapChain::propose() {
  const std::size_t m = arc_slots_.size();
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const bool pair_move = coin(rng_) < pair_probability_;

  // Ordered draw of distinct slots: each later index skips the earlier ones.
  auto draw_distinct = [&](std::size_t count) {
    std::vector<std::size_t> picked;
    for (std::size_t j = 0; j < count; ++j) {
      std::uniform_int_distribution<std::size_t> pick(0, m - 1 - j);
      std::size_t x = pick(rng_);
      std::vector<std::size_t> taken = picked;
      std::sort(taken.begin(), taken.end());
      for (std::size_t t : taken) {
        if (x >= t) ++x;
      }
      picked.push_back(x);
    }
    return picked;
  };

  if (pair_move) {
    if (m < 2) return std::nullopt;
    auto idx = draw_distinct(2);
    const auto [a, b] = arc_slots_[idx[0]];
    const auto [c, d] = arc_slots_[idx[1]];
    if (a == d || c == b) return std::nullopt;
    if (current_.has_arc(a, d) || current_.has_arc(c, b)) return std::nullopt;
    return Swap::pair(a, b, c, d);
  }

  if (m < 3) return std::nullopt;
  auto idx = draw_distinct(3);
  const Arc& x = arc_slots_[idx[0]];
  const Arc& y = arc_slots_[idx[1]];
  const Arc& z = arc_slots_[idx[2]];
  if (x.second != y.first || y.second != z.first) return std::nullopt;
  const Swap s = Swap::triple(x.first, y.first, z.first, z.second);
  for (const auto& arc : s.added()) {
    if (arc.first == arc.second || current_.has_arc(arc.first, arc.second)) return std::nullopt;
  }
  return s;
}

void SwapChain::apply(const Swap& s) {
  current_ = apply_swap(current_, s);
  const auto removed = s.removed();
  const auto added = s.added();
  for (std::size_t j = 0; j < removed.size(); ++j) {
    *std::find(arc_slots_.begin(), arc_slots_.end(), removed[j]) = added[j];
  }
}

bool SwapChain::step() {
  ++step_count_;
  auto s = propose();
  if (!s) return false;
  apply(*s);
  ++accept_count_;
  return true;
}

std::vector<DiGraph> run_chain(const DiGraph& start, const ChainConfig& cfg) {
  cfg.check();
  SwapChain chain(start, cfg);
  std::vector<DiGraph> samples;
  samples.reserve(static_cast<std::size_t>(cfg.steps / cfg.thinning));
  for (std::uint64_t t = 1; t <= cfg.steps; ++t) {
    chain.step();
    if (t % cfg.thinning == 0) samples.push_back(chain.current());
  }
  return samples;
}

double empirical_tv(const std::vector<DiGraph>& samples, const std::vector<DiGraph>& support) {
  if (support.empty() || samples.empty()) {
    throw Error(Errc::InvalidArgument, "samples and support must be nonempty");
  }
  std::map<std::vector<Arc>, std::size_t> counts;
  for (const auto& g : support) counts.emplace(g.arcs(), 0);
  for (const auto& g : samples) {
    auto it = counts.find(g.arcs());
    if (it == counts.end()) throw Error(Errc::SampleOutsideSupport, "sample not in support");
    ++it->second;
  }
  const double uniform = 1.0 / static_cast<double>(counts.size());
  const double total = static_cast<double>(samples.size());
  double tv = 0.0;
  for (const auto& [key, c] : counts) tv += std::abs(static_cast<double>(c) / total - uniform);
  return 0.5 * tv;
}

}  // namespace digraphical
