#include "digraphical/realize.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace digraphical {

std::optional<VertexId> choose_pivot(const BiDegreeSequence& bds, PivotStrategy strategy) {
  const Entry* best = nullptr;
  for (const auto& e : bds.entries()) {
    if (e.deg.out_deg == 0) continue;
    if (strategy == PivotStrategy::MinIndex) return e.id;
    // Entries are id-sorted: strict comparisons keep the smallest id on ties.
    if (best == nullptr || e.deg.out_deg > best->deg.out_deg ||
        (e.deg.out_deg == best->deg.out_deg && e.deg.in_deg > best->deg.in_deg)) {
      best = &e;
    }
  }
  if (best == nullptr) return std::nullopt;
  return best->id;
}

bool is_graphical_undirected(std::span<const int> degrees) {
  std::vector<int> d;
  for (int x : degrees) {
    if (x < 0) return false;
    if (x > 0) d.push_back(x);
  }
  while (!d.empty()) {
    std::sort(d.begin(), d.end(), std::greater<>());
    const int head = d.front();
    d.erase(d.begin());
    if (static_cast<std::size_t>(head) > d.size()) return false;
    for (int j = 0; j < head; ++j) {
      if (--d[j] < 0) return false;
    }
    std::erase(d, 0);
  }
  return true;
}

bool passes_quick_checks(const BiDegreeSequence& bds) {
  if (bds.out_sum() != bds.in_sum()) return false;
  const auto limit = static_cast<long>(bds.size()) - 1;
  for (const auto& e : bds.entries()) {
    if (e.deg.out_deg > limit || e.deg.in_deg > limit) return false;
  }
  return true;
}

namespace {

// Runs the greedy rounds, reporting each committed fan-out through `emit`.
// Returns the failing round, or nullopt on success.
std::optional<std::size_t> run_greedy(
    const BiDegreeSequence& bds, PivotStrategy strategy,
    const std::function<void(VertexId, std::span<const VertexId>)>& emit) {
  if (!passes_quick_checks(bds)) return 0;
  BiDegreeSequence cur = bds;
  for (std::size_t round = 0;; ++round) {
    auto pivot = choose_pivot(cur, strategy);
    if (!pivot) {
      if (cur.empty()) return std::nullopt;
      return round;
    }
    Ordering ord = normal_order(cur, *pivot);
    const auto fan_out = static_cast<std::size_t>(cur.degree(*pivot).out_deg);
    auto next = reduce_pivot(cur, ord);
    if (!next) return round;
    if (emit) emit(*pivot, std::span<const VertexId>(ord.order.data(), fan_out));
    cur = std::move(*next);
  }
}

}  // namespace

bool is_bigraphical(const BiDegreeSequence& bds, PivotStrategy strategy) {
  return !run_greedy(bds, strategy, nullptr).has_value();
}

RealizeReport realize_greedy(const BiDegreeSequence& bds, PivotStrategy strategy) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(std::max(0L, bds.out_sum())));
  auto failed = run_greedy(bds, strategy, [&](VertexId pivot, std::span<const VertexId> heads) {
    for (VertexId h : heads) arcs.emplace_back(pivot, h);
  });
  RealizeReport report;
  if (failed) {
    report.failed_step = failed;
    return report;
  }
  std::sort(arcs.begin(), arcs.end());
  report.graph = DiGraph(bds.ids(), arcs);
  return report;
}

void RestrictedInstance::check() const {
  if (!bds.contains(pivot)) {
    throw Error(Errc::InvalidInstance, "pivot " + std::to_string(pivot) + " not in sequence");
  }
  for (VertexId f : forbidden) {
    if (f == pivot) throw Error(Errc::InvalidInstance, "pivot listed as forbidden");
    if (!bds.contains(f)) {
      throw Error(Errc::InvalidInstance, "forbidden vertex " + std::to_string(f) + " not in sequence");
    }
  }
}

Ordering f_normal_order(const RestrictedInstance& inst) {
  inst.check();
  std::vector<Entry> allowed;
  for (const auto& e : inst.bds.entries()) {
    if (e.id != inst.pivot && !inst.forbidden.contains(e.id)) allowed.push_back(e);
  }
  std::stable_sort(allowed.begin(), allowed.end(),
                   [](const Entry& a, const Entry& b) { return dominates(a.deg, b.deg); });
  Ordering ord;
  ord.order.reserve(inst.bds.size());
  for (const auto& e : allowed) ord.order.push_back(e.id);
  ord.order.insert(ord.order.end(), inst.forbidden.begin(), inst.forbidden.end());
  ord.order.push_back(inst.pivot);
  return ord;
}

OutNeighborhood f_prefix(const RestrictedInstance& inst, std::size_t k) {
  Ordering ord = f_normal_order(inst);
  const std::size_t allowed = ord.size() - 1 - inst.forbidden.size();
  if (k > allowed) {
    throw Error(Errc::NotEnoughAllowedVertices,
                "need " + std::to_string(k) + ", have " + std::to_string(allowed));
  }
  return make_pon(ord, std::span<const VertexId>(ord.order.data(), k));
}

bool is_feasible_restricted(const RestrictedInstance& inst) {
  inst.check();
  const auto fan_out = static_cast<std::size_t>(inst.bds.degree(inst.pivot).out_deg);
  if (inst.forbidden.size() + 1 + fan_out > inst.bds.size()) return false;
  if (fan_out == 0) return is_bigraphical(inst.bds);
  OutNeighborhood prefix = f_prefix(inst, fan_out);
  // A zero in-degree inside the prefix means fewer than d+ allowed vertices
  // can accept an arc at all.
  for (VertexId m : prefix.members) {
    if (inst.bds.degree(m).in_deg == 0) return false;
  }
  return is_bigraphical(a_reduce(inst.bds, prefix));
}

}  // namespace digraphical
