#include "digraphical/oracle.hpp"

#include <algorithm>
#include <array>

namespace digraphical::oracle {

namespace {

void check_budget(std::size_t n, Budget budget) {
  if (budget.max_n > kHardCap || n > budget.max_n) {
    throw Error(Errc::BudgetExceeded, "n = " + std::to_string(n) + ", cap = " +
                                          std::to_string(std::min(budget.max_n, kHardCap)));
  }
}

// Target out/in degrees per label; ids outside 0..n-1 are rejected.
struct Target {
  std::array<int, kHardCap> out{};
  std::array<int, kHardCap> in{};
};

Target target_of(const BiDegreeSequence& bds, std::size_t n) {
  Target t;
  for (const auto& e : bds.entries()) {
    if (e.id < 0 || static_cast<std::size_t>(e.id) >= n) {
      throw Error(Errc::InvalidArgument, "vertex " + std::to_string(e.id) + " outside 0.." +
                                             std::to_string(n) + "-1");
    }
    t.out[static_cast<std::size_t>(e.id)] = e.deg.out_deg;
    t.in[static_cast<std::size_t>(e.id)] = e.deg.in_deg;
  }
  return t;
}

bool matches(const std::vector<Arc>& pairs, std::size_t n, Mask mask, const Target& t) {
  Target got;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if ((mask >> j) & 1U) {
      ++got.out[static_cast<std::size_t>(pairs[j].first)];
      ++got.in[static_cast<std::size_t>(pairs[j].second)];
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (got.out[v] != t.out[v] || got.in[v] != t.in[v]) return false;
  }
  return true;
}

}  // namespace

std::vector<Arc> pair_table(std::size_t n) {
  std::vector<Arc> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  return pairs;
}

DiGraph digraph_from_mask(std::size_t n, Mask mask) {
  const auto pairs = pair_table(n);
  std::vector<Arc> arcs;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if ((mask >> j) & 1U) arcs.push_back(pairs[j]);
  }
  return DiGraph(DiGraph(n).vertices(), arcs);
}

void all_digraphs(std::size_t n, const std::function<bool(Mask)>& visit, Budget budget) {
  check_budget(n, budget);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0));
  const Mask end = Mask{1} << bits;
  for (Mask m = 0; m < end; ++m) {
    if (!visit(m)) return;
  }
}

std::vector<DiGraph> realizations(const BiDegreeSequence& bds, std::size_t n, Budget budget) {
  check_budget(n, budget);
  const Target t = target_of(bds, n);
  const auto pairs = pair_table(n);
  std::vector<DiGraph> out;
  all_digraphs(n, [&](Mask m) {
    if (matches(pairs, n, m, t)) out.push_back(digraph_from_mask(n, m));
    return true;
  }, budget);
  return out;
}

std::uint64_t count(const BiDegreeSequence& bds, std::size_t n, Budget budget) {
  check_budget(n, budget);
  const Target t = target_of(bds, n);
  const auto pairs = pair_table(n);
  std::uint64_t c = 0;
  all_digraphs(n, [&](Mask m) {
    if (matches(pairs, n, m, t)) ++c;
    return true;
  }, budget);
  return c;
}

bool restricted(const RestrictedInstance& inst, std::size_t n, Budget budget) {
  check_budget(n, budget);
  const Target t = target_of(inst.bds, n);
  const auto pairs = pair_table(n);
  Mask banned = 0;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (pairs[j].first == inst.pivot && inst.forbidden.contains(pairs[j].second)) {
      banned |= Mask{1} << j;
    }
  }
  bool found = false;
  all_digraphs(n, [&](Mask m) {
    if ((m & banned) == 0 && matches(pairs, n, m, t)) found = true;
    return !found;
  }, budget);
  return found;
}

}  // namespace digraphical::oracle
