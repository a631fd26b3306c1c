#pragma once

// Brute-force ground truth over every simple digraph on a few labeled vertices.
//
// A graph on vertices 0..n-1 is an n(n-1)-bit mask; bit j stands for the
// j-th ordered pair (u, v), u != v, in row-major order.

#include <cstdint>
#include <functional>
#include <vector>

#include "digraphical/core.hpp"
#include "digraphical/realize.hpp"

namespace digraphical::oracle {

inline constexpr std::size_t kHardCap = 6;

struct Budget {
  std::size_t max_n = 5;
};

using Mask = std::uint64_t;

/// Ordered non-loop pairs of 0..n-1 in bit order.
std::vector<Arc> pair_table(std::size_t n);

DiGraph digraph_from_mask(std::size_t n, Mask mask);

/// Visits all 2^(n(n-1)) graphs in ascending mask order; stops early when
/// `visit` returns false. Throws BudgetExceeded.
void all_digraphs(std::size_t n, const std::function<bool(Mask)>& visit, Budget budget = {});

/// Every realization of `bds` on vertices 0..n-1 (ids must lie in range).
std::vector<DiGraph> realizations(const BiDegreeSequence& bds, std::size_t n, Budget budget = {});

/// Number of realizations, without materializing graphs.
std::uint64_t count(const BiDegreeSequence& bds, std::size_t n, Budget budget = {});

/// True iff some realization avoids arcs pivot->f for every f in F.
bool restricted(const RestrictedInstance& inst, std::size_t n, Budget budget = {});

}  // namespace digraphical::oracle
