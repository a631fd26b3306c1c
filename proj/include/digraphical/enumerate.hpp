#pragma once

// Exhaustive generation of every labeled realization of a bi-degree sequence.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "digraphical/core.hpp"

namespace digraphical {

/// One node of the include/exclude search for the current pivot.
struct BranchState {
  BiDegreeSequence reduced_bds;  // fan-outs of earlier pivots removed
  VertexId pivot = 0;
  std::set<VertexId> chosen;     // committed out-neighbors of pivot
  std::set<VertexId> forbidden;  // rejected candidates
  std::vector<Arc> frozen_arcs;
};

/// True iff some realization of `reduced_bds` gives the pivot an
/// out-neighborhood containing `chosen` and avoiding `forbidden`.
bool feasible_extension(const BranchState& bs);

struct EnumerateOptions {
  std::optional<std::uint64_t> limit;
  /// Reference mode: branch without feasibility pruning and filter at the
  /// leaves. Only sensible for tiny instances.
  bool prune = true;
};

/// Calls `sink` once per realization; the search stops when `sink` returns
/// false or the limit is reached. Pivots go in ascending id; candidates are
/// tried in ascending id, include before exclude. Returns the number emitted.
std::uint64_t enumerate_all(const BiDegreeSequence& bds,
                            const std::function<bool(const DiGraph&)>& sink,
                            const EnumerateOptions& opts = {});

std::vector<DiGraph> enumerate_all(const BiDegreeSequence& bds, const EnumerateOptions& opts = {});

std::uint64_t count_realizations(const BiDegreeSequence& bds);

}  // namespace digraphical
