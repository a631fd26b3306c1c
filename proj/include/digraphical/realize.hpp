#pragma once

// Graphicality decisions and greedy realization for bi-degree sequences.

#include <optional>
#include <set>
#include <span>

#include "digraphical/core.hpp"

namespace digraphical {

/// How the next vertex to fan out is chosen among those with positive
/// residual out-degree.
enum class PivotStrategy {
  MaxOut,    // largest out-degree, then largest in-degree, then smallest id
  MinIndex,  // smallest id
};

/// Pivot under `strategy`, or nullopt when every out-degree is zero.
std::optional<VertexId> choose_pivot(const BiDegreeSequence& bds, PivotStrategy strategy);

/// Undirected baseline: repeatedly removes the largest degree d and lowers the
/// next d entries. Zero entries are ignored.
bool is_graphical_undirected(std::span<const int> degrees);

/// Necessary conditions checked before any reduction round: equal degree
/// sums and every degree at most n-1.
bool passes_quick_checks(const BiDegreeSequence& bds);

bool is_bigraphical(const BiDegreeSequence& bds,
                    PivotStrategy strategy = PivotStrategy::MaxOut);

struct RealizeReport {
  std::optional<DiGraph> graph;
  /// Zero-based reduction round that failed; round 0 also covers the quick
  /// checks.
  std::optional<std::size_t> failed_step;

  bool ok() const noexcept { return graph.has_value(); }
};

/// Directed Havel-Hakimi: each pivot is joined to the first d+ vertices of
/// the normal order of the residual sequence. Vertex set of the result is
/// the id set of `bds`.
RealizeReport realize_greedy(const BiDegreeSequence& bds,
                             PivotStrategy strategy = PivotStrategy::MaxOut);

/// A sequence together with one vertex whose out-neighbors must avoid a
/// forbidden set.
struct RestrictedInstance {
  BiDegreeSequence bds;
  VertexId pivot = 0;
  std::set<VertexId> forbidden;

  /// Throws InvalidInstance when the pivot is missing, forbidden, or F has
  /// ids outside the sequence.
  void check() const;
};

/// Allowed vertices in normal order, then F by ascending id, then the pivot.
Ordering f_normal_order(const RestrictedInstance& inst);

/// The `k` leftmost allowed vertices under the F-normal order.
/// Throws NotEnoughAllowedVertices.
OutNeighborhood f_prefix(const RestrictedInstance& inst, std::size_t k);

/// True iff some realization gives the pivot an out-neighborhood disjoint
/// from F.
bool is_feasible_restricted(const RestrictedInstance& inst);

}  // namespace digraphical
