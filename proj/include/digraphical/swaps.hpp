#pragma once

// Degree-preserving rewirings and swap paths between realizations.

#include <vector>

#include "digraphical/core.hpp"

namespace digraphical {

enum class SwapKind {
  Pair,            // a>b, c>d  =>  a>d, c>b
  TriplePath,      // a>b, b>c, c>d  =>  a>c, c>b, b>d   (d != a)
  TripleTriangle,  // a>b, b>c, c>a  =>  a>c, c>b, b>a
};

const char* to_string(SwapKind kind) noexcept;

/// A two- or three-arc rewiring described by the vertices of its pattern.
/// The removed and added arc sets are derived, so tails and heads are
/// preserved as multisets by construction.
struct Swap {
  SwapKind kind = SwapKind::Pair;
  VertexId a = 0, b = 0, c = 0, d = 0;

  static Swap pair(VertexId a, VertexId b, VertexId c, VertexId d);
  /// Directed path a>b>c>d; d == a yields the triangle reversal.
  static Swap triple(VertexId a, VertexId b, VertexId c, VertexId d);

  std::vector<Arc> removed() const;
  std::vector<Arc> added() const;

  friend bool operator==(const Swap&, const Swap&) = default;
};

using SwapSequence = std::vector<Swap>;

/// Removed and added arc sets exchanged. inverse(inverse(s)) == s.
Swap inverse(const Swap& s);

/// Reversed order, each step inverted.
SwapSequence reverse_inverted(const SwapSequence& seq);

/// Throws SwapNotApplicable unless every removed arc is present (and
/// distinct) and every added arc is absent and loop-free.
DiGraph apply_swap(const DiGraph& g, const Swap& s);

struct ShiftResult {
  Swap swap;
  DiGraph graph;
};

/// Exchanges out-neighbor `leave` of `pivot` for `enter` with one swap.
/// Requires `enter` to precede `leave` in (in-degree, out-degree) order.
/// Throws PrecedenceViolated, SwapNotApplicable on a bad pivot/leave/enter
/// combination, and NoCaseApplies if none of the three swap patterns fit.
ShiftResult shift_one(const DiGraph& g, VertexId pivot, VertexId leave, VertexId enter);

struct ShiftLeftResult {
  SwapSequence steps;
  DiGraph graph;
};

/// Moves the out-neighborhood of `ord.pivot()` onto `target`, which must be
/// to the left of the current one under `ord`. Exchanges are applied in
/// ascending position of the entering vertex. Throws NotLeftOf.
ShiftLeftResult shift_left(const DiGraph& g, const OutNeighborhood& target, const Ordering& ord);

struct CanonicalForm {
  SwapSequence steps;
  DiGraph graph;
};

/// Swaps `g` into the greedy realization of its own degree sequence. The
/// resulting graph depends only on bds_of(g); at most one swap per arc.
CanonicalForm canonicalize(const DiGraph& g);

/// Drops adjacent (s, inverse(s)) pairs until none remain.
SwapSequence trim_inverse_pairs(SwapSequence seq);

/// Swap path from g1 to g2 through realizations of the shared sequence, of
/// length at most twice the arc count. Throws DegreeSequenceMismatch.
SwapSequence swap_path(const DiGraph& g1, const DiGraph& g2, bool trim = false);

/// True iff `seq` applies step by step from g1 through simple graphs with
/// unchanged degrees and ends with exactly the arcs of g2.
bool verify_path(const DiGraph& g1, const SwapSequence& seq, const DiGraph& g2);

}  // namespace digraphical
