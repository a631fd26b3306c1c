#pragma once

// Core domain types for bi-degree sequences and their digraph realizations.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace digraphical {

using VertexId = std::int64_t;

/// Error categories raised across the library. Each maps to one failure
/// mode named by an operation's contract.
enum class Errc {
  NegativeDegree,
  DuplicateVertexId,
  UnknownPivot,
  InvalidPON,
  CardinalityMismatch,
  NotEnoughAllowedVertices,
  InvalidInstance,
  SwapNotApplicable,
  PrecedenceViolated,
  NoCaseApplies,
  NotLeftOf,
  DegreeSequenceMismatch,
  SampleOutsideSupport,
  BudgetExceeded,
  ParseError,
  MixedFormats,
  LoopArc,
  DuplicateArc,
  InvalidArgument,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

struct DegreePair {
  int out_deg = 0;
  int in_deg = 0;

  bool is_zero() const noexcept { return out_deg == 0 && in_deg == 0; }
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

struct Entry {
  VertexId id = 0;
  DegreePair deg;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// A bi-degree sequence: one (out, in) pair per vertex label.
///
/// Entries are kept sorted by vertex id with (0,0) entries removed, so two
/// sequences describing the same instance compare equal.
class BiDegreeSequence {
 public:
  BiDegreeSequence() = default;

  /// Checks the raw entries and builds the pruned sequence. Rejects negative
  /// degrees and repeated ids; does not decide graphicality.
  static BiDegreeSequence validate(std::vector<Entry> entries);

  /// Convenience: ids 0..n-1 assigned in order.
  static BiDegreeSequence from_pairs(std::span<const DegreePair> pairs);
  static BiDegreeSequence from_pairs(std::initializer_list<DegreePair> pairs);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  bool contains(VertexId id) const noexcept;
  /// Degree pair of `id`, or (0,0) when the id is not active.
  DegreePair degree(VertexId id) const noexcept;
  std::vector<VertexId> ids() const;

  long out_sum() const noexcept;
  long in_sum() const noexcept;

  friend bool operator==(const BiDegreeSequence&, const BiDegreeSequence&) = default;

 private:
  std::vector<Entry> entries_;
};

std::string to_string(const BiDegreeSequence& bds);

using Arc = std::pair<VertexId, VertexId>;

/// Labeled simple digraph. Arcs and vertices are stored sorted, which keeps
/// iteration order deterministic and copies cheap at the sizes this library
/// searches exhaustively.
class DiGraph {
 public:
  DiGraph() = default;
  /// Vertices 0..n-1, no arcs.
  explicit DiGraph(std::size_t n);
  DiGraph(std::vector<VertexId> vertices, std::span<const Arc> arcs);
  /// Vertex set is the set of arc endpoints.
  static DiGraph from_arcs(std::span<const Arc> arcs);
  static DiGraph from_arcs(std::initializer_list<Arc> arcs);

  void add_vertex(VertexId v);
  /// Throws LoopArc or DuplicateArc.
  void add_arc(VertexId u, VertexId v);
  /// Returns false when the arc was absent.
  bool remove_arc(VertexId u, VertexId v);
  bool has_arc(VertexId u, VertexId v) const noexcept;
  bool has_vertex(VertexId v) const noexcept;

  std::size_t n() const noexcept { return vertices_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  std::vector<VertexId> out_neighbors(VertexId u) const;
  bool is_simple() const noexcept;

  friend bool operator==(const DiGraph&, const DiGraph&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Arc> arcs_;
};

/// Degree pairs of every non-isolated vertex of `g`.
BiDegreeSequence bds_of(const DiGraph& g);

/// Bijection from positions 0..n-1 to vertex ids. The pivot, when present,
/// sits at the last position.
struct Ordering {
  std::vector<VertexId> order;

  VertexId pivot() const { return order.back(); }
  std::size_t size() const noexcept { return order.size(); }
  /// Position of `id`, or nullopt.
  std::optional<std::size_t> position(VertexId id) const noexcept;

  friend bool operator==(const Ordering&, const Ordering&) = default;
};

/// True when `a` must precede `b` in normal order: larger in-degree, then
/// larger out-degree. Ties return false both ways.
inline bool dominates(DegreePair a, DegreePair b) noexcept {
  if (a.in_deg != b.in_deg) return a.in_deg > b.in_deg;
  return a.out_deg > b.out_deg;
}

/// Non-pivot vertices by in-degree desc, out-degree desc, id asc; pivot last.
/// Throws UnknownPivot.
Ordering normal_order(const BiDegreeSequence& bds, VertexId pivot);

/// Linear scan of the normal-order condition over the non-pivot prefix.
bool is_normal_order(const BiDegreeSequence& bds, const Ordering& ord);

/// A candidate out-neighborhood of `pivot`, with the sorted positions of its
/// members under the ordering it was built against.
struct OutNeighborhood {
  VertexId pivot = 0;
  std::vector<VertexId> members;            // sorted by id
  std::vector<std::size_t> index_vector;    // strictly increasing positions

  friend bool operator==(const OutNeighborhood&, const OutNeighborhood&) = default;
};

/// Builds a PON of `ord.pivot()`; members must lie in `ord` and exclude the
/// pivot. Throws InvalidPON.
OutNeighborhood make_pon(const Ordering& ord, std::span<const VertexId> members);

/// The first `k` non-pivot positions of `ord` as a PON.
OutNeighborhood leftmost_pon(const Ordering& ord, std::size_t k);

/// Componentwise comparison of index vectors. Throws CardinalityMismatch.
bool is_left_of(const OutNeighborhood& b, const OutNeighborhood& a);

/// One greedy round: pivot's out-degree goes to 0 and the first d+ non-pivot
/// positions lose one in-degree each. nullopt when the round is infeasible.
std::optional<BiDegreeSequence> reduce_pivot(const BiDegreeSequence& bds,
                                             const Ordering& ord);

/// Removes the arcs pivot->A from the instance. Throws InvalidPON.
BiDegreeSequence a_reduce(const BiDegreeSequence& bds, const OutNeighborhood& pon);

/// Removes arcs pivot->m for each m in `members` without requiring the
/// pivot's full out-degree. Throws InvalidPON on a degree underflow.
BiDegreeSequence remove_out_arcs(const BiDegreeSequence& bds, VertexId pivot,
                                 std::span<const VertexId> members);

}  // namespace digraphical
