#include "digraphical/swaps.hpp"

#include <algorithm>

#include "digraphical/realize.hpp"

namespace digraphical {

const char* to_string(SwapKind kind) noexcept {
  switch (kind) {
    case SwapKind::Pair: return "pair";
    case SwapKind::TriplePath: return "triple4";
    case SwapKind::TripleTriangle: return "triple3";
  }
  return "unknown";
}

Swap Swap::pair(VertexId a, VertexId b, VertexId c, VertexId d) {
  return {SwapKind::Pair, a, b, c, d};
}

Swap Swap::triple(VertexId a, VertexId b, VertexId c, VertexId d) {
  if (d == a) return {SwapKind::TripleTriangle, a, b, c, a};
  return {SwapKind::TriplePath, a, b, c, d};
}

std::vector<Arc> Swap::removed() const {
  if (kind == SwapKind::Pair) return {{a, b}, {c, d}};
  return {{a, b}, {b, c}, {c, d}};
}

std::vector<Arc> Swap::added() const {
  if (kind == SwapKind::Pair) return {{a, d}, {c, b}};
  return {{a, c}, {c, b}, {b, d}};
}

Swap inverse(const Swap& s) {
  if (s.kind == SwapKind::Pair) return Swap::pair(s.a, s.d, s.c, s.b);
  return Swap::triple(s.a, s.c, s.b, s.d);
}

SwapSequence reverse_inverted(const SwapSequence& seq) {
  SwapSequence out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

namespace {

std::string arc_str(const Arc& a) {
  return std::to_string(a.first) + ">" + std::to_string(a.second);
}

bool has_repeat(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  return std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end();
}

}  // namespace

DiGraph apply_swap(const DiGraph& g, const Swap& s) {
  const auto removed = s.removed();
  const auto added = s.added();
  if (has_repeat(removed)) throw Error(Errc::SwapNotApplicable, "repeated removed arc");
  if (has_repeat(added)) throw Error(Errc::SwapNotApplicable, "repeated added arc");
  for (const auto& arc : removed) {
    if (!g.has_arc(arc.first, arc.second)) {
      throw Error(Errc::SwapNotApplicable, "arc " + arc_str(arc) + " absent");
    }
  }
  for (const auto& arc : added) {
    if (arc.first == arc.second) throw Error(Errc::SwapNotApplicable, "loop " + arc_str(arc));
    if (g.has_arc(arc.first, arc.second)) {
      throw Error(Errc::SwapNotApplicable, "arc " + arc_str(arc) + " already present");
    }
  }
  DiGraph out = g;
  for (const auto& arc : removed) out.remove_arc(arc.first, arc.second);
  for (const auto& arc : added) out.add_arc(arc.first, arc.second);
  return out;
}

ShiftResult shift_one(const DiGraph& g, VertexId pivot, VertexId leave, VertexId enter) {
  const VertexId n = pivot, k = leave, i = enter;
  if (i == n || k == n || i == k || !g.has_arc(n, k) || g.has_arc(n, i)) {
    throw Error(Errc::SwapNotApplicable, "need pivot>leave present and pivot>enter absent");
  }
  const BiDegreeSequence bds = bds_of(g);
  if (dominates(bds.degree(k), bds.degree(i))) {
    throw Error(Errc::PrecedenceViolated,
                "vertex " + std::to_string(i) + " does not precede " + std::to_string(k));
  }
  auto other = [&](VertexId v) { return v != i && v != k && v != n; };

  // Case 1: some l sends an arc to i but not to k.
  for (VertexId l : g.vertices()) {
    if (other(l) && g.has_arc(l, i) && !g.has_arc(l, k)) {
      Swap s = Swap::pair(n, k, l, i);
      return {s, apply_swap(g, s)};
    }
  }
  // Case 2: k>i present, i>k absent, and i reaches some m that k does not.
  if (g.has_arc(k, i) && !g.has_arc(i, k)) {
    for (VertexId m : g.vertices()) {
      if (other(m) && g.has_arc(i, m) && !g.has_arc(k, m)) {
        Swap s = Swap::triple(n, k, i, m);
        return {s, apply_swap(g, s)};
      }
    }
    // Case 3: the triangle n>k>i>n can be reversed.
    if (g.has_arc(i, n) && !g.has_arc(k, n)) {
      Swap s = Swap::triple(n, k, i, n);
      return {s, apply_swap(g, s)};
    }
  }
  throw Error(Errc::NoCaseApplies, "pivot " + std::to_string(n) + ", leave " +
                                       std::to_string(k) + ", enter " + std::to_string(i));
}

ShiftLeftResult shift_left(const DiGraph& g, const OutNeighborhood& target, const Ordering& ord) {
  const VertexId pivot = ord.pivot();
  if (target.pivot != pivot) throw Error(Errc::InvalidPON, "target belongs to another pivot");
  const auto current_members = g.out_neighbors(pivot);
  const OutNeighborhood current = make_pon(ord, current_members);
  if (!is_left_of(target, current)) throw Error(Errc::NotLeftOf, "target is not left of current");

  // Position-wise pairing of the two differences is the unique bijection
  // sending each entering position to a strictly larger leaving position.
  std::vector<std::size_t> entering, leaving;
  std::set_difference(target.index_vector.begin(), target.index_vector.end(),
                      current.index_vector.begin(), current.index_vector.end(),
                      std::back_inserter(entering));
  std::set_difference(current.index_vector.begin(), current.index_vector.end(),
                      target.index_vector.begin(), target.index_vector.end(),
                      std::back_inserter(leaving));

  ShiftLeftResult result{{}, g};
  for (std::size_t j = 0; j < entering.size(); ++j) {
    auto shifted = shift_one(result.graph, pivot, ord.order[leaving[j]], ord.order[entering[j]]);
    result.steps.push_back(shifted.swap);
    result.graph = std::move(shifted.graph);
  }
  return result;
}

CanonicalForm canonicalize(const DiGraph& g) {
  CanonicalForm out{{}, g};
  DiGraph residual = g;
  for (;;) {
    const BiDegreeSequence bds = bds_of(residual);
    auto pivot = choose_pivot(bds, PivotStrategy::MaxOut);
    if (!pivot) break;
    const Ordering ord = normal_order(bds, *pivot);
    const auto fan_out = static_cast<std::size_t>(bds.degree(*pivot).out_deg);
    auto shifted = shift_left(residual, leftmost_pon(ord, fan_out), ord);
    // Frozen arcs leave from vertices with no residual out-degree, so a swap
    // on the residual graph is also legal on the full graph.
    for (const auto& s : shifted.steps) out.graph = apply_swap(out.graph, s);
    out.steps.insert(out.steps.end(), shifted.steps.begin(), shifted.steps.end());
    residual = std::move(shifted.graph);
    for (VertexId h : residual.out_neighbors(*pivot)) residual.remove_arc(*pivot, h);
  }
  return out;
}

SwapSequence trim_inverse_pairs(SwapSequence seq) {
  SwapSequence kept;
  kept.reserve(seq.size());
  for (const auto& s : seq) {
    if (!kept.empty() && kept.back() == inverse(s)) {
      kept.pop_back();
    } else {
      kept.push_back(s);
    }
  }
  return kept;
}

SwapSequence swap_path(const DiGraph& g1, const DiGraph& g2, bool trim) {
  if (bds_of(g1) != bds_of(g2)) {
    throw Error(Errc::DegreeSequenceMismatch, "endpoints realize different sequences");
  }
  SwapSequence path = canonicalize(g1).steps;
  SwapSequence back = reverse_inverted(canonicalize(g2).steps);
  path.insert(path.end(), back.begin(), back.end());
  if (trim) path = trim_inverse_pairs(std::move(path));
  return path;
}

bool verify_path(const DiGraph& g1, const SwapSequence& seq, const DiGraph& g2) {
  const BiDegreeSequence target = bds_of(g1);
  DiGraph cur = g1;
  try {
    for (const auto& s : seq) {
      cur = apply_swap(cur, s);
      if (!cur.is_simple() || bds_of(cur) != target) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return cur.arcs() == g2.arcs();
}

}  // namespace digraphical
