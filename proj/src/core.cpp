#include "digraphical/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace digraphical {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NegativeDegree: return "NegativeDegree";
    case Errc::DuplicateVertexId: return "DuplicateVertexId";
    case Errc::UnknownPivot: return "UnknownPivot";
    case Errc::InvalidPON: return "InvalidPON";
    case Errc::CardinalityMismatch: return "CardinalityMismatch";
    case Errc::NotEnoughAllowedVertices: return "NotEnoughAllowedVertices";
    case Errc::InvalidInstance: return "InvalidInstance";
    case Errc::SwapNotApplicable: return "SwapNotApplicable";
    case Errc::PrecedenceViolated: return "PrecedenceViolated";
    case Errc::NoCaseApplies: return "NoCaseApplies";
    case Errc::NotLeftOf: return "NotLeftOf";
    case Errc::DegreeSequenceMismatch: return "DegreeSequenceMismatch";
    case Errc::SampleOutsideSupport: return "SampleOutsideSupport";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::MixedFormats: return "MixedFormats";
    case Errc::LoopArc: return "LoopArc";
    case Errc::DuplicateArc: return "DuplicateArc";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

// ---------------------------------------------------------------------------
// BiDegreeSequence

BiDegreeSequence BiDegreeSequence::validate(std::vector<Entry> entries) {
  for (const auto& e : entries) {
    if (e.deg.out_deg < 0 || e.deg.in_deg < 0) {
      throw Error(Errc::NegativeDegree, "vertex " + std::to_string(e.id));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.id < b.id; });
  auto dup = std::adjacent_find(entries.begin(), entries.end(),
                                [](const Entry& a, const Entry& b) { return a.id == b.id; });
  if (dup != entries.end()) {
    throw Error(Errc::DuplicateVertexId, "vertex " + std::to_string(dup->id));
  }
  std::erase_if(entries, [](const Entry& e) { return e.deg.is_zero(); });
  BiDegreeSequence out;
  out.entries_ = std::move(entries);
  return out;
}

BiDegreeSequence BiDegreeSequence::from_pairs(std::span<const DegreePair> pairs) {
  std::vector<Entry> entries;
  entries.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    entries.push_back({static_cast<VertexId>(i), pairs[i]});
  }
  return validate(std::move(entries));
}

BiDegreeSequence BiDegreeSequence::from_pairs(std::initializer_list<DegreePair> pairs) {
  return from_pairs(std::span<const DegreePair>(pairs.begin(), pairs.size()));
}

namespace {

template <class Entries>
auto find_entry(Entries& entries, VertexId id) {
  return std::lower_bound(entries.begin(), entries.end(), id,
                          [](const Entry& e, VertexId v) { return e.id < v; });
}

}  // namespace

bool BiDegreeSequence::contains(VertexId id) const noexcept {
  auto it = find_entry(entries_, id);
  return it != entries_.end() && it->id == id;
}

DegreePair BiDegreeSequence::degree(VertexId id) const noexcept {
  auto it = find_entry(entries_, id);
  if (it != entries_.end() && it->id == id) return it->deg;
  return {};
}

std::vector<VertexId> BiDegreeSequence::ids() const {
  std::vector<VertexId> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

long BiDegreeSequence::out_sum() const noexcept {
  long s = 0;
  for (const auto& e : entries_) s += e.deg.out_deg;
  return s;
}

long BiDegreeSequence::in_sum() const noexcept {
  long s = 0;
  for (const auto& e : entries_) s += e.deg.in_deg;
  return s;
}

std::string to_string(const BiDegreeSequence& bds) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& e : bds.entries()) {
    if (!first) os << ", ";
    first = false;
    os << 'v' << e.id << '(' << e.deg.out_deg << ',' << e.deg.in_deg << ')';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// DiGraph

DiGraph::DiGraph(std::size_t n) {
  vertices_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) vertices_.push_back(static_cast<VertexId>(v));
}

DiGraph::DiGraph(std::vector<VertexId> vertices, std::span<const Arc> arcs) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  vertices_ = std::move(vertices);
  for (const auto& [u, v] : arcs) add_arc(u, v);
}

DiGraph DiGraph::from_arcs(std::span<const Arc> arcs) {
  return DiGraph({}, arcs);
}

DiGraph DiGraph::from_arcs(std::initializer_list<Arc> arcs) {
  return from_arcs(std::span<const Arc>(arcs.begin(), arcs.size()));
}

void DiGraph::add_vertex(VertexId v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void DiGraph::add_arc(VertexId u, VertexId v) {
  if (u == v) throw Error(Errc::LoopArc, std::to_string(u) + ">" + std::to_string(v));
  Arc a{u, v};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it != arcs_.end() && *it == a) {
    throw Error(Errc::DuplicateArc, std::to_string(u) + ">" + std::to_string(v));
  }
  arcs_.insert(it, a);
  add_vertex(u);
  add_vertex(v);
}

bool DiGraph::remove_arc(VertexId u, VertexId v) {
  Arc a{u, v};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || *it != a) return false;
  arcs_.erase(it);
  return true;
}

bool DiGraph::has_arc(VertexId u, VertexId v) const noexcept {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

bool DiGraph::has_vertex(VertexId v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<VertexId> DiGraph::out_neighbors(VertexId u) const {
  std::vector<VertexId> out;
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, std::numeric_limits<VertexId>::min()});
  for (; it != arcs_.end() && it->first == u; ++it) out.push_back(it->second);
  return out;
}

bool DiGraph::is_simple() const noexcept {
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (arcs_[i].first == arcs_[i].second) return false;
    if (i > 0 && arcs_[i - 1] >= arcs_[i]) return false;
  }
  return true;
}

BiDegreeSequence bds_of(const DiGraph& g) {
  const auto& vs = g.vertices();
  std::vector<Entry> entries(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) entries[i].id = vs[i];
  auto slot = [&](VertexId v) -> Entry& {
    return *find_entry(entries, v);
  };
  for (const auto& [u, v] : g.arcs()) {
    ++slot(u).deg.out_deg;
    ++slot(v).deg.in_deg;
  }
  return BiDegreeSequence::validate(std::move(entries));
}

// ---------------------------------------------------------------------------
// Orderings and out-neighborhoods

std::optional<std::size_t> Ordering::position(VertexId id) const noexcept {
  auto it = std::find(order.begin(), order.end(), id);
  if (it == order.end()) return std::nullopt;
  return static_cast<std::size_t>(it - order.begin());
}

Ordering normal_order(const BiDegreeSequence& bds, VertexId pivot) {
  if (!bds.contains(pivot)) {
    throw Error(Errc::UnknownPivot, "vertex " + std::to_string(pivot));
  }
  std::vector<Entry> rest;
  rest.reserve(bds.size());
  for (const auto& e : bds.entries()) {
    if (e.id != pivot) rest.push_back(e);
  }
  // Entries are already id-sorted, so a stable sort keeps the id tie-break.
  std::stable_sort(rest.begin(), rest.end(),
                   [](const Entry& a, const Entry& b) { return dominates(a.deg, b.deg); });
  Ordering ord;
  ord.order.reserve(bds.size());
  for (const auto& e : rest) ord.order.push_back(e.id);
  ord.order.push_back(pivot);
  return ord;
}

bool is_normal_order(const BiDegreeSequence& bds, const Ordering& ord) {
  if (ord.size() != bds.size()) return false;
  for (std::size_t i = 0; i + 2 < ord.size(); ++i) {
    if (dominates(bds.degree(ord.order[i + 1]), bds.degree(ord.order[i]))) return false;
  }
  return true;
}

OutNeighborhood make_pon(const Ordering& ord, std::span<const VertexId> members) {
  if (ord.order.empty()) throw Error(Errc::InvalidPON, "empty ordering");
  OutNeighborhood pon;
  pon.pivot = ord.pivot();
  pon.members.assign(members.begin(), members.end());
  std::sort(pon.members.begin(), pon.members.end());
  if (std::adjacent_find(pon.members.begin(), pon.members.end()) != pon.members.end()) {
    throw Error(Errc::InvalidPON, "repeated member");
  }
  for (VertexId m : pon.members) {
    if (m == pon.pivot) throw Error(Errc::InvalidPON, "pivot cannot be its own out-neighbor");
    auto pos = ord.position(m);
    if (!pos) throw Error(Errc::InvalidPON, "vertex " + std::to_string(m) + " not in ordering");
    pon.index_vector.push_back(*pos);
  }
  std::sort(pon.index_vector.begin(), pon.index_vector.end());
  return pon;
}

OutNeighborhood leftmost_pon(const Ordering& ord, std::size_t k) {
  if (ord.order.empty() || k + 1 > ord.size()) {
    throw Error(Errc::InvalidPON, "not enough vertices for " + std::to_string(k) + " out-neighbors");
  }
  return make_pon(ord, std::span<const VertexId>(ord.order.data(), k));
}

bool is_left_of(const OutNeighborhood& b, const OutNeighborhood& a) {
  if (b.index_vector.size() != a.index_vector.size()) {
    throw Error(Errc::CardinalityMismatch, std::to_string(b.index_vector.size()) + " vs " +
                                               std::to_string(a.index_vector.size()));
  }
  for (std::size_t j = 0; j < a.index_vector.size(); ++j) {
    if (b.index_vector[j] > a.index_vector[j]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Reductions

std::optional<BiDegreeSequence> reduce_pivot(const BiDegreeSequence& bds, const Ordering& ord) {
  if (ord.size() != bds.size() || ord.order.empty()) {
    throw Error(Errc::InvalidArgument, "ordering does not cover the sequence");
  }
  const VertexId pivot = ord.pivot();
  const DegreePair pd = bds.degree(pivot);
  const auto fan_out = static_cast<std::size_t>(pd.out_deg);
  if (fan_out + 1 > bds.size()) return std::nullopt;

  std::vector<Entry> next = bds.entries();
  for (std::size_t p = 0; p < fan_out; ++p) {
    Entry& e = *find_entry(next, ord.order[p]);
    if (e.deg.in_deg == 0) return std::nullopt;
    --e.deg.in_deg;
  }
  find_entry(next, pivot)->deg.out_deg = 0;
  return BiDegreeSequence::validate(std::move(next));
}

BiDegreeSequence remove_out_arcs(const BiDegreeSequence& bds, VertexId pivot,
                                 std::span<const VertexId> members) {
  if (!bds.contains(pivot)) throw Error(Errc::UnknownPivot, "vertex " + std::to_string(pivot));
  std::vector<Entry> next = bds.entries();
  Entry& p = *find_entry(next, pivot);
  if (static_cast<std::size_t>(p.deg.out_deg) < members.size()) {
    throw Error(Errc::InvalidPON, "more members than pivot out-degree");
  }
  p.deg.out_deg -= static_cast<int>(members.size());
  for (VertexId m : members) {
    auto it = find_entry(next, m);
    if (m == pivot || it == next.end() || it->id != m || it->deg.in_deg == 0) {
      throw Error(Errc::InvalidPON, "vertex " + std::to_string(m) + " has no in-degree left");
    }
    --it->deg.in_deg;
  }
  return BiDegreeSequence::validate(std::move(next));
}

BiDegreeSequence a_reduce(const BiDegreeSequence& bds, const OutNeighborhood& pon) {
  const DegreePair pd = bds.degree(pon.pivot);
  if (pon.members.size() != static_cast<std::size_t>(pd.out_deg)) {
    throw Error(Errc::InvalidPON, "|A| = " + std::to_string(pon.members.size()) +
                                      " but pivot out-degree is " + std::to_string(pd.out_deg));
  }
  return remove_out_arcs(bds, pon.pivot, pon.members);
}

}  // namespace digraphical
