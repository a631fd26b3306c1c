#include "digraphical/enumerate.hpp"

#include <algorithm>

#include "digraphical/realize.hpp"

namespace digraphical {

bool feasible_extension(const BranchState& bs) {
  const DegreePair pd = bs.reduced_bds.degree(bs.pivot);
  if (static_cast<std::size_t>(pd.out_deg) < bs.chosen.size()) return false;
  BiDegreeSequence reduced;
  try {
    std::vector<VertexId> chosen(bs.chosen.begin(), bs.chosen.end());
    reduced = bs.chosen.empty() ? bs.reduced_bds
                                : remove_out_arcs(bs.reduced_bds, bs.pivot, chosen);
  } catch (const Error&) {
    return false;
  }
  if (reduced.degree(bs.pivot).out_deg == 0) return is_bigraphical(reduced);

  // Committed neighbors cannot be chosen twice, so they join F.
  RestrictedInstance inst{reduced, bs.pivot, {}};
  for (const auto* set : {&bs.forbidden, &bs.chosen}) {
    for (VertexId v : *set) {
      if (v != bs.pivot && reduced.contains(v)) inst.forbidden.insert(v);
    }
  }
  return is_feasible_restricted(inst);
}

namespace {

class Search {
 public:
  Search(const BiDegreeSequence& bds, const std::function<bool(const DiGraph&)>& sink,
         const EnumerateOptions& opts)
      : ids_(bds.ids()), sink_(sink), opts_(opts) {}

  std::uint64_t run(const BiDegreeSequence& bds) {
    if (opts_.limit && *opts_.limit == 0) return 0;
    if (opts_.prune && !is_bigraphical(bds)) return 0;
    level(0, bds);
    return emitted_;
  }

 private:
  void level(std::size_t next, const BiDegreeSequence& bds) {
    while (next < ids_.size() && bds.degree(ids_[next]).out_deg == 0) ++next;
    if (next == ids_.size()) {
      if (bds.empty()) emit();
      return;
    }
    BranchState bs{bds, ids_[next], {}, {}, arcs_};
    std::vector<VertexId> candidates;
    for (VertexId v : bds.ids()) {
      if (v != bs.pivot) candidates.push_back(v);
    }
    branch(next, bs, candidates, 0);
  }

  void branch(std::size_t pivot_index, BranchState& bs, const std::vector<VertexId>& candidates,
              std::size_t j) {
    if (stopped_) return;
    const auto fan_out = static_cast<std::size_t>(bs.reduced_bds.degree(bs.pivot).out_deg);
    if (bs.chosen.size() == fan_out) {
      std::vector<VertexId> chosen(bs.chosen.begin(), bs.chosen.end());
      BiDegreeSequence reduced = remove_out_arcs(bs.reduced_bds, bs.pivot, chosen);
      for (VertexId h : chosen) arcs_.emplace_back(bs.pivot, h);
      level(pivot_index + 1, reduced);
      arcs_.resize(arcs_.size() - chosen.size());
      return;
    }
    if (j == candidates.size()) return;
    const VertexId c = candidates[j];

    if (bs.reduced_bds.degree(c).in_deg > 0) {
      bs.chosen.insert(c);
      if (!opts_.prune || feasible_extension(bs)) branch(pivot_index, bs, candidates, j + 1);
      bs.chosen.erase(c);
    }
    if (stopped_) return;
    bs.forbidden.insert(c);
    if (!opts_.prune || feasible_extension(bs)) branch(pivot_index, bs, candidates, j + 1);
    bs.forbidden.erase(c);
  }

  void emit() {
    std::vector<Arc> arcs = arcs_;
    std::sort(arcs.begin(), arcs.end());
    ++emitted_;
    if (!sink_(DiGraph(ids_, arcs))) stopped_ = true;
    if (opts_.limit && emitted_ >= *opts_.limit) stopped_ = true;
  }

  std::vector<VertexId> ids_;
  const std::function<bool(const DiGraph&)>& sink_;
  EnumerateOptions opts_;
  std::vector<Arc> arcs_;
  std::uint64_t emitted_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::uint64_t enumerate_all(const BiDegreeSequence& bds,
                            const std::function<bool(const DiGraph&)>& sink,
                            const EnumerateOptions& opts) {
  Search search(bds, sink, opts);
  return search.run(bds);
}

std::vector<DiGraph> enumerate_all(const BiDegreeSequence& bds, const EnumerateOptions& opts) {
  std::vector<DiGraph> out;
  enumerate_all(bds, [&](const DiGraph& g) {
    out.push_back(g);
    return true;
  }, opts);
  return out;
}

std::uint64_t count_realizations(const BiDegreeSequence& bds) {
  return enumerate_all(bds, [](const DiGraph&) { return true; });
}

}  // namespace digraphical
