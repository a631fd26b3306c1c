#pragma once

// Shared helpers for the unit and acceptance suites: generators and
// brute-force references that do not go through the library's reduction code.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "digraphical/core.hpp"
#include "digraphical/realize.hpp"

namespace digraphical::testing {

/// Sequence from (id, out, in) triples.
inline BiDegreeSequence bds(std::initializer_list<std::tuple<VertexId, int, int>> rows) {
  std::vector<Entry> entries;
  for (const auto& [id, out, in] : rows) entries.push_back({id, {out, in}});
  return BiDegreeSequence::validate(std::move(entries));
}

/// (1,1) repeated n times on ids 0..n-1.
inline BiDegreeSequence ones(std::size_t n) {
  std::vector<DegreePair> pairs(n, DegreePair{1, 1});
  return BiDegreeSequence::from_pairs(pairs);
}

/// G(n, p) digraph on vertices 0..n-1.
inline DiGraph random_digraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  DiGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && coin(rng)) g.add_arc(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  return g;
}

/// Every sequence on ids 0..n-1 with both degrees in 0..max_deg.
inline std::vector<BiDegreeSequence> all_sequences(std::size_t n, int max_deg) {
  std::vector<BiDegreeSequence> out;
  const int base = max_deg + 1;
  std::size_t total = 1;
  for (std::size_t j = 0; j < 2 * n; ++j) total *= static_cast<std::size_t>(base);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<DegreePair> pairs(n);
    std::size_t c = code;
    for (std::size_t v = 0; v < n; ++v) {
      pairs[v].out_deg = static_cast<int>(c % base);
      c /= base;
      pairs[v].in_deg = static_cast<int>(c % base);
      c /= base;
    }
    out.push_back(BiDegreeSequence::from_pairs(pairs));
  }
  return out;
}

/// Brute force over all simple undirected graphs on |d| labeled vertices.
inline bool undirected_oracle(const std::vector<int>& d) {
  const std::size_t n = d.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<int> deg(n, 0);
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if ((mask >> j) & 1U) {
        ++deg[edges[j].first];
        ++deg[edges[j].second];
      }
    }
    if (deg == d) return true;
  }
  return false;
}

namespace detail {

inline void reachable_from(const BiDegreeSequence& cur, std::vector<Arc>& arcs,
                           std::set<std::vector<Arc>>& out) {
  bool any_pivot = false;
  for (const auto& pe : cur.entries()) {
    if (pe.deg.out_deg == 0) continue;
    any_pivot = true;
    const auto need = static_cast<std::size_t>(pe.deg.out_deg);
    std::vector<Entry> rest;
    for (const auto& e : cur.entries()) {
      if (e.id != pe.id) rest.push_back(e);
    }
    if (rest.size() < need) continue;
    std::stable_sort(rest.begin(), rest.end(),
                     [](const Entry& a, const Entry& b) { return dominates(a.deg, b.deg); });
    // Every vertex strictly ahead of the boundary class is forced; the rest
    // of the fan-out is any subset of the tied boundary class.
    const DegreePair boundary = rest[need - 1].deg;
    std::vector<VertexId> forced, tied;
    for (const auto& e : rest) {
      if (dominates(e.deg, boundary)) {
        forced.push_back(e.id);
      } else if (e.deg == boundary) {
        tied.push_back(e.id);
      }
    }
    const std::size_t pick = need - forced.size();
    std::vector<bool> sel(tied.size(), false);
    std::fill(sel.begin(), sel.begin() + static_cast<std::ptrdiff_t>(pick), true);
    do {
      std::vector<VertexId> heads = forced;
      for (std::size_t j = 0; j < tied.size(); ++j) {
        if (sel[j]) heads.push_back(tied[j]);
      }
      BiDegreeSequence next;
      try {
        next = remove_out_arcs(cur, pe.id, heads);
      } catch (const Error&) {
        continue;
      }
      for (VertexId h : heads) arcs.emplace_back(pe.id, h);
      reachable_from(next, arcs, out);
      arcs.resize(arcs.size() - heads.size());
    } while (std::prev_permutation(sel.begin(), sel.end()));
  }
  if (!any_pivot && cur.empty()) {
    auto sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    out.insert(sorted);
  }
}

}  // namespace detail

/// Arc sets of every output of the greedy procedure when both the pivot and
/// the tie order inside each normal order are chosen freely.
inline std::set<std::vector<Arc>> greedy_reachable(const BiDegreeSequence& seq) {
  std::set<std::vector<Arc>> out;
  std::vector<Arc> arcs;
  detail::reachable_from(seq, arcs, out);
  return out;
}

}  // namespace digraphical::testing
