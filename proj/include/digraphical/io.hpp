#pragma once

// Text formats: degree files, edge lists, swap lines.

#include <string>
#include <string_view>

#include "digraphical/core.hpp"
#include "digraphical/swaps.hpp"

namespace digraphical::io {

/// Lines `<id> <out> <in>` or `<out> <in>` (implicit ids 0..n-1, counted over
/// data lines). `#` starts a comment; blank lines are skipped. Throws
/// ParseError (with line number), MixedFormats, NegativeDegree and
/// DuplicateVertexId.
BiDegreeSequence parse_bds(std::string_view text);

/// Lines `<u> <v>` meaning arc u->v. Throws ParseError, LoopArc, DuplicateArc.
DiGraph parse_edgelist(std::string_view text);

/// `<id> <out> <in>` per active vertex.
std::string format_bds(const BiDegreeSequence& bds);

/// `<u> <v>` per arc, in sorted order.
std::string format_edgelist(const DiGraph& g);

/// `pair 1>2,3>4 | 1>4,3>2`; triples use `triple4` (path) and `triple3`
/// (triangle).
std::string format_swap(const Swap& s);
/// Inverse of format_swap. Throws ParseError.
Swap parse_swap(std::string_view line);

}  // namespace digraphical::io
