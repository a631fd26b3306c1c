#include "digraphical/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace digraphical::io {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view tok) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

// Calls `fn(line_no, tokens)` for each non-blank, non-comment line.
template <class Fn>
void for_each_data_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens(line);
    if (toks.empty()) continue;
    std::vector<std::int64_t> values;
    for (auto t : toks) {
      auto v = to_int(t);
      if (!v) parse_fail(line_no, "not an integer: '" + std::string(t) + "'");
      values.push_back(*v);
    }
    fn(line_no, values);
  }
}

int to_degree(std::size_t line_no, std::int64_t v) {
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) {
    parse_fail(line_no, "degree out of range");
  }
  return static_cast<int>(v);
}

Arc parse_arc(std::string_view tok) {
  auto gt = tok.find('>');
  if (gt == std::string_view::npos) {
    throw Error(Errc::ParseError, "arc '" + std::string(tok) + "' lacks '>'");
  }
  auto u = to_int(tok.substr(0, gt));
  auto v = to_int(tok.substr(gt + 1));
  if (!u || !v) throw Error(Errc::ParseError, "bad arc '" + std::string(tok) + "'");
  return {*u, *v};
}

std::vector<Arc> parse_arc_list(std::string_view field) {
  auto toks = tokens(field);
  if (toks.size() != 1) throw Error(Errc::ParseError, "expected one comma-separated arc list");
  std::vector<Arc> arcs;
  for (auto t : split(toks[0], ',')) arcs.push_back(parse_arc(t));
  return arcs;
}

}  // namespace

BiDegreeSequence parse_bds(std::string_view text) {
  std::vector<Entry> entries;
  std::optional<std::size_t> width;
  for_each_data_line(text, [&](std::size_t line_no, const std::vector<std::int64_t>& v) {
    if (v.size() != 2 && v.size() != 3) parse_fail(line_no, "expected 2 or 3 integers");
    if (width && *width != v.size()) {
      throw Error(Errc::MixedFormats, "line " + std::to_string(line_no) +
                                          ": mixes implicit and explicit vertex ids");
    }
    width = v.size();
    if (v.size() == 2) {
      entries.push_back({static_cast<VertexId>(entries.size()),
                         {to_degree(line_no, v[0]), to_degree(line_no, v[1])}});
    } else {
      entries.push_back({v[0], {to_degree(line_no, v[1]), to_degree(line_no, v[2])}});
    }
  });
  return BiDegreeSequence::validate(std::move(entries));
}

DiGraph parse_edgelist(std::string_view text) {
  DiGraph g;
  for_each_data_line(text, [&](std::size_t line_no, const std::vector<std::int64_t>& v) {
    if (v.size() != 2) parse_fail(line_no, "expected 2 integers");
    try {
      g.add_arc(v[0], v[1]);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + std::to_string(v[0]) +
                                " " + std::to_string(v[1]));
    }
  });
  return g;
}

std::string format_bds(const BiDegreeSequence& bds) {
  std::ostringstream os;
  for (const auto& e : bds.entries()) {
    os << e.id << ' ' << e.deg.out_deg << ' ' << e.deg.in_deg << '\n';
  }
  return os.str();
}

std::string format_edgelist(const DiGraph& g) {
  std::ostringstream os;
  for (const auto& [u, v] : g.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string format_swap(const Swap& s) {
  auto list = [](const std::vector<Arc>& arcs) {
    std::string out;
    for (const auto& [u, v] : arcs) {
      if (!out.empty()) out += ',';
      out += std::to_string(u) + ">" + std::to_string(v);
    }
    return out;
  };
  return std::string(to_string(s.kind)) + " " + list(s.removed()) + " | " + list(s.added());
}

Swap parse_swap(std::string_view line) {
  auto bar = line.find('|');
  if (bar == std::string_view::npos) throw Error(Errc::ParseError, "swap line lacks '|'");
  auto head = tokens(line.substr(0, bar));
  if (head.size() != 2) throw Error(Errc::ParseError, "expected '<kind> <arcs> | <arcs>'");
  const auto removed = parse_arc_list(head[1]);
  const auto added = parse_arc_list(line.substr(bar + 1));

  Swap s;
  if (head[0] == "pair" && removed.size() == 2) {
    s = Swap::pair(removed[0].first, removed[0].second, removed[1].first, removed[1].second);
  } else if ((head[0] == "triple4" || head[0] == "triple3") && removed.size() == 3 &&
             removed[0].second == removed[1].first && removed[1].second == removed[2].first) {
    s = Swap::triple(removed[0].first, removed[1].first, removed[2].first, removed[2].second);
    if (head[0] != to_string(s.kind)) throw Error(Errc::ParseError, "kind does not match arcs");
  } else {
    throw Error(Errc::ParseError, "unrecognized swap '" + std::string(line) + "'");
  }
  if (s.added() != added) throw Error(Errc::ParseError, "added arcs do not match the pattern");
  return s;
}

}  // namespace digraphical::io
