#include "digraphical/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "digraphical/enumerate.hpp"
#include "digraphical/io.hpp"
#include "digraphical/oracle.hpp"
#include "digraphical/realize.hpp"
#include "digraphical/sampler.hpp"
#include "digraphical/swaps.hpp"

namespace digraphical::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string input2;
  std::string format = "edgelist";
  std::string strategy = "max-out";
  std::uint64_t seed = 0;
  std::uint64_t steps = 1000;
  std::uint64_t thinning = 1;
  double pair_prob = 0.5;
  std::uint64_t count = 1;
  std::uint64_t limit = 0;
  bool count_only = false;
  bool trim = false;
  VertexId pivot = 0;
  std::string forbidden;
  std::size_t oracle_n = 0;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

PivotStrategy strategy_of(const std::string& name) {
  return name == "min-index" ? PivotStrategy::MinIndex : PivotStrategy::MaxOut;
}

json arcs_json(const DiGraph& g) {
  json arcs = json::array();
  for (const auto& [u, v] : g.arcs()) arcs.push_back({u, v});
  return arcs;
}

std::set<VertexId> parse_id_list(const std::string& text) {
  std::set<VertexId> ids;
  if (text.empty()) return ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(Errc::ParseError, "bad vertex id '" + item + "' in --forbidden");
    }
    ids.insert(v);
  }
  return ids;
}

// Writes one graph as a `# <label>` header plus edge-list block.
void write_block(std::ostream& out, const std::string& label, const DiGraph& g, bool first) {
  if (!first) out << '\n';
  out << "# " << label << '\n' << io::format_edgelist(g);
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const auto bds = io::parse_bds(read_input(o.input, in));
  const bool ok = is_bigraphical(bds, strategy_of(o.strategy));
  if (o.format == "json") {
    out << json{{"bigraphical", ok}}.dump() << '\n';
  } else {
    out << (ok ? "bi-graphical" : "not bi-graphical") << '\n';
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_realize(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto bds = io::parse_bds(read_input(o.input, in));
  const auto report = realize_greedy(bds, strategy_of(o.strategy));
  if (!report.ok()) {
    err << "not bi-graphical (reduction round " << *report.failed_step << ")\n";
    return kExitNegative;
  }
  if (o.format == "json") {
    out << json{{"arcs", arcs_json(*report.graph)}}.dump() << '\n';
  } else {
    out << io::format_edgelist(*report.graph);
  }
  return kExitOk;
}

int cmd_sample(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto bds = io::parse_bds(read_input(o.input, in));
  const auto start = realize_greedy(bds, strategy_of(o.strategy));
  if (!start.ok()) {
    err << "not bi-graphical; nothing to sample\n";
    return kExitNegative;
  }
  json all = json::array();
  bool first = true;
  for (std::uint64_t chain = 0; chain < o.count; ++chain) {
    ChainConfig cfg{o.steps, o.seed + chain, o.pair_prob, o.thinning};
    const auto samples = run_chain(*start.graph, cfg);
    for (std::size_t s = 0; s < samples.size(); ++s) {
      if (o.format == "edgelist") {
        write_block(out, "chain " + std::to_string(chain) + " sample " + std::to_string(s),
                    samples[s], first);
        first = false;
      } else {
        json row{{"chain", chain}, {"sample", s}, {"arcs", arcs_json(samples[s])}};
        if (o.format == "jsonl") {
          out << row.dump() << '\n';
        } else {
          all.push_back(std::move(row));
        }
      }
    }
  }
  if (o.format == "json") out << json{{"samples", all}}.dump() << '\n';
  return kExitOk;
}

int cmd_path(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto g1 = io::parse_edgelist(read_input(o.input, in));
  const auto g2 = io::parse_edgelist(read_input(o.input2, in));
  const auto seq = swap_path(g1, g2, o.trim);
  if (!verify_path(g1, seq, g2)) {
    err << "internal error: constructed swap path failed verification\n";
    return kExitNegative;
  }
  if (o.format == "json") {
    json swaps = json::array();
    for (const auto& s : seq) swaps.push_back(io::format_swap(s));
    out << json{{"length", seq.size()}, {"bound", 2 * g1.arc_count()}, {"swaps", swaps}}.dump()
        << '\n';
  } else {
    for (const auto& s : seq) out << io::format_swap(s) << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::istream& in, std::ostream& out) {
  const auto bds = io::parse_bds(read_input(o.input, in));
  EnumerateOptions opts;
  if (o.limit > 0) opts.limit = o.limit;
  std::uint64_t index = 0;
  const auto total = enumerate_all(bds, [&](const DiGraph& g) {
    if (!o.count_only) {
      if (o.format == "jsonl") {
        out << json{{"index", index}, {"arcs", arcs_json(g)}}.dump() << '\n';
      } else {
        write_block(out, "realization " + std::to_string(index), g, index == 0);
      }
    }
    ++index;
    return true;
  }, opts);
  if (o.count_only) out << total << '\n';
  return total > 0 ? kExitOk : kExitNegative;
}

int cmd_restricted(const Options& o, std::istream& in, std::ostream& out) {
  RestrictedInstance inst{io::parse_bds(read_input(o.input, in)), o.pivot,
                          parse_id_list(o.forbidden)};
  const bool ok = is_feasible_restricted(inst);
  if (o.format == "json") {
    out << json{{"feasible", ok}}.dump() << '\n';
  } else {
    out << (ok ? "feasible" : "infeasible") << '\n';
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_degrees(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = io::parse_edgelist(read_input(o.input, in));
  const auto bds = bds_of(g);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& e : bds.entries()) rows.push_back({e.id, e.deg.out_deg, e.deg.in_deg});
    out << json{{"degrees", rows}}.dump() << '\n';
  } else {
    out << io::format_bds(bds);
  }
  return kExitOk;
}

int cmd_oracle(const Options& o, std::istream& in, std::ostream& out) {
  const auto bds = io::parse_bds(read_input(o.input, in));
  std::size_t n = o.oracle_n;
  if (n == 0) {
    for (const auto& e : bds.entries()) n = std::max<std::size_t>(n, static_cast<std::size_t>(e.id) + 1);
  }
  oracle::Budget budget{oracle::kHardCap};
  if (o.count_only) {
    const auto c = oracle::count(bds, n, budget);
    out << c << '\n';
    return c > 0 ? kExitOk : kExitNegative;
  }
  const auto graphs = oracle::realizations(bds, n, budget);
  for (std::size_t j = 0; j < graphs.size(); ++j) {
    write_block(out, "realization " + std::to_string(j), graphs[j], j == 0);
  }
  return graphs.empty() ? kExitNegative : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Decide, build, sample and enumerate digraphs with prescribed degree pairs",
               "digraphical"};
  app.require_subcommand(1);
  Options o;

  auto add_strategy = [&](CLI::App* sub) {
    sub->add_option("--pivot-strategy", o.strategy, "Pivot rule for greedy rounds")
        ->check(CLI::IsMember({"max-out", "min-index"}));
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };

  auto* check = app.add_subcommand("check", "Decide whether a degree file is bi-graphical");
  check->add_option("file", o.input, "Degree file ('-' for stdin)")->required();
  add_strategy(check);
  add_format(check, {"edgelist", "json"});

  auto* realize = app.add_subcommand("realize", "Print the greedy realization");
  realize->add_option("file", o.input, "Degree file ('-' for stdin)")->required();
  add_strategy(realize);
  add_format(realize, {"edgelist", "json"});

  auto* sample = app.add_subcommand("sample", "Random realizations by swap-chain sampling");
  sample->add_option("file", o.input, "Degree file ('-' for stdin)")->required();
  sample->add_option("--seed", o.seed, "Chain seed; chain c uses seed + c");
  sample->add_option("--steps", o.steps, "Steps per chain");
  sample->add_option("--thinning", o.thinning, "Record every n-th state")
      ->check(CLI::PositiveNumber);
  sample->add_option("--pair-prob", o.pair_prob, "Probability of proposing a pair swap")
      ->check(CLI::Range(0.0, 1.0));
  sample->add_option("--count", o.count, "Number of independent chains")
      ->check(CLI::PositiveNumber);
  add_strategy(sample);
  add_format(sample, {"edgelist", "json", "jsonl"});

  auto* path = app.add_subcommand("path", "Swap sequence between two realizations");
  path->add_option("from", o.input, "Edge list of the first realization")->required();
  path->add_option("to", o.input2, "Edge list of the second realization")->required();
  path->add_flag("--trim", o.trim, "Drop adjacent inverse swap pairs");
  add_format(path, {"edgelist", "json"});

  auto* enumerate = app.add_subcommand("enumerate", "List every labeled realization");
  enumerate->add_option("file", o.input, "Degree file ('-' for stdin)")->required();
  enumerate->add_option("--limit", o.limit, "Stop after this many realizations (0 = all)");
  enumerate->add_flag("--count-only", o.count_only, "Print only the number of realizations");
  add_format(enumerate, {"edgelist", "jsonl"});

  auto* restricted = app.add_subcommand(
      "restricted-check", "Decide realizability with forbidden out-neighbors of one vertex");
  restricted->add_option("file", o.input, "Degree file ('-' for stdin)")->required();
  restricted->add_option("--pivot", o.pivot, "Vertex whose out-neighbors are restricted")
      ->required();
  restricted->add_option("--forbidden", o.forbidden, "Comma-separated forbidden vertex ids");
  add_format(restricted, {"edgelist", "json"});

  auto* degrees = app.add_subcommand("degrees", "Degree pairs of an edge list");
  degrees->add_option("file", o.input, "Edge list ('-' for stdin)")->required();
  add_format(degrees, {"edgelist", "json"});

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force realizations (testing aid)");
  oracle_cmd->group("");
  oracle_cmd->add_option("file", o.input)->required();
  oracle_cmd->add_option("--n", o.oracle_n);
  oracle_cmd->add_flag("--count-only", o.count_only);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(o, in, out);
    if (realize->parsed()) return cmd_realize(o, in, out, err);
    if (sample->parsed()) return cmd_sample(o, in, out, err);
    if (path->parsed()) return cmd_path(o, in, out, err);
    if (enumerate->parsed()) return cmd_enumerate(o, in, out);
    if (restricted->parsed()) return cmd_restricted(o, in, out);
    if (degrees->parsed()) return cmd_degrees(o, in, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace digraphical::cli
