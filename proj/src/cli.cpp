#include "distpoly/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "distpoly/charpoly.hpp"
#include "distpoly/distance.hpp"
#include "distpoly/errors.hpp"
#include "distpoly/graph_io.hpp"
#include "distpoly/report.hpp"
#include "distpoly/sweep.hpp"
#include "distpoly/tree_enum.hpp"

namespace distpoly {
namespace {

std::string seconds(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(s < 10 ? 2 : 1) << s;
  return o.str();
}

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GraphSource {
  std::string input;
  std::string format = "edgelist";
  std::string builtin;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t parse_builtin_order(const std::string& name, std::size_t colon) {
  const std::string digits = name.substr(colon + 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6) {
    throw ParseError("malformed builtin '" + name + "'");
  }
  return std::stoul(digits);
}

Graph builtin_graph(const std::string& name) {
  if (name == "heawood") return heawood();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string family = name.substr(0, colon);
    const std::size_t n = parse_builtin_order(name, colon);
    if (family == "path") return path_graph(n);
    if (family == "star") return star_graph(n);
    if (family == "cycle") return cycle_graph(n);
  }
  throw ParseError("unknown builtin '" + name + "' (expected heawood, path:N, star:N or cycle:N)");
}

std::vector<Graph> load_graphs(const GraphSource& src) {
  if (!src.builtin.empty()) return {builtin_graph(src.builtin)};
  if (src.input.empty()) throw ParseError("one of --input or --builtin is required");
  const std::string text = read_all(src.input);
  if (src.format == "graph6") return graphs_from_graph6_lines(text);
  return {from_edge_list(text)};
}

void add_source_options(CLI::App* cmd, GraphSource& src) {
  auto* input = cmd->add_option("--input", src.input, "Input file ('-' for stdin)");
  auto* builtin = cmd->add_option("--builtin", src.builtin, "heawood, path:N, star:N or cycle:N");
  input->excludes(builtin);
  cmd->add_option("--format", src.format, "Input format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
}

// One graph: indented JSON. Several (graph6 files): one compact object per line.
void emit(std::ostream& out, const std::vector<json>& docs) {
  if (docs.size() == 1) {
    out << docs.front().dump(2) << "\n";
    return;
  }
  for (const json& doc : docs) out << doc.dump() << "\n";
}

int run_charpoly(const GraphSource& src, std::ostream& out) {
  std::vector<json> docs;
  for (const Graph& g : load_graphs(src)) {
    const DistanceMatrix dm = distance_matrix(g);
    const CharPoly p = charpoly(dm);
    const DeltaSeq delta = delta_seq(p);
    json doc{{"n", g.order()}};
    json c = json::array(), ds = json::array(), d = nullptr;
    for (const BigInt& x : p.coeffs) c.push_back(to_string(x));
    for (const BigInt& x : delta.values) ds.push_back(to_string(x));
    if (g.order() >= 3) {
      d = json::array();
      for (const Dyadic& x : normalized_seq(delta).values) d.push_back(x.str());
    }
    doc["charpoly"] = c;
    doc["delta"] = ds;
    doc["d"] = d;
    docs.push_back(std::move(doc));
  }
  emit(out, docs);
  return kExitOk;
}

int run_analyze(const GraphSource& src, std::ostream& out) {
  std::vector<json> docs;
  bool violation = false;
  for (const Graph& g : load_graphs(src)) {
    const TreeReport r = analyze_graph(g);
    violation = violation || r.violation();
    docs.emplace_back(r);
  }
  emit(out, docs);
  return violation ? kExitCheckFailed : kExitOk;
}

std::string format_tree(const CanonicalTree& t, const std::string& emit_as) {
  if (emit_as == "graph6") return to_graph6(to_graph(t));
  std::string line;
  const auto parent = t.parents();
  if (emit_as == "edgelist") {
    for (std::size_t i = 1; i < parent.size(); ++i) {
      if (!line.empty()) line += ' ';
      line += std::to_string(parent[i]) + "-" + std::to_string(i);
    }
    return line;
  }
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (i > 0) line += ' ';
    line += std::to_string(parent[i]);
  }
  return line;
}

int run_enumerate(std::size_t order, bool count_only, const std::string& emit_as, std::ostream& out) {
  if (count_only) {
    out << count_trees(order) << "\n";
    return kExitOk;
  }
  enumerate_trees(order, [&](const CanonicalTree& t) { out << format_tree(t, emit_as) << "\n"; });
  return kExitOk;
}

struct VerifyArgs {
  std::size_t max_order = 14;
  std::size_t min_order = 3;
  std::size_t jobs = 1;
  std::size_t batch_size = 256;
  std::string output;
  bool per_tree = false;
  bool timing = false;
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  SweepOptions options;
  options.min_order = args.min_order;
  options.max_order = args.max_order;
  options.jobs = args.jobs;
  options.batch_size = args.batch_size;
  options.record_duration = true;
  if (args.per_tree) {
    options.on_report = [&out](const TreeReport& r) { out << json(r).dump() << "\n"; };
  }

  std::ofstream file;
  if (!args.output.empty()) {
    file.open(args.output);
    if (!file) throw ParseError("cannot open output file '" + args.output + "'");
  }

  AggregateReport agg = verify_range(options);
  err << "verified " << agg.total_trees << " trees of orders " << agg.min_order << ".." << agg.max_order
      << " in " << seconds(*agg.duration_seconds) << " s: " << agg.total_violations << " violations\n";
  if (!args.timing) agg.duration_seconds.reset();

  const json doc(agg);
  if (file.is_open()) {
    file << doc.dump(2) << "\n";
  } else {
    out << (args.per_tree ? doc.dump() : doc.dump(2)) << "\n";
  }
  if (!agg.complete) {
    err << "error: sweep stopped early: " << agg.error.value_or("unknown error") << "\n";
    return kExitUsage;
  }
  return agg.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance characteristic polynomials of graphs and exhaustive checks over free trees"};
  app.require_subcommand(1);

  GraphSource charpoly_src;
  auto* charpoly_cmd = app.add_subcommand("charpoly", "Print det(xI - D), delta_k and d_k as JSON");
  add_source_options(charpoly_cmd, charpoly_src);

  GraphSource analyze_src;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full per-graph report as JSON");
  add_source_options(analyze_cmd, analyze_src);

  std::size_t order = 0;
  bool count_only = false;
  std::string emit_as = "parents";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream every free tree of one order");
  enumerate_cmd->add_option("--order", order, "Tree order")->required()->check(CLI::Range(std::size_t{1}, kMaxTreeOrder));
  enumerate_cmd->add_flag("--count-only", count_only, "Print only the number of trees");
  enumerate_cmd->add_option("--emit", emit_as, "Line format")->check(CLI::IsMember({"parents", "edgelist", "graph6"}));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check every free tree up to an order");
  verify_cmd->add_option("--max-order", verify_args.max_order, "Largest order (default 14)")
      ->check(CLI::Range(std::size_t{3}, kMaxTreeOrder));
  verify_cmd->add_option("--min-order", verify_args.min_order, "Smallest order (default 3)")
      ->check(CLI::Range(std::size_t{3}, kMaxTreeOrder));
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  verify_cmd->add_option("--batch-size", verify_args.batch_size, "Trees per work item")->check(CLI::Range(1, 1 << 20));
  verify_cmd->add_option("--output", verify_args.output, "Write the aggregate report here");
  verify_cmd->add_flag("--per-tree", verify_args.per_tree, "Stream every tree report as a JSON line");
  verify_cmd->add_flag("--timing", verify_args.timing, "Include wall-clock duration in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*charpoly_cmd) return run_charpoly(charpoly_src, out);
    if (*analyze_cmd) return run_analyze(analyze_src, out);
    if (*enumerate_cmd) return run_enumerate(order, count_only, emit_as, out);
    if (*verify_cmd) return run_verify(verify_args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace distpoly
