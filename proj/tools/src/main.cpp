#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "k2free/error.hpp"
#include "k2free/feedback.hpp"
#include "k2free/generators.hpp"
#include "k2free/graph_io.hpp"
#include "k2free/independent_sets.hpp"
#include "k2free/oracles.hpp"
#include "k2free/recognition.hpp"
#include "k2free/separators.hpp"
#include "k2free/structure.hpp"
#include "k2free/verification.hpp"
#include "report.hpp"

namespace {

using namespace k2free;
using report::ordered_json;
using report::Relabel;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IoOptions {
  std::string input;
  std::string format = "edgelist";
  std::string output = "text";
  bool per_component = false;
};

void add_io(CLI::App* sub, IoOptions& io, bool allow_per_component) {
  sub->add_option("input", io.input, "graph file; '-' or omitted reads standard input");
  sub->add_option("--format", io.format, "input format")->check(CLI::IsMember({"edgelist", "dimacs"}));
  sub->add_option("--output", io.output, "report format")->check(CLI::IsMember({"json", "text"}));
  if (allow_per_component) {
    sub->add_flag("--per-component", io.per_component, "run on each connected component separately");
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const IoOptions& io) {
  const std::string text = read_input(io.input);
  return io.format == "dimacs" ? parse_dimacs(text) : parse_edge_list(text);
}

void emit(const ordered_json& doc, const std::string& output) {
  const std::string body = output == "json" ? doc.dump(2) + "\n" : report::to_text(doc);
  std::cout << body << std::flush;
}

/// Computes one command's result on a connected graph and returns its exit
/// code.
using GraphBody = std::function<int(const Graph&, const Relabel&, ordered_json&)>;

int run_graph_command(const std::string& name, const IoOptions& io, const GraphBody& body) {
  const Graph g = load_graph(io);
  ordered_json doc = report::envelope(name);
  doc["graph"] = report::graph_header(g);
  int code = kOk;
  try {
    if (io.per_component) {
      ordered_json parts = ordered_json::array();
      std::vector<Vertex> all(g.n());
      for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
      for (const auto& comp : components_within(g, VertexSet::from_sorted(std::move(all)))) {
        const Subgraph sub = g.induced(comp);
        const Relabel relabel(sub.to_parent);
        ordered_json part;
        part["vertices"] = comp.vector();
        part["graph"] = report::graph_header(sub.graph);
        ordered_json result;
        code = std::max(code, body(sub.graph, relabel, result));
        part["result"] = std::move(result);
        parts.push_back(std::move(part));
      }
      doc["components"] = std::move(parts);
    } else {
      ordered_json result;
      code = body(g, Relabel{}, result);
      doc["result"] = std::move(result);
    }
  } catch (const NotTwoK2FreeError& e) {
    doc["result"] = {{"is_2k2_free", false}, {"witness", report::witness(e.witness())}, {"error", e.what()}};
    code = kNegative;
  } catch (const FindingError& e) {
    doc["result"] = {{"finding", e.what()}, {"graph", e.graph_text()}};
    code = kNegative;
  }
  emit(doc, io.output);
  return code;
}

void merge_into(ordered_json& out, const ordered_json& part) {
  for (const auto& [k, v] : part.items()) out[k] = v;
}

ordered_json set_list(const std::vector<VertexSet>& sets, const Relabel& r) {
  ordered_json out = ordered_json::array();
  for (const auto& s : sets) out.push_back(r.set(s));
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t pos = 0;
    const unsigned long value = std::stoul(item, &pos);
    if (pos != item.size() || value == 0) throw InputError("bad size '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw InputError("no sizes given");
  return out;
}

VertexSet parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t pos = 0;
    const unsigned long value = std::stoul(item, &pos);
    if (pos != item.size()) throw InputError("bad vertex id '" + item + "'");
    out.push_back(static_cast<Vertex>(value));
  }
  return VertexSet::from_unsorted(std::move(out));
}

// Bench graphs: split graphs, except fvs_c3c5 which needs chain graphs.
Graph bench_graph(const std::string& target, std::size_t n, std::uint64_t seed) {
  if (target == "fvs_c3c5") {
    const std::size_t right = std::max<std::size_t>(2, n / 100);
    return gen_chain_graph(n - right, right, seed);
  }
  if (target == "enumerate_mis") return gen_split_graph(n, 0.5, 0.5, seed);
  return gen_split_graph(n, 0.5, 0.3, seed);
}

std::function<void(const Graph&)> bench_call(const std::string& target) {
  if (target == "enumerate_mvs") return [](const Graph& g) { (void)enumerate_mvs(g); };
  if (target == "test_2k2_structural") return [](const Graph& g) { (void)test_2k2_structural(g); };
  if (target == "min_connected_separator") return [](const Graph& g) { (void)min_connected_separator(g); };
  if (target == "enumerate_mis") return [](const Graph& g) { (void)enumerate_mis(g); };
  return [](const Graph& g) { (void)fvs_c3c5(g); };
}

std::string default_sizes(const std::string& target) {
  if (target == "fvs_c3c5") return "1000,2000,4000,8000";
  if (target == "enumerate_mis") return "25,50,100,200";
  return "250,500,1000,2000";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algorithms for 2K2-free graphs with brute-force cross-checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", report::tool_version());

  IoOptions io;
  int code = kOk;
  std::function<int()> action;

  auto* recognize = app.add_subcommand("recognize", "decide 2K2-freeness with a certificate");
  std::string method = "structural";
  std::string target = "component-with-separator";
  add_io(recognize, io, false);
  recognize->add_option("--method", method)->check(CLI::IsMember({"structural", "pairwise", "forbidden"}));
  recognize->add_option("--target", target, "recursion target of the structural tester")
      ->check(CLI::IsMember({"component-with-separator", "closed-neighbourhood", "component-only"}));
  recognize->callback([&] {
    action = [&] {
      return run_graph_command("recognize", io, [&](const Graph& g, const Relabel& r, ordered_json& out) {
        out["method"] = method;
        if (method == "pairwise") {
          const auto w = find_2k2_pair(g);
          out["is_2k2_free"] = !w;
          out["witness"] = w ? report::witness(*w, r) : ordered_json();
          return w ? kNegative : kOk;
        }
        if (method == "forbidden") {
          const auto f = find_forbidden_subgraph(g);
          out["is_2k2_free"] = !f;
          out["forbidden"] = f ? report::forbidden(*f, r) : ordered_json();
          return f ? kNegative : kOk;
        }
        StructuralOptions options;
        if (target == "closed-neighbourhood") options.target = RecursionTarget::kClosedNeighbourhood;
        if (target == "component-only") options.target = RecursionTarget::kComponentOnly;
        out["target"] = target;
        const RecognitionResult result = test_2k2_structural(g, options);
        merge_into(out, report::recognition(result, r));
        if (!result.is_2k2_free) {
          if (const auto f = find_forbidden_subgraph(g)) out["forbidden"] = report::forbidden(*f, r);
        }
        return result.is_2k2_free ? kOk : kNegative;
      });
    };
  });

  auto* separators = app.add_subcommand("separators", "enumerate all minimal vertex separators");
  bool complete_convention = false;
  add_io(separators, io, true);
  separators->add_flag("--complete-convention", complete_convention,
                       "report every N(v) of a complete graph with component_count 1");
  separators->callback([&] {
    action = [&] {
      return run_graph_command("separators", io, [&](const Graph& g, const Relabel& r, ordered_json& out) {
        MvsOptions options;
        options.complete_graph_convention = complete_convention;
        const auto records = enumerate_mvs(g, options);
        out["count"] = records.size();
        ordered_json list = ordered_json::array();
        for (const auto& rec : records) list.push_back(report::separator(rec, r));
        out["separators"] = std::move(list);
        return kOk;
      });
    };
  });

  auto* connected = app.add_subcommand("min-connected-separator", "minimum connected vertex separator");
  std::string mode = "paper";
  add_io(connected, io, true);
  connected->add_option("--mode", mode)->check(CLI::IsMember({"paper", "exhaustive"}));
  connected->callback([&] {
    action = [&] {
      return run_graph_command("min-connected-separator", io,
                               [&](const Graph& g, const Relabel& r, ordered_json& out) {
                                 ConnectedSeparatorOptions options;
                                 options.mode = mode == "paper" ? SeparatorMode::kPaper : SeparatorMode::kExhaustive;
                                 out["mode"] = mode;
                                 merge_into(out, report::connected_separator(min_connected_separator(g, options), r));
                                 return kOk;
                               });
    };
  });

  auto add_constrained = [&](const std::string& name, const std::string& help,
                             std::optional<SeparatorRecord> (*fn)(const Graph&)) {
    auto* sub = app.add_subcommand(name, help);
    add_io(sub, io, true);
    sub->callback([&, name, fn] {
      action = [&, name, fn] {
        return run_graph_command(name, io, [&](const Graph& g, const Relabel& r, ordered_json& out) {
          const auto rec = fn(g);
          out["exists"] = rec.has_value();
          out["separator"] = rec ? report::separator(*rec, r) : ordered_json();
          return kOk;
        });
      };
    });
  };
  add_constrained("min-stable-separator", "minimum independent minimal separator", &min_stable_separator);
  add_constrained("min-clique-separator", "minimum clique minimal separator", &min_clique_separator);

  auto* mis = app.add_subcommand("mis", "enumerate all maximal independent sets");
  std::size_t base_size = MisOptions{}.base_size;
  add_io(mis, io, true);
  mis->add_option("--base-size", base_size, "parts this small are scanned directly");
  mis->callback([&] {
    action = [&] {
      return run_graph_command("mis", io, [&](const Graph& g, const Relabel& r, ordered_json& out) {
        MisOptions options;
        options.base_size = base_size;
        const MISCollection c = enumerate_mis(g, options);
        out["count"] = c.sets.size();
        out["within_n_squared"] = c.sets.size() <= g.n() * g.n();
        out["all_maximal"] = std::all_of(c.sets.begin(), c.sets.end(),
                                         [&](const VertexSet& s) { return is_maximal_independent(g, s); });
        out["sets"] = set_list(c.sets, r);
        return kOk;
      });
    };
  });

  auto* max_is = app.add_subcommand("max-is", "maximum independent set");
  add_io(max_is, io, true);
  max_is->callback([&] {
    action = [&] {
      return run_graph_command("max-is", io, [&](const Graph& g, const Relabel& r, ordered_json& out) {
        const VertexSet s = max_independent_set(g);
        out["cardinality"] = s.size();
        out["vertices"] = r.set(s);
        out["maximal"] = is_maximal_independent(g, s);
        return kOk;
      });
    };
  });

  auto* min_vc = app.add_subcommand("min-vc", "minimum vertex cover");
  bool all_covers = false;
  add_io(min_vc, io, true);
  min_vc->add_flag("--all", all_covers, "also list every minimal vertex cover");
  min_vc->callback([&] {
    action = [&] {
      return run_graph_command("min-vc", io, [&](const Graph& g, const Relabel& r, ordered_json& out) {
        const VertexSet cover = min_vertex_cover(g);
        out["cardinality"] = cover.size();
        out["vertices"] = r.set(cover);
        out["covers_every_edge"] = is_vertex_cover(g, cover);
        if (all_covers) out["minimal_covers"] = set_list(enumerate_minimal_vertex_covers(g), r);
        return kOk;
      });
    };
  });

  auto* color = app.add_subcommand("three-color", "decide 3-colourability");
  add_io(color, io, true);
  color->callback([&] {
    action = [&] {
      return run_graph_command("three-color", io, [&](const Graph& g, const Relabel& r, ordered_json& out) {
        const ColorResult c = three_color(g);
        out = report::coloring(g, c, r);
        return c.verdict == ChromaticVerdict::kNotThreeColorable ? kNegative : kOk;
      });
    };
  });

  auto* fvs = app.add_subcommand("fvs", "minimum feedback vertex set for the two cycle-restricted classes");
  std::string subclass = "auto";
  std::string separator_text;
  add_io(fvs, io, true);
  fvs->add_option("--subclass", subclass)->check(CLI::IsMember({"auto", "c3c4", "c3c5"}));
  fvs->add_option("--separator", separator_text, "comma-separated minimal separator for the c3c5 closed forms");
  fvs->callback([&] {
    action = [&] {
      return run_graph_command("fvs", io, [&](const Graph& g, const Relabel& r, ordered_json& out) {
        std::string branch = subclass;
        if (branch == "auto") {
          const SubclassTag tag = classify_subclass(g);
          out["subclass"] = to_string(tag);
          if (tag == SubclassTag::kNotTwoK2Free) require_2k2_free(g);
          if (tag == SubclassTag::kTwoK2FreeOnly) {
            throw PreconditionError(PreconditionError::Kind::kSubclassMismatch,
                                    "graph is 2K2-free but contains an induced C3 and a C4 or C5");
          }
          branch = tag == SubclassTag::kC3C4Free ? "c3c4" : "c3c5";
        }
        FvsResult result;
        if (branch == "c3c4") {
          result = fvs_c3c4(g);
        } else if (!separator_text.empty()) {
          result = fvs_c3c5(g, parse_vertex_list(separator_text));
        } else {
          result = fvs_c3c5(g);
        }
        out["branch"] = branch;
        merge_into(out, report::fvs(g, result, r));
        return kOk;
      });
    };
  });

  auto* generate = app.add_subcommand("generate", "write test graphs as edge lists");
  std::string family = "split";
  std::size_t gen_n = 10;
  std::size_t gen_right = 0;
  std::uint64_t seed = 1;
  double p = 0.5;
  double clique_fraction = 0.5;
  double p_cross = 0.5;
  std::size_t max_tries = 1000;
  std::vector<std::string> filters;
  std::string gen_output = "text";
  generate->add_option("--family", family)
      ->check(CLI::IsMember({"split", "rejection", "exhaustive", "gnp", "bipartite", "chain"}));
  generate->add_option("--n", gen_n, "vertex count (left side size for bipartite and chain)");
  generate->add_option("--right", gen_right, "right side size for bipartite and chain");
  generate->add_option("--seed", seed);
  generate->add_option("--p", p, "edge probability for gnp, bipartite and rejection");
  generate->add_option("--clique-fraction", clique_fraction);
  generate->add_option("--p-cross", p_cross);
  generate->add_option("--max-tries", max_tries);
  generate->add_option("--filter", filters, "exhaustive family filters")
      ->check(CLI::IsMember({"2k2-free", "c3-free", "c4-free", "c5-free"}));
  generate->add_option("--output", gen_output)->check(CLI::IsMember({"json", "text"}));
  generate->callback([&] {
    action = [&] {
      std::vector<Graph> graphs;
      if (family == "exhaustive") {
        GraphFilter f;
        for (const auto& name : filters) {
          if (name == "2k2-free") f.two_k2_free = true;
          if (name == "c3-free") f.c3_free = true;
          if (name == "c4-free") f.c4_free = true;
          if (name == "c5-free") f.c5_free = true;
        }
        ConnectedGraphStream stream(gen_n, f);
        while (auto g = stream.next()) graphs.push_back(std::move(*g));
      } else if (family == "split") {
        graphs.push_back(gen_split_graph(gen_n, clique_fraction, p_cross, seed));
      } else if (family == "rejection") {
        if (auto g = gen_2k2_free_rejection(gen_n, p, seed, max_tries)) graphs.push_back(std::move(*g));
      } else if (family == "gnp") {
        graphs.push_back(gen_gnp(gen_n, p, seed));
      } else if (family == "bipartite") {
        graphs.push_back(gen_bipartite_gnp(gen_n, gen_right == 0 ? gen_n : gen_right, p, seed));
      } else {
        graphs.push_back(gen_chain_graph(gen_n, gen_right == 0 ? gen_n : gen_right, seed));
      }
      if (gen_output == "text") {
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          if (graphs.size() > 1) std::cout << (i ? "\n" : "") << "# graph " << i << '\n';
          std::cout << serialize_edge_list(graphs[i]);
        }
        if (graphs.empty()) std::cerr << "no graph produced\n";
      } else {
        ordered_json doc = report::envelope("generate");
        doc["family"] = family;
        doc["seed"] = seed;
        ordered_json list = ordered_json::array();
        for (const auto& g : graphs) {
          ordered_json item = report::graph_header(g);
          item["edge_list"] = serialize_edge_list(g);
          list.push_back(std::move(item));
        }
        doc["count"] = graphs.size();
        doc["graphs"] = std::move(list);
        emit(doc, "json");
      }
      return graphs.empty() ? kNegative : kOk;
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference answers for small graphs");
  std::string which;
  oracle_cmd->add_option("which", which)
      ->required()
      ->check(CLI::IsMember({"separators", "mis", "min-fvs", "min-connected-separator", "three-coloring"}));
  add_io(oracle_cmd, io, false);
  oracle_cmd->callback([&] {
    action = [&] {
      return run_graph_command("oracle", io, [&](const Graph& g, const Relabel& r, ordered_json& out) {
        out["oracle"] = which;
        if (which == "separators") {
          const auto sets = oracle::minimal_separators(g);
          out["count"] = sets.size();
          out["sets"] = set_list(sets, r);
        } else if (which == "mis") {
          const auto sets = oracle::maximal_independent_sets(g);
          out["count"] = sets.size();
          out["sets"] = set_list(sets, r);
        } else if (which == "min-fvs") {
          const VertexSet s = oracle::min_fvs(g);
          out["cardinality"] = s.size();
          out["vertices"] = r.set(s);
        } else if (which == "min-connected-separator") {
          const auto s = oracle::min_connected_separator(g);
          out["exists"] = s.has_value();
          out["vertices"] = s ? r.set(*s) : ordered_json();
        } else {
          const auto c = oracle::three_coloring(g);
          out["colorable"] = c.has_value();
          out["coloring"] = c ? ordered_json(*c) : ordered_json();
          return c ? kOk : kNegative;
        }
        return kOk;
      });
    };
  });

  auto* verify = app.add_subcommand("verify", "compare every algorithm with its oracle on all small graphs");
  std::vector<std::string> suite_names{"all"};
  VerifyOptions verify_options;
  std::string verify_output = "text";
  std::vector<std::string> suite_choices{"all"};
  for (Suite s : all_suites()) suite_choices.emplace_back(to_string(s));
  verify->add_option("--suite", suite_names, "suite name, repeatable")->check(CLI::IsMember(suite_choices));
  verify->add_option("--max-n", verify_options.max_n)->check(CLI::Range(1, 7));
  verify->add_option("--max-counterexamples", verify_options.max_counterexamples);
  verify->add_option("--output", verify_output)->check(CLI::IsMember({"json", "text"}));
  verify->callback([&] {
    action = [&] {
      if (std::find(suite_names.begin(), suite_names.end(), "all") == suite_names.end()) {
        verify_options.suites.clear();
        for (const auto& name : suite_names) verify_options.suites.push_back(*parse_suite(name));
      }
      const auto reports = run_exhaustive_verification(verify_options);
      ordered_json doc = report::envelope("verify");
      doc["max_n"] = verify_options.max_n;
      std::size_t disagreements = 0;
      ordered_json list = ordered_json::array();
      for (const auto& rep : reports) {
        disagreements += rep.disagreements;
        list.push_back(report::suite(rep));
      }
      doc["suites"] = std::move(list);
      doc["total_disagreements"] = disagreements;
      emit(doc, verify_output);
      return disagreements == 0 ? kOk : kNegative;
    };
  });

  auto* bench = app.add_subcommand("bench", "median timings over growing sizes");
  std::string bench_target;
  std::string sizes_text;
  std::size_t runs = 5;
  std::string bench_output = "text";
  bench->add_option("--target", bench_target)
      ->required()
      ->check(CLI::IsMember(
          {"enumerate_mvs", "test_2k2_structural", "min_connected_separator", "enumerate_mis", "fvs_c3c5"}));
  bench->add_option("--sizes", sizes_text, "comma-separated vertex counts");
  bench->add_option("--seed", seed);
  bench->add_option("--runs", runs)->check(CLI::Range(5, 1000));
  bench->add_option("--output", bench_output)->check(CLI::IsMember({"json", "text"}));
  bench->callback([&] {
    action = [&] {
      const auto sizes = parse_sizes(sizes_text.empty() ? default_sizes(bench_target) : sizes_text);
      const auto call = bench_call(bench_target);
      ordered_json doc = report::envelope("bench");
      doc["target"] = bench_target;
      doc["seed"] = seed;
      doc["runs"] = runs;
      ordered_json rows = ordered_json::array();
      double previous_ms = 0;
      std::size_t previous_n = 0;
      for (std::size_t n : sizes) {
        const Graph g = bench_graph(bench_target, n, seed);
        std::vector<double> times;
        for (std::size_t i = 0; i < runs; ++i) {
          const auto start = std::chrono::steady_clock::now();
          call(g);
          times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
        }
        std::sort(times.begin(), times.end());
        const double median = times[times.size() / 2];
        ordered_json row = {{"n", n}, {"m", g.m()}, {"median_ms", median}};
        if (previous_n != 0 && previous_ms > 0) {
          const double ratio = median / previous_ms;
          row["ratio"] = ratio;
          row["exponent"] = std::log(ratio) / std::log(static_cast<double>(n) / static_cast<double>(previous_n));
        }
        rows.push_back(std::move(row));
        previous_ms = median;
        previous_n = n;
      }
      doc["rows"] = rows;
      if (bench_output == "json") {
        emit(doc, "json");
      } else {
        std::cout << bench_target << " (seed " << seed << ", median of " << runs << " runs)\n";
        std::cout << std::setw(8) << "n" << std::setw(12) << "m" << std::setw(14) << "median_ms" << std::setw(10)
                  << "ratio" << std::setw(10) << "exponent" << '\n';
        for (const auto& row : rows) {
          std::cout << std::setw(8) << row["n"].get<std::size_t>() << std::setw(12) << row["m"].get<std::size_t>()
                    << std::setw(14) << std::fixed << std::setprecision(3) << row["median_ms"].get<double>();
          if (row.contains("ratio")) {
            std::cout << std::setw(10) << std::setprecision(2) << row["ratio"].get<double>() << std::setw(10)
                      << row["exponent"].get<double>();
          } else {
            std::cout << std::setw(10) << "-" << std::setw(10) << "-";
          }
          std::cout << '\n';
        }
      }
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    code = action ? action() : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "k2free: parse error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "k2free: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "k2free: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "k2free: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "k2free: bad number: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "k2free: number out of range: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}
