#include "k2free/verification.hpp"

#include <algorithm>
#include <sstream>

#include "k2free/error.hpp"
#include "k2free/feedback.hpp"
#include "k2free/generators.hpp"
#include "k2free/graph_io.hpp"
#include "k2free/independent_sets.hpp"
#include "k2free/oracles.hpp"
#include "k2free/recognition.hpp"
#include "k2free/separators.hpp"
#include "k2free/structure.hpp"

namespace k2free {
namespace {

std::string describe(const std::vector<VertexSet>& sets) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < sets.size(); ++i) os << (i ? "," : "") << sets[i].to_string();
  os << ']';
  return os.str();
}

CheckOutcome mismatch(std::string detail) { return {true, false, std::move(detail)}; }
CheckOutcome agreed() { return {true, true, {}}; }
CheckOutcome skipped() { return {false, true, {}}; }

CheckOutcome check_recognition(const Graph& g) {
  const auto pairwise = find_2k2_pair(g);
  const auto structural = test_2k2_structural(g);
  if (structural.is_2k2_free != !pairwise.has_value()) {
    return mismatch(std::string("structural says ") + (structural.is_2k2_free ? "free" : "not free"));
  }
  if (structural.witness && !validate_witness(g, *structural.witness)) return mismatch("invalid witness");
  return agreed();
}

CheckOutcome check_forbidden(const Graph& g) {
  const bool has_2k2 = find_2k2_pair(g).has_value();
  const auto w = find_forbidden_subgraph(g);
  if (w.has_value() != has_2k2) return mismatch(w ? "shape found in a 2K2-free graph" : "no shape found");
  if (w && !validate_forbidden(g, *w)) return mismatch("shape does not induce the declared edges");
  return agreed();
}

bool separator_domain(const Graph& g) { return !g.is_complete() && !find_2k2_pair(g); }

CheckOutcome check_mvs(const Graph& g) {
  if (!separator_domain(g)) return skipped();
  std::vector<VertexSet> got;
  for (const auto& rec : enumerate_mvs(g)) got.push_back(rec.vertices);
  const auto want = oracle::minimal_separators(g);
  if (got != want) return mismatch("enumerated " + describe(got) + ", oracle " + describe(want));
  return agreed();
}

CheckOutcome check_min_degree(const Graph& g) {
  if (!separator_domain(g)) return skipped();
  const VertexSet s = min_degree_separator(g);
  const auto all = oracle::minimal_separators(g);
  if (std::find(all.begin(), all.end(), s) == all.end()) return mismatch(s.to_string() + " is not minimal");
  return agreed();
}

CheckOutcome check_connected(const Graph& g, SeparatorMode mode) {
  if (!separator_domain(g)) return skipped();
  ConnectedSeparatorOptions options;
  options.mode = mode;
  const auto got = min_connected_separator(g, options);
  const auto want = oracle::min_connected_separator(g);
  const std::size_t got_size = got.exists ? got.cardinality : 0;
  const std::size_t want_size = want ? want->size() : 0;
  if (got.exists != want.has_value() || got_size != want_size) {
    return mismatch("returned " + (got.exists ? got.vertices.to_string() : std::string("none")) + ", oracle " +
                    (want ? want->to_string() : std::string("none")));
  }
  return agreed();
}

CheckOutcome check_mis(const Graph& g) {
  if (find_2k2_pair(g)) return skipped();
  auto got = enumerate_mis(g).sets;
  std::sort(got.begin(), got.end(), BySizeThenLex{});
  const auto want = oracle::maximal_independent_sets(g);
  if (got != want) return mismatch("enumerated " + describe(got) + ", oracle " + describe(want));
  return agreed();
}

CheckOutcome check_three_color(const Graph& g) {
  if (find_2k2_pair(g) || g.n() > oracle::kMaxColorVertices) return skipped();
  const ColorResult got = three_color(g);
  const bool colorable = got.verdict != ChromaticVerdict::kNotThreeColorable;
  const bool want = oracle::three_coloring(g).has_value();
  if (colorable != want) return mismatch(std::string("verdict ") + to_string(got.verdict));
  if (got.coloring && !is_proper_coloring(g, *got.coloring)) return mismatch("colouring is not proper");
  return agreed();
}

CheckOutcome check_fvs(const Graph& g) {
  if (g.n() > oracle::kMaxFvsVertices) return skipped();
  const SubclassTag tag = classify_subclass(g);
  FvsResult got;
  if (tag == SubclassTag::kC3C5Free) {
    got = fvs_c3c5(g);
  } else if (tag == SubclassTag::kC3C4Free) {
    got = fvs_c3c4(g);
  } else {
    return skipped();
  }
  const VertexSet want = oracle::min_fvs(g);
  if (got.cardinality != want.size()) {
    return mismatch("closed form " + std::to_string(got.cardinality) + ", oracle " + want.to_string());
  }
  if (!is_acyclic_without(g, got.vertices)) return mismatch("witness leaves a cycle");
  return agreed();
}

CheckOutcome check_structure(const Graph& g) {
  const SubclassTag tag = classify_subclass(g);
  if ((tag != SubclassTag::kC3C5Free && tag != SubclassTag::kC3C4Free) || g.is_complete()) return skipped();
  MvsOptions options;
  options.check_input = false;
  for (const auto& rec : enumerate_mvs(g, options)) {
    auto bad = tag == SubclassTag::kC3C5Free ? c3c5_structure_violations(g, rec.vertices)
                                             : c3c4_structure_violations(g, rec.vertices);
    // The "exactly one" reading fails on paths; only the bound is checked.
    std::erase(bad, "exactly-one-s-neighbour");
    if (!bad.empty()) return mismatch(bad.front() + " fails at " + rec.vertices.to_string());
  }
  if (tag == SubclassTag::kC3C4Free && !is_acyclic(g)) {
    const bool c5 = g.n() == 5 && g.m() == 5 && g.max_degree() == 2;
    if (!c5) return mismatch("cyclic member other than C5");
  }
  return agreed();
}

}  // namespace

const char* to_string(Suite s) {
  switch (s) {
    case Suite::kRecognition: return "recognition";
    case Suite::kForbidden: return "forbidden";
    case Suite::kMvs: return "mvs";
    case Suite::kMinDegree: return "min-degree";
    case Suite::kConnectedExhaustive: return "connected-exhaustive";
    case Suite::kConnectedPaper: return "connected-paper";
    case Suite::kMis: return "mis";
    case Suite::kThreeColor: return "three-color";
    case Suite::kFvs: return "fvs";
    case Suite::kStructure: return "structure";
  }
  return "?";
}

std::vector<Suite> all_suites() {
  return {Suite::kRecognition, Suite::kForbidden, Suite::kMvs,        Suite::kMinDegree, Suite::kConnectedExhaustive,
          Suite::kConnectedPaper, Suite::kMis,     Suite::kThreeColor, Suite::kFvs,       Suite::kStructure};
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : all_suites()) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

CheckOutcome check_graph(Suite suite, const Graph& g) {
  try {
    switch (suite) {
      case Suite::kRecognition: return check_recognition(g);
      case Suite::kForbidden: return check_forbidden(g);
      case Suite::kMvs: return check_mvs(g);
      case Suite::kMinDegree: return check_min_degree(g);
      case Suite::kConnectedExhaustive: return check_connected(g, SeparatorMode::kExhaustive);
      case Suite::kConnectedPaper: return check_connected(g, SeparatorMode::kPaper);
      case Suite::kMis: return check_mis(g);
      case Suite::kThreeColor: return check_three_color(g);
      case Suite::kFvs: return check_fvs(g);
      case Suite::kStructure: return check_structure(g);
    }
  } catch (const FindingError& e) {
    return mismatch(std::string("finding: ") + e.what());
  }
  return skipped();
}

std::vector<SuiteReport> run_exhaustive_verification(const VerifyOptions& options) {
  std::vector<SuiteReport> reports;
  for (Suite s : options.suites) reports.push_back(SuiteReport{s, 0, 0, 0, {}});
  const std::size_t top = std::min(options.max_n, ConnectedGraphStream::kMaxVertices);
  for (std::size_t n = 1; n <= top; ++n) {
    ConnectedGraphStream stream(n);
    while (auto g = stream.next()) {
      for (auto& report : reports) {
        const CheckOutcome out = check_graph(report.suite, *g);
        if (!out.applicable) continue;
        ++report.graphs;
        if (out.agree) {
          ++report.agreements;
        } else {
          ++report.disagreements;
          if (report.counterexamples.size() < options.max_counterexamples) {
            report.counterexamples.emplace_back(serialize_edge_list(*g), out.detail);
          }
        }
      }
    }
  }
  return reports;
}

}  // namespace k2free
