#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "k2free/graph.hpp"

namespace k2free {

/// Algorithm versus brute-force comparisons.
enum class Suite {
  kRecognition,          // structural tester vs pairwise 2K2 search
  kForbidden,            // H1/H2/H3 search vs pairwise 2K2 search
  kMvs,                  // separator enumeration vs subset oracle
  kMinDegree,            // min-degree neighbourhood is a minimal separator
  kConnectedExhaustive,  // exhaustive-mode connected separator vs oracle
  kConnectedPaper,       // paper-mode connected separator vs oracle
  kMis,                  // MIS enumeration vs subset oracle
  kThreeColor,           // 3-colourability vs assignment scan
  kFvs,                  // closed-form FVS vs subset oracle
  kStructure,            // separator structure in the two cycle-restricted classes
};

const char* to_string(Suite s);
std::optional<Suite> parse_suite(const std::string& name);
std::vector<Suite> all_suites();

struct CheckOutcome {
  bool applicable = false;  // the graph lies in the suite's domain
  bool agree = true;
  std::string detail;       // what differed, when agree is false
};

/// Runs one comparison on a connected graph small enough for the oracles.
CheckOutcome check_graph(Suite suite, const Graph& g);

struct SuiteReport {
  Suite suite = Suite::kRecognition;
  std::size_t graphs = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  /// Serialized counterexample graphs with the mismatch description.
  std::vector<std::pair<std::string, std::string>> counterexamples;
};

struct VerifyOptions {
  std::vector<Suite> suites = all_suites();
  std::size_t max_n = 6;
  std::size_t max_counterexamples = 5;
};

/// Every suite over all connected labeled graphs with 1..max_n vertices.
std::vector<SuiteReport> run_exhaustive_verification(const VerifyOptions& options);

}  // namespace k2free
