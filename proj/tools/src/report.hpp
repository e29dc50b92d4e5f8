#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "k2free/feedback.hpp"
#include "k2free/graph.hpp"
#include "k2free/independent_sets.hpp"
#include "k2free/recognition.hpp"
#include "k2free/separators.hpp"
#include "k2free/verification.hpp"

namespace k2free::report {

using nlohmann::ordered_json;

inline constexpr const char* kSchema = "k2free-report/1";

const char* tool_version();

/// Maps local vertex ids back to the ids of the input graph. An empty map is
/// the identity.
class Relabel {
 public:
  Relabel() = default;
  explicit Relabel(std::span<const Vertex> to_host) : to_host_(to_host.begin(), to_host.end()) {}

  Vertex operator()(Vertex v) const { return to_host_.empty() ? v : to_host_[v]; }
  ordered_json set(const VertexSet& s) const;
  ordered_json ids(std::span<const Vertex> vs) const;

 private:
  std::vector<Vertex> to_host_;
};

/// Top-level document: schema, tool version, command and input graph.
ordered_json envelope(const std::string& command);
ordered_json graph_header(const Graph& g);

ordered_json witness(const TwoK2Witness& w, const Relabel& r = {});
ordered_json forbidden(const ForbiddenWitness& w, const Relabel& r = {});
ordered_json recognition(const RecognitionResult& result, const Relabel& r = {});
ordered_json separator(const SeparatorRecord& rec, const Relabel& r = {});
ordered_json connected_separator(const ConnectedSeparatorAnswer& a, const Relabel& r = {});
ordered_json coloring(const Graph& g, const ColorResult& c, const Relabel& r = {});
ordered_json fvs(const Graph& g, const FvsResult& f, const Relabel& r = {});
ordered_json suite(const SuiteReport& s);

/// Indented "key: value" rendering. Arrays of scalars stay on one line.
std::string to_text(const ordered_json& doc);

}  // namespace k2free::report
