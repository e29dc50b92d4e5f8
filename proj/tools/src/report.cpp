#include "report.hpp"

#include <sstream>

#include "k2free/graph_io.hpp"
#include "k2free/structure.hpp"

#ifndef K2FREE_VERSION
#define K2FREE_VERSION "0.0.0"
#endif

namespace k2free::report {

const char* tool_version() { return K2FREE_VERSION; }

ordered_json Relabel::set(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back((*this)(v));
  std::sort(out.begin(), out.end());
  return out;
}

ordered_json Relabel::ids(std::span<const Vertex> vs) const {
  ordered_json out = ordered_json::array();
  for (Vertex v : vs) out.push_back((*this)(v));
  return out;
}

ordered_json envelope(const std::string& command) {
  ordered_json doc;
  doc["schema"] = kSchema;
  doc["tool_version"] = tool_version();
  doc["command"] = command;
  return doc;
}

ordered_json graph_header(const Graph& g) {
  return {{"n", g.n()}, {"m", g.m()}, {"signature", graph_signature(g)}};
}

ordered_json witness(const TwoK2Witness& w, const Relabel& r) {
  return {{"edges", {{r(w.a), r(w.b)}, {r(w.c), r(w.d)}}}};
}

ordered_json forbidden(const ForbiddenWitness& w, const Relabel& r) {
  return {{"kind", to_string(w.kind)}, {"vertices", r.ids(w.vertices)}};
}

ordered_json recognition(const RecognitionResult& result, const Relabel& r) {
  ordered_json out;
  out["is_2k2_free"] = result.is_2k2_free;
  out["witness"] = result.witness ? witness(*result.witness, r) : ordered_json();
  ordered_json trace = ordered_json::array();
  for (const auto& e : result.trace) {
    ordered_json entry;
    entry["depth"] = e.depth;
    entry["part"] = r.set(e.part);
    entry["separator"] = r.set(e.separator);
    entry["condition"] = e.condition;
    entry["verdict"] = to_string(e.verdict);
    if (!e.note.empty()) entry["note"] = e.note;
    trace.push_back(std::move(entry));
  }
  out["trace"] = std::move(trace);
  return out;
}

ordered_json separator(const SeparatorRecord& rec, const Relabel& r) {
  return {{"vertices", r.set(rec.vertices)},
          {"component_count", rec.component_count},
          {"connected", rec.connected},
          {"stable", rec.stable},
          {"clique", rec.clique},
          {"source_vertices", r.ids(rec.source_vertices)}};
}

ordered_json connected_separator(const ConnectedSeparatorAnswer& a, const Relabel& r) {
  ordered_json out;
  out["exists"] = a.exists;
  if (a.exists) {
    out["vertices"] = r.set(a.vertices);
    out["cardinality"] = a.cardinality;
  }
  out["provenance"] = to_string(a.provenance);
  return out;
}

ordered_json coloring(const Graph& g, const ColorResult& c, const Relabel& r) {
  ordered_json out;
  out["verdict"] = to_string(c.verdict);
  if (c.coloring) {
    ordered_json classes = ordered_json::array();
    for (int colour = 0; colour < 3; ++colour) {
      std::vector<Vertex> members;
      for (Vertex v = 0; v < c.coloring->size(); ++v) {
        if ((*c.coloring)[v] == colour) members.push_back(v);
      }
      if (!members.empty()) classes.push_back(r.set(VertexSet::from_sorted(std::move(members))));
    }
    out["color_classes"] = std::move(classes);
    out["proper"] = is_proper_coloring(g, *c.coloring);
  }
  if (c.certificate_mis) out["certificate_mis"] = r.set(*c.certificate_mis);
  return out;
}

ordered_json fvs(const Graph& g, const FvsResult& f, const Relabel& r) {
  ordered_json out;
  out["cardinality"] = f.cardinality;
  out["vertices"] = r.set(f.vertices);
  out["case"] = to_string(f.case_tag);
  ordered_json ingredients = ordered_json::object();
  if (f.s) ingredients["S"] = r.set(*f.s);
  if (f.t) ingredients["T"] = r.set(*f.t);
  if (f.u) ingredients["U"] = r.set(*f.u);
  out["ingredients"] = std::move(ingredients);
  out["acyclic_after_removal"] = is_acyclic_without(g, f.vertices);
  return out;
}

ordered_json suite(const SuiteReport& s) {
  ordered_json out;
  out["suite"] = to_string(s.suite);
  out["graphs"] = s.graphs;
  out["agreements"] = s.agreements;
  out["disagreements"] = s.disagreements;
  ordered_json ce = ordered_json::array();
  for (const auto& [graph, detail] : s.counterexamples) ce.push_back({{"graph", graph}, {"detail", detail}});
  out["counterexamples"] = std::move(ce);
  return out;
}

namespace {

bool is_scalar_array(const ordered_json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const ordered_json& x) {
           return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const ordered_json& y) {
                                         return y.is_primitive();
                                       }));
         });
}

std::string scalar(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

void render(std::ostringstream& os, const ordered_json& j, int indent);

void render_value(std::ostringstream& os, const std::string& pad, const std::string& key, const ordered_json& v,
                  int indent) {
  if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
    os << pad << key << ":\n";
    std::istringstream lines(v.get<std::string>());
    for (std::string line; std::getline(lines, line);) os << pad << "  " << line << '\n';
  } else if (v.is_primitive() || is_scalar_array(v)) {
    os << pad << key << ": " << (v.is_primitive() ? scalar(v) : v.dump()) << '\n';
  } else {
    os << pad << key << ":\n";
    render(os, v, indent + 1);
  }
}

void render(std::ostringstream& os, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) render_value(os, pad, key, v, indent);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) render_value(os, pad, "[" + std::to_string(i++) + "]", v, indent);
  } else {
    os << pad << scalar(j) << '\n';
  }
}

}  // namespace

std::string to_text(const ordered_json& doc) {
  std::ostringstream os;
  render(os, doc, 0);
  return os.str();
}

}  // namespace k2free::report
