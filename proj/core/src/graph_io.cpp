#include "k2free/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "k2free/error.hpp"

namespace k2free {
namespace {

using Kind = ParseError::Kind;

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> to_uint(std::string_view tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

/// Shared validation for both formats; ids already converted to 0-based.
class EdgeCollector {
 public:
  void header(std::uint64_t n, std::uint64_t m, std::size_t line) {
    if (n == 0 || n > Graph::kMaxVertices) {
      throw ParseError(Kind::kOutOfRange, line,
                       "vertex count " + std::to_string(n) + " outside 1.." + std::to_string(Graph::kMaxVertices));
    }
    n_ = n;
    m_ = m;
  }

  void edge(std::uint64_t u, std::uint64_t v, std::size_t line, std::uint64_t display_offset) {
    if (edges_.size() == m_) {
      throw ParseError(Kind::kEdgeCountMismatch, line,
                       "more than the declared " + std::to_string(m_) + " edges");
    }
    if (u >= n_ || v >= n_) {
      std::ostringstream os;
      os << "vertex id " << (u >= n_ ? u : v) + display_offset << " not in range";
      throw ParseError(Kind::kOutOfRange, line, os.str());
    }
    if (u == v) throw ParseError(Kind::kSelfLoop, line, "vertex " + std::to_string(u + display_offset));
    const auto a = static_cast<Vertex>(std::min(u, v));
    const auto b = static_cast<Vertex>(std::max(u, v));
    keyed_.push_back({a, b, line});
    display_offset_ = display_offset;
    edges_.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  Graph finish(std::size_t eof_line) {
    // Report the earliest line that repeats an edge seen before it.
    std::sort(keyed_.begin(), keyed_.end());
    const Keyed* dup = nullptr;
    for (std::size_t i = 1; i < keyed_.size(); ++i) {
      if (keyed_[i].a == keyed_[i - 1].a && keyed_[i].b == keyed_[i - 1].b && (!dup || keyed_[i].line < dup->line)) {
        dup = &keyed_[i];
      }
    }
    if (dup) {
      std::ostringstream os;
      os << "edge {" << dup->a + display_offset_ << "," << dup->b + display_offset_ << "} listed twice";
      throw ParseError(Kind::kDuplicateEdge, dup->line, os.str());
    }
    if (edges_.size() != m_) {
      throw ParseError(Kind::kEdgeCountMismatch, eof_line,
                       "declared " + std::to_string(m_) + " edges, found " + std::to_string(edges_.size()));
    }
    return Graph::from_edges(n_, edges_);
  }

 private:
  std::uint64_t n_ = 0;
  std::uint64_t m_ = 0;
  struct Keyed {
    Vertex a;
    Vertex b;
    std::size_t line;
    auto operator<=>(const Keyed&) const = default;
  };
  std::vector<Keyed> keyed_;
  std::uint64_t display_offset_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  EdgeCollector collector;
  bool have_header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto toks = tokens(lines[i]);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) {
      throw ParseError(Kind::kMalformedLine, line_no, "expected two integers");
    }
    const auto a = to_uint(toks[0]);
    const auto b = to_uint(toks[1]);
    if (!a || !b) throw ParseError(Kind::kMalformedLine, line_no, "expected two non-negative integers");
    if (!have_header) {
      collector.header(*a, *b, line_no);
      have_header = true;
    } else {
      collector.edge(*a, *b, line_no, 0);
    }
  }
  if (!have_header) throw ParseError(Kind::kMissingHeader, lines.size() + 1, "no \"n m\" line");
  return collector.finish(lines.size() + 1);
}

Graph parse_dimacs(std::string_view text) {
  const auto lines = split_lines(text);
  EdgeCollector collector;
  bool have_header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto toks = tokens(lines[i]);
    if (toks.empty() || toks.front() == "c") continue;
    if (toks.front() == "p") {
      if (have_header) throw ParseError(Kind::kMalformedLine, line_no, "second problem line");
      if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col")) {
        throw ParseError(Kind::kMalformedLine, line_no, "expected \"p edge n m\"");
      }
      const auto n = to_uint(toks[2]);
      const auto m = to_uint(toks[3]);
      if (!n || !m) throw ParseError(Kind::kMalformedLine, line_no, "expected \"p edge n m\"");
      collector.header(*n, *m, line_no);
      have_header = true;
      continue;
    }
    if (toks.front() == "e") {
      if (!have_header) throw ParseError(Kind::kMissingHeader, line_no, "edge before problem line");
      if (toks.size() != 3) throw ParseError(Kind::kMalformedLine, line_no, "expected \"e u v\"");
      const auto u = to_uint(toks[1]);
      const auto v = to_uint(toks[2]);
      if (!u || !v) throw ParseError(Kind::kMalformedLine, line_no, "expected \"e u v\"");
      if (*u == 0 || *v == 0) throw ParseError(Kind::kOutOfRange, line_no, "DIMACS ids are 1-based");
      collector.edge(*u - 1, *v - 1, line_no, 1);
      continue;
    }
    throw ParseError(Kind::kMalformedLine, line_no, "unknown line type");
  }
  if (!have_header) throw ParseError(Kind::kMissingHeader, lines.size() + 1, "no problem line");
  return collector.finish(lines.size() + 1);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out;
  out.reserve(16 + g.m() * 12);
  out += std::to_string(g.n());
  out += ' ';
  out += std::to_string(g.m());
  out += '\n';
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string graph_signature(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace k2free
