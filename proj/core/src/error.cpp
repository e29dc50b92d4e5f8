#include "k2free/error.hpp"

#include <algorithm>
#include <sstream>

namespace k2free {

std::array<Vertex, 4> TwoK2Witness::sorted() const {
  std::array<Vertex, 4> out{a, b, c, d};
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::kMissingHeader: return "missing-header";
    case ParseError::Kind::kMalformedLine: return "malformed-line";
    case ParseError::Kind::kOutOfRange: return "out-of-range";
    case ParseError::Kind::kSelfLoop: return "self-loop";
    case ParseError::Kind::kDuplicateEdge: return "duplicate-edge";
    case ParseError::Kind::kEdgeCountMismatch: return "edge-count-mismatch";
  }
  return "unknown";
}

namespace {

std::string parse_message(ParseError::Kind kind, std::size_t line, const std::string& detail) {
  std::ostringstream os;
  os << to_string(kind) << " at line " << line;
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

std::string witness_message(const TwoK2Witness& w) {
  std::ostringstream os;
  os << "input is not 2K2-free: edges {" << w.a << "," << w.b << "} and {" << w.c << "," << w.d
     << "} induce 2K2";
  return os.str();
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& detail)
    : Error(parse_message(kind, line, detail)), kind_(kind), line_(line) {}

const char* to_string(PreconditionError::Kind kind) {
  switch (kind) {
    case PreconditionError::Kind::kDisconnected: return "disconnected";
    case PreconditionError::Kind::kCompleteGraph: return "complete-graph";
    case PreconditionError::Kind::kNotTwoK2Free: return "not-2k2-free";
    case PreconditionError::Kind::kSizeLimit: return "size-limit";
    case PreconditionError::Kind::kSubclassMismatch: return "subclass-mismatch";
    case PreconditionError::Kind::kEmptyRemainder: return "empty-remainder";
    case PreconditionError::Kind::kNotSeparator: return "not-a-separator";
    case PreconditionError::Kind::kDegenerate: return "degenerate";
  }
  return "unknown";
}

PreconditionError::PreconditionError(Kind kind, const std::string& detail)
    : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

NotTwoK2FreeError::NotTwoK2FreeError(const TwoK2Witness& witness)
    : PreconditionError(Kind::kNotTwoK2Free, witness_message(witness)), witness_(witness) {}

FindingError::FindingError(const std::string& what, std::string graph_text)
    : Error(what), graph_text_(std::move(graph_text)) {}

}  // namespace k2free
