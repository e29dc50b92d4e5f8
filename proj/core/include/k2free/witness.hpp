#pragma once

#include <array>
#include <cstdint>

namespace k2free {

using Vertex = std::uint32_t;

/// Two edges {a,b} and {c,d} with no edge between them.
struct TwoK2Witness {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  Vertex d = 0;

  std::array<Vertex, 4> sorted() const;
  friend bool operator==(const TwoK2Witness&, const TwoK2Witness&) = default;
};

}  // namespace k2free
