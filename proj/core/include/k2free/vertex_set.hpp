#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "k2free/witness.hpp"

namespace k2free {

/// Canonical vertex set: strictly increasing ids. Two sets are equal iff
/// their element lists are equal, so vectors of VertexSet can be compared
/// and deduplicated directly.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);

  /// Sorts and deduplicates.
  static VertexSet from_unsorted(std::vector<Vertex> ids);
  /// Trusts the caller; checked in debug builds.
  static VertexSet from_sorted(std::vector<Vertex> ids);
  /// All ids 0..n-1.
  static VertexSet range(std::size_t n);

  bool empty() const noexcept { return ids_.empty(); }
  std::size_t size() const noexcept { return ids_.size(); }
  bool contains(Vertex v) const;

  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  Vertex front() const { return ids_.front(); }
  Vertex back() const { return ids_.back(); }
  std::span<const Vertex> ids() const noexcept { return ids_; }
  const std::vector<Vertex>& vector() const noexcept { return ids_; }

  VertexSet with(Vertex v) const;
  VertexSet without(Vertex v) const;
  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;
  VertexSet set_intersection(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<Vertex> ids_;
};

/// Cardinality first, then lexicographic.
struct BySizeThenLex {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Sorts and removes duplicates in place using BySizeThenLex.
void canonicalize(std::vector<VertexSet>& family);

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << s.to_string(); }

}  // namespace k2free
