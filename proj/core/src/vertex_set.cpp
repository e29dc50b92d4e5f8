#include "k2free/vertex_set.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <numeric>
#include <sstream>

namespace k2free {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> ids) {
  assert(std::adjacent_find(ids.begin(), ids.end(), std::greater_equal<>()) == ids.end());
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

VertexSet VertexSet::range(std::size_t n) {
  VertexSet s;
  s.ids_.resize(n);
  std::iota(s.ids_.begin(), s.ids_.end(), Vertex{0});
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

VertexSet VertexSet::with(Vertex v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
  if (it == s.ids_.end() || *it != v) s.ids_.insert(it, v);
  return s;
}

VertexSet VertexSet::without(Vertex v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
  if (it != s.ids_.end() && *it == v) s.ids_.erase(it);
  return s;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  VertexSet s;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  VertexSet s;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(s.ids_));
  return s;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
  VertexSet s;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(s.ids_));
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i != 0) os << ',';
    os << ids_[i];
  }
  os << '}';
  return os.str();
}

void canonicalize(std::vector<VertexSet>& family) {
  std::sort(family.begin(), family.end(), BySizeThenLex{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace k2free
