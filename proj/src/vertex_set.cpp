#include "balcut/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "balcut/error.hpp"

namespace balcut {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet VertexSet::from_indices(std::size_t universe, std::span<const std::size_t> indices) {
  VertexSet s(universe);
  for (std::size_t v : indices) {
    if (v >= universe) {
      fail(ErrorCode::InvalidArgument,
           "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe));
    }
    s.set_bit(v);
  }
  s.indices_.assign(indices.begin(), indices.end());
  std::sort(s.indices_.begin(), s.indices_.end());
  s.indices_.erase(std::unique(s.indices_.begin(), s.indices_.end()), s.indices_.end());
  return s;
}

VertexSet VertexSet::from_mask(std::span<const char> mask) {
  VertexSet s(mask.size());
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) {
      s.set_bit(v);
      s.indices_.push_back(v);
    }
  }
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.indices_.resize(universe);
  for (std::size_t v = 0; v < universe; ++v) {
    s.indices_[v] = v;
    s.set_bit(v);
  }
  return s;
}

VertexSet VertexSet::complement() const {
  VertexSet s(universe_);
  s.indices_.reserve(universe_ - indices_.size());
  for (std::size_t v = 0; v < universe_; ++v) {
    if (!contains(v)) {
      s.set_bit(v);
      s.indices_.push_back(v);
    }
  }
  return s;
}

VertexSet VertexSet::united(const VertexSet& other) const {
  if (other.universe_ != universe_) fail(ErrorCode::DimensionMismatch, "vertex set universes differ");
  VertexSet s(universe_);
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(s.indices_));
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] | other.words_[i];
  return s;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  if (other.universe_ != universe_) fail(ErrorCode::DimensionMismatch, "vertex set universes differ");
  VertexSet s(universe_);
  std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(s.indices_));
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] & other.words_[i];
  return s;
}

}  // namespace balcut
