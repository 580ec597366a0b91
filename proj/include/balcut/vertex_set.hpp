#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace balcut {

// Subset of {0, ..., universe-1}. Keeps a sorted index list for iteration
// and a bitmask for O(1) membership.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  static VertexSet from_indices(std::size_t universe, std::span<const std::size_t> indices);
  static VertexSet from_mask(std::span<const char> mask);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool is_full() const { return indices_.size() == universe_; }

  bool contains(std::size_t v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }

  std::span<const std::size_t> indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  VertexSet complement() const;
  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.indices_ == b.indices_;
  }

 private:
  void set_bit(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::size_t> indices_;
};

}  // namespace balcut
