#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "balcut/graph.hpp"

namespace balcut {

// Vertex vectors v_1..v_n in R^d, stored one coordinate at a time:
// coordinate r of all vertices is contiguous.
class Embedding {
 public:
  Embedding() = default;
  // With normalize = true the vectors are rescaled so E_mu |v_i - v_avg|^2 = 1;
  // throws DegenerateEmbedding if that spread is below 1e-300.
  static Embedding from_coordinates(const Graph& g, std::size_t d, std::vector<double> coords,
                                    bool normalize);

  std::size_t num_vertices() const { return n_; }
  std::size_t dim() const { return d_; }
  std::span<const double> coordinate(std::size_t r) const { return {coords_.data() + r * n_, n_}; }
  double at(std::size_t i, std::size_t r) const { return coords_[r * n_ + i]; }
  std::span<const double> mean() const { return mean_; }
  // r_i^2 = |v_i - v_avg|^2
  std::span<const double> radius_sq() const { return radius_sq_; }
  // E_mu r_i^2
  double variance() const { return variance_; }
  // Factor applied by normalisation (1 when not normalised).
  double scale() const { return scale_; }

  double distance_sq(std::size_t i, std::size_t j) const;
  std::vector<double> vector_of(std::size_t i) const;

 private:
  void refresh(const Graph& g);

  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<double> coords_;
  std::vector<double> mean_;
  std::vector<double> radius_sq_;
  double variance_ = 0.0;
  double scale_ = 1.0;
};

}  // namespace balcut
