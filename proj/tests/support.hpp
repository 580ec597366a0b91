#pragma once

// Test-local helpers. The dense builders here are written straight from the
// definitions and are kept separate from the library's own reference module.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "balcut/balcut.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random spanning tree plus extra edges with probability p; weights in
// [0.5, 2] when weighted, else 1.
inline balcut::Graph random_connected_graph(std::size_t n, double p, bool weighted, Rng& rng) {
  std::vector<balcut::WeightedEdge> edges;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto weight = [&] { return weighted ? uniform(rng, 0.5, 2.0) : 1.0; };
  for (std::size_t k = 1; k < n; ++k) {
    std::size_t parent = perm[pick(rng, 0, k - 1)];
    edges.push_back({perm[k], parent, weight()});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (uniform(rng) < p) edges.push_back({i, j, weight()});
  return balcut::Graph::from_edges(n, edges);
}

inline balcut::VertexSet random_subset(std::size_t n, Rng& rng, bool proper = true) {
  while (true) {
    std::vector<char> mask(n);
    for (auto& c : mask) c = uniform(rng) < 0.5;
    auto s = balcut::VertexSet::from_mask(mask);
    if (!proper || (!s.empty() && !s.is_full())) return s;
  }
}

// n x d matrix with one vertex per row.
inline Eigen::MatrixXd random_vectors(std::size_t n, std::size_t d, Rng& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd v(n, d);
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    for (Eigen::Index r = 0; r < v.cols(); ++r) v(i, r) = normal(rng);
  return v;
}

inline balcut::Embedding to_embedding(const balcut::Graph& g, const Eigen::MatrixXd& v, bool normalize) {
  const std::size_t n = v.rows(), d = v.cols();
  std::vector<double> coords(n * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t i = 0; i < n; ++i) coords[r * n + i] = v(i, r);
  return balcut::Embedding::from_coordinates(g, d, std::move(coords), normalize);
}

inline Eigen::MatrixXd rows_of(const balcut::Embedding& emb) {
  Eigen::MatrixXd v(emb.num_vertices(), emb.dim());
  for (std::size_t i = 0; i < emb.num_vertices(); ++i)
    for (std::size_t r = 0; r < emb.dim(); ++r) v(i, r) = emb.at(i, r);
  return v;
}

inline Eigen::VectorXd mu_vector(const balcut::Graph& g) {
  Eigen::VectorXd mu(g.num_vertices());
  for (std::size_t i = 0; i < g.num_vertices(); ++i) mu[i] = g.mu()[i];
  return mu;
}

inline Eigen::MatrixXd naive_laplacian(const balcut::Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    l(e.u, e.u) += e.w;
    l(e.v, e.v) += e.w;
    l(e.u, e.v) -= e.w;
    l(e.v, e.u) -= e.w;
  }
  return l;
}

// Laplacian of the complete graph on S with edge weights mu_i mu_j.
inline Eigen::MatrixXd naive_complete_laplacian(const balcut::Graph& g, const std::vector<bool>& in) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!in[i]) continue;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!in[j]) continue;
      double w = g.mu()[i] * g.mu()[j];
      l(i, i) += w;
      l(j, j) += w;
      l(i, j) -= w;
      l(j, i) -= w;
    }
  }
  return l;
}

inline Eigen::MatrixXd naive_lkv(const balcut::Graph& g) {
  return naive_complete_laplacian(g, std::vector<bool>(g.num_vertices(), true));
}

inline Eigen::MatrixXd naive_lks(const balcut::Graph& g, const balcut::VertexSet& s) {
  std::vector<bool> in(g.num_vertices(), false);
  for (auto v : s) in[v] = true;
  return naive_complete_laplacian(g, in);
}

inline Eigen::MatrixXd naive_ri(const balcut::Graph& g, std::size_t i) {
  Eigen::VectorXd e = -mu_vector(g);
  e[static_cast<Eigen::Index>(i)] += 1.0;
  return e * e.transpose();
}

inline Eigen::MatrixXd naive_certificate(const balcut::Graph& g, const balcut::DualCoefficients& dual) {
  Eigen::MatrixXd m = naive_laplacian(g) / g.total_volume() - dual.alpha * naive_lkv(g);
  for (const auto& [v, w] : dual.beta) m += w * naive_ri(g, v);
  return m;
}

inline Eigen::MatrixXd symmetric_expm(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  return es.eigenvectors() * es.eigenvalues().array().exp().matrix().asDiagonal() *
         es.eigenvectors().transpose();
}

inline double inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a.array() * b.array()).sum(); }

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

inline std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

inline Eigen::VectorXd to_eigen(std::span<const double> v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Brute force over all proper cuts; plain loops, no incremental updates.
struct NaiveCut {
  std::uint64_t mask = 0;
  double phi = 0.0;
  double balance = 0.0;
};

inline std::vector<NaiveCut> naive_all_cuts(const balcut::Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<NaiveCut> cuts;
  const std::uint64_t last = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < last; ++mask) {
    double vol = 0.0, cut = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) vol += g.degree(i);
    for (const auto& e : g.edges())
      if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) cut += e.w;
    double small = std::min(vol, g.total_volume() - vol);
    cuts.push_back({mask, cut / small, small / g.total_volume()});
  }
  return cuts;
}

inline balcut::VertexSet mask_set(std::size_t n, std::uint64_t mask) {
  std::vector<char> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = (mask >> i) & 1;
  return balcut::VertexSet::from_mask(m);
}

}  // namespace testsupport
