#include "balcut/reference.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <string>

#include "balcut/error.hpp"

namespace balcut {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

void check_dense(const Graph& g) {
  if (g.num_vertices() > 4096) fail(ErrorCode::SizeLimit, "dense reference limited to n <= 4096");
}

template <typename Visit>
void gray_walk(const Graph& g, Visit&& visit) {
  const std::size_t n = g.num_vertices();
  if (n > kBruteForceLimit) {
    fail(ErrorCode::SizeLimit, "brute force limited to n <= " + std::to_string(kBruteForceLimit));
  }
  if (n < 2) return;
  const double total = g.total_volume();
  std::vector<char> in(n, 0);
  double vol = 0.0, cut = 0.0;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < count; ++i) {
    std::size_t v = static_cast<std::size_t>(std::countr_zero(i));
    double inner = 0.0;
    for (const auto& nb : g.neighbors(v)) {
      if (in[nb.vertex]) inner += nb.weight;
    }
    if (in[v]) {
      in[v] = 0;
      vol -= g.degree(v);
      cut -= g.degree(v) - 2.0 * inner;
    } else {
      in[v] = 1;
      vol += g.degree(v);
      cut += g.degree(v) - 2.0 * inner;
    }
    std::uint64_t mask = i ^ (i >> 1);
    visit(mask, vol / total, cut / std::min(vol, total - vol));
  }
}

VertexSet mask_set(std::size_t n, std::uint64_t mask) {
  std::vector<std::size_t> idx;
  for (std::size_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1u) idx.push_back(v);
  }
  return VertexSet::from_indices(n, idx);
}

}  // namespace

Eigen::VectorXd dense_vhat(const Graph& g) {
  Eigen::VectorXd v(ix(g.num_vertices()));
  double s = std::sqrt(g.total_volume());
  for (std::size_t i = 0; i < g.num_vertices(); ++i) v[ix(i)] = std::sqrt(g.degree(i)) / s;
  return v;
}

Eigen::MatrixXd dense_laplacian(const Graph& g) {
  check_dense(g);
  const auto n = ix(g.num_vertices());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    l(ix(e.u), ix(e.u)) += e.w;
    l(ix(e.v), ix(e.v)) += e.w;
    l(ix(e.u), ix(e.v)) -= e.w;
    l(ix(e.v), ix(e.u)) -= e.w;
  }
  return l;
}

Eigen::MatrixXd dense_lks(const Graph& g, const VertexSet& s) {
  check_dense(g);
  const auto n = ix(g.num_vertices());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  auto mu = g.mu();
  auto idx = s.indices();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      std::size_t i = idx[a], j = idx[b];
      double w = mu[i] * mu[j];
      l(ix(i), ix(i)) += w;
      l(ix(j), ix(j)) += w;
      l(ix(i), ix(j)) -= w;
      l(ix(j), ix(i)) -= w;
    }
  }
  return l;
}

Eigen::MatrixXd dense_lkv(const Graph& g) { return dense_lks(g, VertexSet::full(g.num_vertices())); }

Eigen::MatrixXd dense_r_i(const Graph& g, std::size_t i) {
  check_dense(g);
  if (i >= g.num_vertices()) fail(ErrorCode::DimensionMismatch, "R_i index");
  Eigen::VectorXd w = -Eigen::Map<const Eigen::VectorXd>(g.mu().data(), ix(g.num_vertices()));
  w[ix(i)] += 1.0;
  return w * w.transpose();
}

Eigen::MatrixXd dense_certificate(const Graph& g, const DualCoefficients& dual) {
  dual.validate(g.num_vertices());
  Eigen::MatrixXd m = dense_laplacian(g) / g.total_volume() - dual.alpha * dense_lkv(g);
  for (const auto& [v, w] : dual.beta) m += w * dense_r_i(g, v);
  return m;
}

Eigen::MatrixXd dense_accumulator(const UpdateAccumulator& acc) {
  const Graph& g = acc.graph();
  Eigen::MatrixXd h = acc.laplacian_coeff() * dense_laplacian(g) + acc.lkv_coeff() * dense_lkv(g);
  auto b = acc.beta_coeffs();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] != 0.0) h += b[i] * dense_r_i(g, i);
  }
  return h;
}

Eigen::MatrixXd gram_matrix(const Embedding& emb) {
  const auto n = ix(emb.num_vertices());
  Eigen::MatrixXd coords(n, ix(emb.dim()));
  for (std::size_t r = 0; r < emb.dim(); ++r) {
    auto c = emb.coordinate(r);
    for (std::size_t i = 0; i < emb.num_vertices(); ++i) coords(ix(i), ix(r)) = c[i];
  }
  return coords * coords.transpose();
}

Eigen::MatrixXd dense_expm(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::DimensionMismatch, "dense_expm needs a square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (a + a.transpose()));
  Eigen::VectorXd e = es.eigenvalues().array().exp();
  return es.eigenvectors() * e.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd dense_u_epsilon(const Graph& g, const UpdateAccumulator& acc, double epsilon) {
  const auto n = ix(g.num_vertices());
  Eigen::VectorXd isd(n);
  for (Eigen::Index i = 0; i < n; ++i) isd[i] = 1.0 / std::sqrt(g.degree(static_cast<std::size_t>(i)));
  const double vol = g.total_volume();
  Eigen::MatrixXd a = (vol * epsilon) * (isd.asDiagonal() * dense_accumulator(acc) * isd.asDiagonal());
  // Lift vhat out of the way so exp() keeps only the complement; the dropped
  // part is a multiple of the all-ones matrix, which L, L(K_V) and R_i annihilate.
  Eigen::VectorXd v = dense_vhat(g);
  a = 0.5 * (a + a.transpose()).eval();
  a += (a.norm() + 1000.0) * v * v.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  double lo = es.eigenvalues().minCoeff();
  Eigen::VectorXd w = (-(es.eigenvalues().array() - lo)).exp();
  Eigen::MatrixXd ex = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
  return (vol / ex.trace()) * (isd.asDiagonal() * ex * isd.asDiagonal());
}

double min_eigenvalue_on_complement(const Eigen::MatrixXd& a, const Eigen::VectorXd& u) {
  const auto n = a.rows();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n) - u * u.transpose();
  Eigen::MatrixXd r = p * (0.5 * (a + a.transpose())) * p;
  double kappa = a.norm() + 1.0;
  r += kappa * u * u.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

std::optional<BruteForceCut> brute_min_conductance(const Graph& g, const CutPredicate& accept) {
  bool found = false;
  std::uint64_t best_mask = 0;
  double best_phi = 0.0;
  gray_walk(g, [&](std::uint64_t mask, double mu, double phi) {
    if (!accept(mu)) return;
    if (!found || phi < best_phi - 1e-12 || (std::abs(phi - best_phi) <= 1e-12 && mask < best_mask)) {
      found = true;
      best_phi = phi;
      best_mask = mask;
    }
  });
  if (!found) return std::nullopt;
  BruteForceCut out;
  out.cut = mask_set(g.num_vertices(), best_mask);
  out.conductance = conductance(g, out.cut);
  out.mu = mu_of(g, out.cut);
  return out;
}

std::vector<BruteForceCut> brute_enumerate(const Graph& g, const CutPredicate& accept, double phi_max) {
  std::vector<BruteForceCut> out;
  gray_walk(g, [&](std::uint64_t mask, double mu, double phi) {
    if (phi <= phi_max + 1e-12 && accept(mu)) {
      BruteForceCut c;
      c.cut = mask_set(g.num_vertices(), mask);
      c.conductance = phi;
      c.mu = mu;
      out.push_back(std::move(c));
    }
  });
  return out;
}

CutPredicate b_balanced(double b) {
  return [b](double mu) { return std::min(mu, 1.0 - mu) >= b - 1e-12; };
}

}  // namespace balcut
