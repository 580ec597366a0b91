#include <doctest.h>

#include "support.hpp"

using namespace balcut;
using namespace testsupport;

namespace {

// 2m D^{-1/2} exp(-A) D^{-1/2} / (I . exp(-A)) with A = 2m eps D^{-1/2} H D^{-1/2},
// evaluated with the vhat direction removed from both numerator and trace.
Eigen::MatrixXd oracle_u(const Graph& g, const Eigen::MatrixXd& h, double eps) {
  const std::size_t n = g.num_vertices();
  Eigen::VectorXd isd(n), vhat(n);
  for (std::size_t i = 0; i < n; ++i) {
    isd[i] = 1.0 / std::sqrt(g.degree(i));
    vhat[i] = std::sqrt(g.degree(i) / g.total_volume());
  }
  Eigen::MatrixXd a = g.total_volume() * eps * isd.asDiagonal() * h * isd.asDiagonal();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n) - vhat * vhat.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p * a * p + 1e6 * vhat * vhat.transpose());
  double lo = es.eigenvalues().minCoeff();
  Eigen::VectorXd w = (-(es.eigenvalues().array() - lo)).exp().matrix();
  Eigen::MatrixXd e = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
  return g.total_volume() * isd.asDiagonal() * e * isd.asDiagonal() / e.trace();
}

DualCoefficients case3_dual(const Graph& g, double gamma, std::size_t count) {
  DualCoefficients d;
  d.alpha = 7.0 * gamma / 8.0;
  for (std::size_t i = 0; i < count; ++i) d.beta.emplace_back(i, g.mu()[i] * gamma);
  return d;
}

}  // namespace

TEST_CASE("sketch dimension") {
  SketchConfig cfg;
  CHECK(sketch_dimension(1000, cfg) == static_cast<std::size_t>(std::ceil(4.0 * std::log(1000.0) / 0.0625)));
  SketchConfig paper = SketchConfig::paper();
  CHECK(paper.delta == doctest::Approx(1.0 / 512.0));
  CHECK(paper.epsilon == doctest::Approx(1.0 / 130.0));
  SketchConfig bad;
  bad.delta = 1.5;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("dense U_eps oracle examples") {
  auto g = random_regular(16, 3, 2).graph;
  UpdateAccumulator acc(g);
  Eigen::MatrixXd u = dense_u_epsilon(g, acc, 0.25);
  Eigen::MatrixXd lkv = naive_lkv(g);
  CHECK(inner(lkv, u) == doctest::Approx(1.0).epsilon(1e-10));
  // H = 0 gives 2m/(n-1) D^{-1} up to a multiple of the all-ones matrix
  Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(16, 16);
  for (std::size_t i = 0; i < 16; ++i) expect(i, i) = g.total_volume() / 15.0 / g.degree(i);
  Eigen::MatrixXd diff = u - expect;
  Eigen::MatrixXd c = Eigen::MatrixXd::Identity(16, 16) - Eigen::MatrixXd::Constant(16, 16, 1.0 / 16.0);
  CHECK((c * diff * c).cwiseAbs().maxCoeff() < 1e-10);

  Rng rng(61);
  auto h = random_connected_graph(20, 0.2, true, rng);
  UpdateAccumulator acc2(h);
  acc2.accumulate(case3_dual(h, 0.05, 4), 0.05);
  DualCoefficients case1;
  case1.alpha = 0.05;
  acc2.accumulate(case1, 0.05);
  Eigen::MatrixXd u2 = dense_u_epsilon(h, acc2, 0.25);
  Eigen::MatrixXd o2 = oracle_u(h, dense_accumulator(acc2), 0.25);
  CHECK(inner(naive_lkv(h), u2) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(inner(naive_laplacian(h), u2) == doctest::Approx(inner(naive_laplacian(h), o2)).epsilon(1e-9));
  for (std::size_t i = 0; i < 20; ++i)
    CHECK(inner(naive_ri(h, i), u2) == doctest::Approx(inner(naive_ri(h, i), o2)).epsilon(1e-9));
  Eigen::MatrixXd c20 = Eigen::MatrixXd::Identity(20, 20) - Eigen::MatrixXd::Constant(20, 20, 0.05);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c20 * u2 * c20);
  CHECK(es.eigenvalues().minCoeff() >= -1e-10);

  auto big = cycle_graph(5000).graph;
  UpdateAccumulator acc3(big);
  CHECK_THROWS_AS(dense_u_epsilon(big, acc3, 0.25), Error);
}

TEST_CASE("sketch lies in the unit-spread set and is deterministic") {
  auto g = random_regular(600, 3, 5).graph;
  UpdateAccumulator acc(g);
  acc.accumulate(case3_dual(g, 0.02, 10), 0.02);
  SketchConfig cfg;
  cfg.rng_seed = 9;
  SketchStats stats;
  auto e1 = sketch_embedding(g, acc, cfg, 3, &stats);
  auto e2 = sketch_embedding(g, acc, cfg, 3);
  CHECK(std::abs(e1.variance() - 1.0) <= 1e-9);
  CHECK(stats.rows == sketch_dimension(600, cfg));
  CHECK_FALSE(stats.exact);
  bool identical = true;
  for (std::size_t r = 0; r < e1.dim(); ++r)
    for (std::size_t i = 0; i < 600; ++i) identical = identical && e1.at(i, r) == e2.at(i, r);
  CHECK(identical);
  auto e3 = sketch_embedding(g, acc, cfg, 4);
  CHECK(e3.at(0, 0) != e1.at(0, 0));

  cfg.threads = 3;
  auto e4 = sketch_embedding(g, acc, cfg, 3);
  bool same = true;
  for (std::size_t r = 0; r < e1.dim(); ++r)
    for (std::size_t i = 0; i < 600; ++i) same = same && e1.at(i, r) == e4.at(i, r);
  CHECK(same);
}

TEST_CASE("first iteration sketch approximates the scaled inverse degree") {
  auto g = grid_graph(20, 25).graph;
  UpdateAccumulator acc(g);
  SketchConfig cfg;
  auto emb = sketch_embedding(g, acc, cfg);
  // X = 2m/(n-1) D^{-1} in the centred sense: r_i^2 ~ 2m/((n-1) d_i) - 1/(n-1)
  const double n = 500.0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    double expect = g.total_volume() / ((n - 1.0) * g.degree(i)) - 1.0 / (n - 1.0);
    if (std::abs(emb.radius_sq()[i] - expect) > 0.25 * expect) ++bad;
  }
  CHECK(bad <= 5);
}

TEST_CASE("exact rows reproduce the dense update when the sketch saturates") {
  Rng rng(67);
  auto g = random_connected_graph(30, 0.2, true, rng);
  UpdateAccumulator acc(g);
  acc.accumulate(case3_dual(g, 0.05, 3), 0.05);
  SketchConfig cfg;
  SketchStats stats;
  auto emb = sketch_embedding(g, acc, cfg, 0, &stats);
  CHECK(stats.exact);
  Eigen::MatrixXd v = rows_of(emb);
  Eigen::MatrixXd x = v * v.transpose();
  Eigen::MatrixXd u = oracle_u(g, dense_accumulator(acc), cfg.epsilon);
  CHECK(inner(naive_laplacian(g), x) == doctest::Approx(inner(naive_laplacian(g), u)).epsilon(1e-8));
  for (std::size_t i = 0; i < 30; ++i)
    CHECK(inner(naive_ri(g, i), x) == doctest::Approx(inner(naive_ri(g, i), u)).epsilon(1e-8));
}

TEST_CASE("random rows keep pairwise distances") {
  // Sketch a fixed embedding the same way the exponential sketch does: each
  // row is a random direction scaled to sqrt(n/k).
  Rng rng(71);
  const std::size_t n = 300, dim = 40;
  SketchConfig cfg;
  const std::size_t k = sketch_dimension(n, cfg);
  Eigen::MatrixXd v = random_vectors(n, dim, rng);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd proj(k, dim);
  for (std::size_t r = 0; r < k; ++r) {
    Eigen::VectorXd u(dim);
    for (std::size_t i = 0; i < dim; ++i) u[i] = normal(rng);
    proj.row(r) = u.normalized().transpose() * std::sqrt(static_cast<double>(dim) / static_cast<double>(k));
  }
  Eigen::MatrixXd s = v * proj.transpose();
  std::size_t fails = 0, pairs = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double a = (v.row(i) - v.row(j)).squaredNorm(), b = (s.row(i) - s.row(j)).squaredNorm();
      ++pairs;
      if (b < (1 - cfg.delta) * a || b > (1 + cfg.delta) * a) ++fails;
    }
  CHECK(static_cast<double>(fails) < 0.01 * static_cast<double>(pairs));
}

TEST_CASE("dense engine agrees with the oracle") {
  Rng rng(73);
  for (int k = 0; k < 6; ++k) {
    auto g = random_connected_graph(pick(rng, 5, 40), 0.2, true, rng);
    DenseExactEngine engine(g);
    UpdateAccumulator acc(g);
    const double gamma = 0.03;
    for (int t = 0; t < 4; ++t) {
      auto emb = engine.embed(acc, 0.25);
      CHECK(std::abs(emb.variance() - 1.0) < 1e-9);
      Eigen::MatrixXd v = rows_of(emb);
      Eigen::MatrixXd x = v * v.transpose();
      Eigen::MatrixXd u = oracle_u(g, dense_accumulator(acc), 0.25);
      CHECK(inner(naive_laplacian(g), x) == doctest::Approx(inner(naive_laplacian(g), u)).epsilon(1e-8));
      DualCoefficients d;
      if (t % 2 == 0) {
        d.alpha = gamma;
      } else {
        d = case3_dual(g, gamma, 2);
      }
      acc.accumulate(d, gamma);
    }
  }
}
