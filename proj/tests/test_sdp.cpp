#include <doctest.h>

#include "support.hpp"

using namespace balcut;
using namespace testsupport;

TEST_CASE("cut embedding examples") {
  auto p4 = path_graph(4).graph;
  auto s = VertexSet::from_indices(4, std::vector<std::size_t>{0, 1});
  auto emb = cut_to_embedding(p4, s);
  REQUIRE(emb.dim() == 1);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(emb.at(i, 0)) == doctest::Approx(1.0));
  CHECK(emb.at(0, 0) == -emb.at(3, 0));
  CHECK(emb.variance() == doctest::Approx(1.0));
  CHECK(std::abs(emb.mean()[0]) < 1e-15);
  CHECK_THROWS_AS(cut_to_embedding(p4, VertexSet(4)), Error);
  CHECK_THROWS_AS(cut_to_embedding(p4, VertexSet::full(4)), Error);

  Rng rng(81);
  for (int k = 0; k < 40; ++k) {
    auto g = random_connected_graph(pick(rng, 2, 30), 0.2, true, rng);
    auto t = random_subset(g.num_vertices(), rng);
    auto e = cut_to_embedding(g, t);
    CHECK(e.variance() == doctest::Approx(1.0).epsilon(1e-12));
    double mt = mu_of(g, t);
    double expect = cut_weight(g, t) / g.total_weight() / (mt * (1.0 - mt));
    CHECK(edge_energy(e, g) == doctest::Approx(expect).epsilon(1e-10));
    CHECK(edge_energy(e, g) <= 4.0 * conductance(g, t) * (1 + 1e-12));
  }
}

TEST_CASE("psdp evaluation") {
  auto g = barbell(5, 1);
  auto emb = cut_to_embedding(g.graph, g.planted[0]);
  double phi = conductance(g.graph, g.planted[0]);
  auto ok = evaluate_psdp(emb, g.graph, 0.5, phi);
  CHECK(ok.feasible);
  CHECK(ok.variance == doctest::Approx(1.0));
  CHECK(ok.max_radius_sq == doctest::Approx(1.0));

  std::vector<double> flat(10, 3.0);
  auto same = Embedding::from_coordinates(g.graph, 1, flat, false);
  CHECK_FALSE(evaluate_psdp(same, g.graph, 0.5, 0.1).feasible);

  Rng rng(83);
  auto ex = random_regular(60, 3, 4).graph;
  auto rnd = to_embedding(ex, random_vectors(60, 5, rng), true);
  auto r = evaluate_psdp(rnd, ex, 0.5, 1e-4);
  CHECK_FALSE(r.feasible);
  CHECK(r.edge_energy > 4e-4);
}

TEST_CASE("embedding normalisation") {
  auto g = cycle_graph(5).graph;
  std::vector<double> c{1, 2, 3, 4, 5, 0, 0, 0, 0, 1};
  auto e = Embedding::from_coordinates(g, 2, c, true);
  double mass = 0.0;
  for (std::size_t i = 0; i < 5; ++i) mass += g.mu()[i] * e.radius_sq()[i];
  CHECK(mass == doctest::Approx(1.0));
  CHECK(e.distance_sq(0, 1) == doctest::Approx(e.scale() * e.scale() * 1.0));
  CHECK(e.vector_of(4).size() == 2);
  std::vector<double> zero(5, 1.0);
  CHECK_THROWS_AS(Embedding::from_coordinates(g, 1, zero, true), Error);
}

TEST_CASE("dual value examples") {
  const double gamma = 0.08, b = 0.4;
  DualCoefficients one;
  one.alpha = gamma;
  CHECK(dual_value(one, b) == doctest::Approx(gamma));
  auto g = random_regular(40, 3, 3).graph;
  DualCoefficients three;
  three.alpha = 7.0 * gamma / 8.0;
  double mass = 0.0;
  for (std::size_t i = 0; mass + g.mu()[i] <= b / 8.0; ++i) {
    three.beta.emplace_back(i, g.mu()[i] * gamma);
    mass += g.mu()[i];
  }
  CHECK(dual_value(three, b) >= 0.75 * gamma);
  CHECK(dual_value(DualCoefficients{}, b) == 0.0);
}

TEST_CASE("dual feasibility examples") {
  auto g = grid_graph(4, 4).graph;
  DualCoefficients huge;
  huge.alpha = 100.0;
  auto r = verify_dual_feasibility(g, huge, 0.5, 0.01);
  CHECK_FALSE(r.feasible);
  CHECK(r.value_ok);
  CHECK_FALSE(r.psd_ok);
  CHECK(r.method == "dense");

  auto zero = verify_dual_feasibility(g, DualCoefficients{}, 0.5, 0.01);
  CHECK_FALSE(zero.feasible);
  CHECK(zero.psd_ok);
  CHECK_FALSE(zero.value_ok);

  // lambda_2 of L/2m in the normalised frame equals lambda_2 of the normalised Laplacian
  Eigen::VectorXd isd(16);
  for (std::size_t i = 0; i < 16; ++i) isd[i] = 1.0 / std::sqrt(g.degree(i));
  Eigen::MatrixXd nl = isd.asDiagonal() * naive_laplacian(g) * isd.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(nl);
  double lam2 = es.eigenvalues()[1];
  DualCoefficients edge;
  edge.alpha = 0.999 * lam2;
  CHECK(verify_dual_feasibility(g, edge, 0.5, edge.alpha / 5.0).feasible);
  edge.alpha = 1.001 * lam2;
  CHECK_FALSE(verify_dual_feasibility(g, edge, 0.5, 1e-9).psd_ok);
}

TEST_CASE("lanczos path agrees with the dense path") {
  auto g = random_regular(700, 3, 8).graph;
  DualCoefficients d;
  d.alpha = 0.01;
  for (std::size_t i = 0; i < 20; ++i) d.beta.emplace_back(i, 0.001);
  auto r = verify_dual_feasibility(g, d, 0.5, 0.0005);
  CHECK(r.method == "lanczos");
  auto small = random_regular(300, 3, 8).graph;
  auto dense = verify_dual_feasibility(small, d, 0.5, 0.0005);
  CHECK(dense.method == "dense");
}

TEST_CASE("feasible duals exclude balanced cuts by brute force") {
  Rng rng(89);
  std::size_t checked = 0;
  for (int k = 0; k < 30; ++k) {
    auto g = random_connected_graph(pick(rng, 6, 14), 0.35, false, rng);
    const double b = uniform(rng, 0.1, 0.5);
    Eigen::VectorXd isd(g.num_vertices());
    for (std::size_t i = 0; i < g.num_vertices(); ++i) isd[i] = 1.0 / std::sqrt(g.degree(i));
    Eigen::MatrixXd nl = isd.asDiagonal() * naive_laplacian(g) * isd.asDiagonal();
    double lam2 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(nl).eigenvalues()[1];
    DualCoefficients d;
    d.alpha = 0.99 * lam2 / 2.0;
    const double level = d.alpha / 4.0 * 0.999;
    if (!verify_dual_feasibility(g, d, b, level).feasible) continue;
    ++checked;
    for (const auto& c : naive_all_cuts(g)) {
      if (c.balance >= b) CHECK(c.phi > level);
    }
  }
  CHECK(checked > 10);
}
