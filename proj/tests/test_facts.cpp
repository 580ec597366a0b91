#include <doctest.h>

#include "facts.hpp"

using namespace testsupport;

TEST_CASE("basic identities hold on random instances") {
  FactSuite s = run_fact_suite(150, 20261016);
  for (const FactTally* t : s.required()) {
    INFO(t->name << " worst " << t->worst);
    CHECK(t->checks > 0);
    CHECK(t->failures == 0);
  }
}

TEST_CASE("star inequality over the cut side itself is not an operator inequality") {
  // S = {0}: mu_0 R_0 has rank one while mu_0 L(K_V) has rank n - 1.
  auto g = balcut::cycle_graph(6).graph;
  auto s = balcut::VertexSet::from_indices(6, std::vector<std::size_t>{0});
  Eigen::MatrixXd lhs = g.mu()[0] * naive_ri(g, 0);
  Eigen::MatrixXd rhs = balcut::mu_of(g, s) * naive_lkv(g) - naive_lks(g, s);
  CHECK(relative_min_eig(lhs - rhs) < -1e-3);
  Eigen::MatrixXd other = Eigen::MatrixXd::Zero(6, 6);
  for (std::size_t i = 1; i < 6; ++i) other += g.mu()[i] * naive_ri(g, i);
  CHECK(relative_min_eig(other - rhs) > -1e-12);
}
