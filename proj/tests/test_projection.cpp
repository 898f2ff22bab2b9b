#include <cmath>

#include "doctest.h"
#include "trid/cayley.hpp"
#include "trid/projection.hpp"

using namespace trid;

namespace {

void check_clauses(const Graph& g, const std::vector<Index>& clique) {
  const auto p = project_clique(g, clique);
  const double v = static_cast<double>(g.vertex_count());
  const double c = static_cast<double>(clique.size());
  CHECK(std::abs(p.report.trace_residual) <= 1e-8);
  CHECK(std::abs(p.report.sum_residual) <= 1e-8 * v * v);
  CHECK(std::abs(p.report.ratio - c) <= 1e-8);
  CHECK(p.report.min_eigenvalue >= -1e-8 * p.report.norm);
  CHECK((p.c_hat - p.c_hat.transpose()).norm() <= 1e-10);
  const MatXd recomposed = p.alpha.convert_to<double>() * MatXd::Identity(g.vertex_count(), g.vertex_count()) +
                           p.beta.convert_to<double>() * g.adjacency_matrix<double>() + p.residual;
  CHECK((recomposed - p.c_hat).norm() <= 1e-9);
}

}  // namespace

TEST_CASE("K4 with its full clique projects to J") {
  const auto k4 = graphs::complete(4);
  const std::vector<Index> all{0, 1, 2, 3};
  const auto p = project_clique(k4, all);
  CHECK((p.c_hat - MatXd::Ones(4, 4)).norm() <= 1e-10);
  CHECK(p.report.ratio == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(p.alpha == Rational(1));
  CHECK(p.beta == Rational(1));
  check_clauses(k4, all);
}

TEST_CASE("single vertex clique has ratio 1") {
  for (const auto& g : {graphs::petersen(), graphs::cycle(6), graphs::complete(5)}) {
    const std::vector<Index> one{0};
    CHECK(project_clique(g, one).report.ratio == doctest::Approx(1.0).epsilon(1e-10));
    check_clauses(g, one);
  }
}

TEST_CASE("projection clauses on edges and triangles") {
  const std::vector<Index> edge{0, 1};
  check_clauses(graphs::petersen(), edge);
  check_clauses(graphs::cycle(6), edge);
  const auto k4 = build_script_graph(from_family("C2"), 2);
  const std::vector<Index> tri{0, 1, 2};
  check_clauses(k4, tri);
  const auto p = project_clique(graphs::petersen(), edge);
  CHECK(p.alpha == Rational(1, 5));
  CHECK(p.beta == Rational(1, 15));
}

TEST_CASE("algebra dimensions") {
  // K_n and Petersen are strongly regular: the algebra is {I, A, J - I - A}
  CHECK(project_clique(graphs::petersen(), std::vector<Index>{0, 1}).algebra_dimension == 3);
  CHECK(project_clique(graphs::complete(4), std::vector<Index>{0, 1}).algebra_dimension == 2);
  // C6 is distance regular with diameter 3
  CHECK(project_clique(graphs::cycle(6), std::vector<Index>{0, 1}).algebra_dimension == 4);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(project_clique(graphs::petersen(), std::vector<Index>{0, 2}), PreconditionError);
  CHECK_THROWS_AS(project_clique(graphs::petersen(), std::vector<Index>{}), PreconditionError);
  CHECK_THROWS_AS(project_clique(graphs::path(3), std::vector<Index>{0, 1}), PreconditionError);
  const std::vector<std::pair<Index, Index>> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK_THROWS_AS(project_clique(Graph::from_edges(6, two_triangles), std::vector<Index>{0, 1}),
                  PreconditionError);
}
