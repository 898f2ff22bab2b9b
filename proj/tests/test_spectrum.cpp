#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "trid/cayley.hpp"
#include "trid/clique.hpp"
#include "trid/spectrum.hpp"

using namespace trid;

namespace {

void check_sorted_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

}  // namespace

TEST_CASE("spectrum_numeric: known graphs") {
  check_sorted_close(spectrum_numeric(graphs::complete(4)).eigenvalues, {-1, -1, -1, 3}, 1e-9);
  check_sorted_close(spectrum_numeric(graphs::petersen()).eigenvalues,
                     {-2, -2, -2, -2, 1, 1, 1, 1, 1, 3}, 1e-9);
  const double c5_min = 2 * std::cos(4 * std::numbers::pi / 5);
  CHECK(spectrum_numeric(graphs::cycle(5)).lambda_min == doctest::Approx(c5_min).epsilon(1e-12));
  CHECK(std::abs(c5_min + 1.618034) < 1e-6);
}

TEST_CASE("Petersen eigenvalues satisfy the minimal polynomial exactly") {
  const IntMatrix a = graphs::petersen().adjacency_matrix<std::int64_t>();
  const IntMatrix id = IntMatrix::Identity(10, 10);
  CHECK(((a - 3 * id) * (a - id) * (a + 2 * id)).isZero());
}

TEST_CASE("spectrum report fields") {
  const auto s = spectrum_numeric(graphs::petersen());
  CHECK_FALSE(s.exact);
  CHECK(s.lambda_min == s.eigenvalues.front());
  CHECK(s.lambda_max == s.eigenvalues.back());
  CHECK(std::abs(s.trace()) < 1e-9);
  const auto h = s.histogram();
  REQUIRE(h.size() == 3);
  CHECK(h.at(-2.0) == 4);
  CHECK(h.at(1.0) == 5);
  CHECK(h.at(3.0) == 1);
  CHECK(max_eigen_residual(graphs::petersen()) <= 1e-9 * 10);
}

TEST_CASE("abelian_spectrum: C2, m = 2") {
  const auto s = abelian_spectrum(*abelian_structure(from_family("C2")), 2);
  CHECK(s.exact);
  CHECK(s.exact_values == std::vector<std::int64_t>{-1, -1, -1, 3});
}

TEST_CASE("abelian_spectrum: trivial tuple gives the degree") {
  for (const char* spec : {"C2", "C3", "C2xC2", "C5"})
    for (Index m = 1; m <= 3; ++m) {
      const auto st = *abelian_structure(from_family(spec));
      const auto s = abelian_spectrum(st, m);
      CHECK(s.exact_values.back() == interval_count(m) * (st.order() - 1));
      CHECK(static_cast<Index>(s.exact_values.size()) == checked_pow(st.order(), m));
      std::int64_t sum = 0;
      for (auto v : s.exact_values) sum += v;
      CHECK(sum == 0);
    }
}

TEST_CASE("abelian_spectrum: C3, m = 3") {
  const auto st = *abelian_structure(from_family("C3"));
  const auto s = abelian_spectrum(st, 3);
  CHECK(s.lambda_min == -3);
  // chi = (a, a, a) with a != 0: only the full interval [1, 4) is trivial
  const std::vector<AbelianCharacter> aaa(3, make_character(st, {1}));
  CHECK(count_trivial_blocks(st, aaa) == 1);
  const auto numeric = spectrum_numeric(build_script_graph(from_family("C3"), 3));
  check_sorted_close(numeric.eigenvalues, s.eigenvalues, 1e-6);
}

TEST_CASE("abelian_spectrum matches the numeric spectrum") {
  for (const char* spec : {"C2", "C3", "C4", "C2xC2", "C5", "C6"})
    for (Index m = 1; m <= 4; ++m) {
      const auto g = from_family(spec);
      if (checked_pow(g.order(), m) > 1300) continue;
      CAPTURE(spec);
      CAPTURE(m);
      const auto exact = abelian_spectrum(*abelian_structure(g), m);
      const auto numeric = spectrum_numeric(build_script_graph(g, m));
      check_sorted_close(numeric.eigenvalues, exact.eigenvalues, 1e-6);
    }
}

TEST_CASE("certify_lambda_min_above") {
  const IntMatrix k4 = graphs::complete(4).adjacency_matrix<std::int64_t>();
  CHECK(certify_lambda_min_above(k4, 3));
  CHECK_FALSE(certify_lambda_min_above(k4, 1));
  const IntMatrix g3 = build_script_graph(from_family("C3"), 3).adjacency_matrix<std::int64_t>();
  CHECK(certify_lambda_min_above(g3, 6));
  CHECK_FALSE(certify_lambda_min_above(g3, 3));  // lambda_min = -3 exactly
  IntMatrix asym = IntMatrix::Zero(2, 2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(certify_lambda_min_above(asym, 1), std::invalid_argument);
}

TEST_CASE("certify agrees with the numeric spectrum away from the boundary") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto g = graphs::random_regular(16, 5, seed);
    const double lmin = spectrum_numeric(g).lambda_min;
    const IntMatrix a = g.adjacency_matrix<std::int64_t>();
    for (std::int64_t c = 1; c <= 5; ++c)
      if (std::abs(lmin + static_cast<double>(c)) > 1e-6) CHECK(certify_lambda_min_above(a, c) == (lmin > -c));
  }
}

TEST_CASE("every eigenvalue exceeds -C(m+1,2) once m >= n") {
  for (const char* spec : {"C2", "C3", "C2xC2"}) {
    const auto st = *abelian_structure(from_family(spec));
    for (Index m = st.order(); m <= st.order() + 1; ++m) {
      const auto s = abelian_spectrum(st, m);
      CHECK(s.exact_values.front() >= -interval_count(m) + st.order());
    }
  }
  // and the bound is attained below: C2 at m = 1 is K2 with lambda_min = -1
  CHECK(abelian_spectrum(*abelian_structure(from_family("C2")), 1).lambda_min == -1);
}

TEST_CASE("delsarte bound") {
  CHECK(delsarte_bound(graphs::complete(4)) == 4);
  CHECK(delsarte_bound(graphs::petersen()) == 2);
  const auto g3 = build_script_graph(from_family("C3"), 3);
  CHECK(delsarte_bound(g3) == 5);
  CHECK(static_cast<Index>(max_clique_exact(g3).size()) <= 5);
  CHECK_THROWS_AS(delsarte_bound(graphs::path(3)), PreconditionError);
  CHECK_THROWS_AS(delsarte_bound(graphs::empty(3)), PreconditionError);
}

TEST_CASE("the bound is not universal for regular graphs") {
  // triangular prism: 3-regular, spectrum {3, 1, 0, 0, -2, -2}, contains a triangle
  const std::vector<std::pair<Index, Index>> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  const auto prism = Graph::from_edges(6, e);
  CHECK(spectrum_numeric(prism).lambda_min == doctest::Approx(-2.0));
  CHECK(delsarte_bound(prism) == 2);
  CHECK(max_clique_exact(prism).size() == 3);
}

TEST_CASE("delsarte_from snaps near-integer ratios") {
  CHECK(delsarte_from(3, -2.0000000000001) == 2);
  CHECK(delsarte_from(3, -1.9999999999999) == 2);
  CHECK(delsarte_from(3, -1.9) == 2);
  CHECK(delsarte_from(4, -1.0) == 5);
  CHECK_THROWS_AS(delsarte_from(3, 0.0), PreconditionError);
}

TEST_CASE("commute_check") {
  const auto c5 = graphs::cycle(5);
  CHECK(commute_check(c5.adjacency_matrix<std::int64_t>(), complement(c5).adjacency_matrix<std::int64_t>()));
  const auto p3 = graphs::path(3);
  CHECK_FALSE(commute_check(p3.adjacency_matrix<std::int64_t>(), complement(p3).adjacency_matrix<std::int64_t>()));
  CHECK(commute_check(IntMatrix::Identity(10, 10), graphs::petersen().adjacency_matrix<std::int64_t>()));
  CHECK_THROWS_AS(commute_check(IntMatrix::Identity(2, 2), IntMatrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("distance classes of a normal Cayley graph commute") {
  const auto s3 = from_family("S3");
  std::vector<int> transpositions;
  for (int a = 1; a < 6; ++a)
    if (s3.element_order(a) == 2) transpositions.push_back(a);
  const auto parts = distance_partition(build_cayley(s3, transpositions).graph);
  for (const auto& x : parts)
    for (const auto& y : parts) CHECK(commute_check(x, y));
}

TEST_CASE("caps") {
  Caps caps;
  caps.eigen_cap = 9;
  CHECK_THROWS_AS(spectrum_numeric(graphs::petersen(), caps), CapExceeded);
  caps.vertex_cap = 26;
  CHECK_THROWS_AS(abelian_spectrum(*abelian_structure(from_family("C3")), 3, caps), CapExceeded);
}
