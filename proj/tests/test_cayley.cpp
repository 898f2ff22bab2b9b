#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "trid/cayley.hpp"

using namespace trid;

namespace {

// Adjacency straight from the definition: h g^-1 is an interval element.
bool adjacent_by_definition(const FiniteGroup& g, const std::vector<int>& a, const std::vector<int>& b) {
  const Index m = static_cast<Index>(a.size());
  std::vector<int> q(m);
  for (Index i = 0; i < m; ++i) q[i] = g.mul(b[i], g.inv(a[i]));
  for (int k = 1; k <= m; ++k)
    for (int l = k + 1; l <= m + 1; ++l) {
      bool match = q[k - 1] != 0;
      for (Index i = 0; i < m && match; ++i)
        match = (i >= k - 1 && i < l - 1) ? q[i] == q[k - 1] : q[i] == 0;
      if (match) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("TupleCodec is lexicographic") {
  const TupleCodec codec(3, 3);
  CHECK(codec.size() == 27);
  Index expected = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const std::vector<int> t{a, b, c};
        CHECK(codec.encode(t) == expected);
        CHECK(codec.decode(expected) == t);
        ++expected;
      }
  CHECK_THROWS(codec.decode(27));
}

TEST_CASE("symmetric_set") {
  const auto c2 = from_family("C2");
  const auto s = symmetric_set(c2, 2);
  CHECK(s.size() == 3);
  std::set<std::vector<int>> got;
  for (const auto& v : s) got.insert(v.coords);
  CHECK(got == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});

  CHECK(symmetric_set(from_family("C3"), 3).size() == 12);
  CHECK(symmetric_set(c2, 1).size() == 1);
  CHECK(symmetric_set(c2, 1)[0].coords == std::vector<int>{1});

  for (const char* spec : {"C3", "S3", "C2xC2", "Q8"})
    for (Index m = 1; m <= 3; ++m) {
      const auto g = from_family(spec);
      const auto set = symmetric_set(g, m);
      CHECK(static_cast<Index>(set.size()) == interval_count(m) * (g.order() - 1));
      std::set<std::vector<int>> distinct;
      for (const auto& v : set) distinct.insert(v.coords);
      CHECK(distinct.size() == set.size());
      for (const auto& v : set) {
        std::vector<int> inv(v.coords.size());
        for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = g.inv(v.coords[i]);
        CHECK(distinct.count(inv) == 1);
      }
    }
}

TEST_CASE("build_script_graph: small cases") {
  const auto c2 = from_family("C2");
  const auto k4 = build_script_graph(c2, 2);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.degree_if_regular() == 3);

  const auto k2 = build_script_graph(c2, 1);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.has_edge(0, 1));

  const auto g3 = build_script_graph(from_family("C3"), 3);
  CHECK(g3.vertex_count() == 27);
  CHECK(g3.degree_if_regular() == 12);
  CHECK(g3.script_tag().has_value());
  CHECK_FALSE(build_script_graph(from_family("S3"), 2).script_tag().has_value());
}

TEST_CASE("build_script_graph matches the definition") {
  for (const char* spec : {"C3", "S3", "C2xC2", "C4"})
    for (Index m = 1; m <= 3; ++m) {
      const auto g = from_family(spec);
      const auto gr = build_script_graph(g, m);
      const TupleCodec codec(g.order(), m);
      CHECK(gr.degree_if_regular() == interval_count(m) * (g.order() - 1));
      for (Index a = 0; a < gr.vertex_count(); ++a)
        for (Index b = 0; b < gr.vertex_count(); ++b)
          if (a != b)
            REQUIRE(gr.has_edge(a, b) == adjacent_by_definition(g, codec.decode(a), codec.decode(b)));
    }
}

TEST_CASE("build_script_graph is invariant under right translation") {
  const auto g = from_family("S3");
  const Index m = 3;
  const auto gr = build_script_graph(g, m);
  const TupleCodec codec(g.order(), m);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Index> pick(0, gr.vertex_count() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = codec.decode(pick(rng)), b = codec.decode(pick(rng)), t = codec.decode(pick(rng));
    const Index at = codec.encode(tuple_mul(g, a, t)), bt = codec.encode(tuple_mul(g, b, t));
    CHECK(gr.has_edge(codec.encode(a), codec.encode(b)) == gr.has_edge(at, bt));
  }
}

TEST_CASE("build_script_graph: cap") {
  Caps caps;
  caps.vertex_cap = 26;
  CHECK_THROWS_AS(build_script_graph(from_family("C3"), 3, caps), CapExceeded);
  caps.vertex_cap = 27;
  CHECK_NOTHROW(build_script_graph(from_family("C3"), 3, caps));
}

TEST_CASE("build_cayley") {
  const auto c5 = from_family("C5");
  const std::vector<int> s{1, 4};
  const auto cyc = build_cayley(c5, s);
  CHECK(cyc.graph.degree_if_regular() == 2);
  CHECK(cyc.graph.is_connected());
  CHECK(cyc.normal);

  const auto s3 = from_family("S3");
  std::vector<int> transpositions;
  for (int a = 1; a < 6; ++a)
    if (s3.element_order(a) == 2) transpositions.push_back(a);
  REQUIRE(transpositions.size() == 3);
  const auto k33 = build_cayley(s3, transpositions);
  CHECK(k33.graph.degree_if_regular() == 3);
  CHECK(k33.normal);
  // bipartite: no odd closed walk of length 3 or 5 through vertex 0
  const IntMatrix a = k33.graph.adjacency_matrix<std::int64_t>();
  CHECK((a * a * a).trace() == 0);
  CHECK((a * a * a * a * a).trace() == 0);

  // a single transposition is symmetric but not closed under conjugation
  const std::vector<int> one{transpositions[0]};
  CHECK_FALSE(build_cayley(s3, one).normal);

  const auto c4 = from_family("C4");
  const std::vector<int> g_only{1}, with_e{0, 1, 3};
  CHECK_THROWS_AS(build_cayley(c4, g_only), PreconditionError);
  CHECK_THROWS_AS(build_cayley(c4, with_e), PreconditionError);
}

TEST_CASE("interval and chain cliques") {
  const auto c3 = from_family("C3");
  const TupleCodec codec(3, 3);
  const auto gr = build_script_graph(c3, 3);
  const auto base = TupleVertex::from_code(codec, 0);
  auto tri = interval_clique(c3, 3, base, 1, 2);
  std::sort(tri.begin(), tri.end());
  CHECK(tri == std::vector<Index>{codec.encode(std::vector<int>{0, 0, 0}),
                                  codec.encode(std::vector<int>{1, 0, 0}),
                                  codec.encode(std::vector<int>{2, 0, 0})});

  const auto c2 = from_family("C2");
  const TupleCodec c2codec(2, 2);
  const auto eg = TupleVertex::from_coords(c2codec, {0, 1});
  auto pair = interval_clique(c2, 2, eg, 1, 3);
  std::sort(pair.begin(), pair.end());
  CHECK(pair == std::vector<Index>{c2codec.encode(std::vector<int>{0, 1}), c2codec.encode(std::vector<int>{1, 0})});

  for (const char* spec : {"C2", "C3", "S3", "C2xC2"})
    for (Index m = 1; m <= 3; ++m) {
      const auto g = from_family(spec);
      const auto graph = build_script_graph(g, m);
      const TupleCodec tc(g.order(), m);
      for (Index code = 0; code < tc.size(); code += 5)
        for (int k = 1; k <= m; ++k)
          for (int l = k + 1; l <= m + 1; ++l) {
            const auto c = interval_clique(g, m, TupleVertex::from_code(tc, code), k, l);
            CHECK(static_cast<Index>(c.size()) == g.order());
            CHECK(is_clique(graph, c));
          }
      for (int x = 1; x < g.order(); ++x) {
        const auto chain = chain_clique(g, m, x);
        CHECK(static_cast<Index>(chain.size()) == m + 1);
        CHECK(is_clique(graph, chain));
      }
    }

  auto chain = chain_clique(c2, 2, 1);
  std::sort(chain.begin(), chain.end());
  CHECK(chain == std::vector<Index>{0, c2codec.encode(std::vector<int>{1, 0}), c2codec.encode(std::vector<int>{1, 1})});
  CHECK(chain_clique(c3, 3, 1).size() == 4);
  CHECK_THROWS_AS(chain_clique(c3, 3, 0), PreconditionError);
  CHECK_THROWS(interval_clique(c3, 3, base, 2, 2));
}
