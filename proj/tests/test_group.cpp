#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "doctest.h"
#include "trid/group.hpp"

using namespace trid;

namespace {

// S3 from composing permutations of {0,1,2}, independent of from_family.
std::vector<std::vector<int>> s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = index_of(c);
    }
  return t;
}

void check_axioms(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) {
    CHECK(g.mul(0, a) == a);
    CHECK(g.mul(a, 0) == a);
    CHECK(g.mul(a, g.inv(a)) == 0);
    CHECK(g.mul(g.inv(a), a) == 0);
    CHECK(g.inv(g.inv(a)) == a);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
  CHECK(g.name(0) == "e");
}

std::map<Index, int> order_census(const FiniteGroup& g) {
  std::map<Index, int> census;
  for (int a = 0; a < g.order(); ++a) ++census[g.element_order(a)];
  return census;
}

void check_homomorphism(const FiniteGroup& g, const AbelianStructure& s) {
  const int n = static_cast<int>(g.order());
  Index product = 1;
  for (int d : s.factors) {
    CHECK(d >= 2);
    product *= d;
  }
  CHECK(product == n);
  std::vector<std::vector<int>> seen;
  for (int a = 0; a < n; ++a) {
    seen.push_back(s.to_exponents(a));
    for (int b = 0; b < n; ++b) {
      const auto& x = s.to_exponents(a);
      const auto& y = s.to_exponents(b);
      const auto& z = s.to_exponents(g.mul(a, b));
      for (std::size_t j = 0; j < s.factors.size(); ++j) CHECK(z[j] == (x[j] + y[j]) % s.factors[j]);
    }
  }
  CHECK(std::all_of(s.to_exponents(0).begin(), s.to_exponents(0).end(), [](int v) { return v == 0; }));
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

}  // namespace

TEST_CASE("from_family: small cyclic groups") {
  const auto c2 = from_family("C2");
  CHECK(c2.order() == 2);
  CHECK(c2.inv(0) == 0);
  CHECK(c2.inv(1) == 1);
  CHECK(c2.mul(1, 1) == 0);

  const auto c3 = from_family("C3");
  CHECK(c3.order() == 3);
  CHECK(c3.mul(1, 2) == 0);
  CHECK(c3.name(1) == "g");
  CHECK(c3.name(2) == "g^2");
}

TEST_CASE("from_family: element k of C_d has order d / gcd(d, k)") {
  for (int d : {1, 2, 5, 6, 12}) {
    const auto g = from_family("C" + std::to_string(d));
    check_axioms(g);
    for (int k = 0; k < d; ++k) CHECK(g.element_order(k) == d / std::gcd(d, k));
  }
}

TEST_CASE("from_family: S3 element order census") {
  const auto s3 = from_family("S3");
  check_axioms(s3);
  CHECK_FALSE(s3.is_abelian());
  const auto census = order_census(s3);
  CHECK(census.at(1) == 1);
  CHECK(census.at(2) == 3);
  CHECK(census.at(3) == 2);
}

TEST_CASE("from_family: other families satisfy the axioms") {
  for (const char* spec : {"C2xC2", "C2xC3", "C2xC2xC2", "D4", "D5", "Q8", "S4"}) {
    CAPTURE(spec);
    const auto g = from_family(spec);
    check_axioms(g);
    CHECK(g.family() == std::optional<std::string>(spec));
  }
  CHECK(from_family("D4").order() == 8);
  CHECK(from_family("S4").order() == 24);
  const auto q8 = order_census(from_family("Q8"));
  CHECK(q8.at(4) == 6);
  CHECK(q8.at(2) == 1);
  const auto d4 = order_census(from_family("D4"));
  CHECK(d4.at(2) == 5);
  CHECK(d4.at(4) == 2);
}

TEST_CASE("from_family: errors") {
  CHECK_THROWS_AS(from_family("Z5"), PreconditionError);
  CHECK_THROWS_AS(from_family("C"), PreconditionError);
  CHECK_THROWS_AS(from_family("C0"), PreconditionError);
  CHECK_THROWS_AS(from_family("D0"), PreconditionError);
  CHECK_THROWS_AS(from_family("S5"), PreconditionError);
}

TEST_CASE("from_table: accepts C2 and S3, rejects non-groups") {
  const auto c2 = from_table({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.is_abelian());

  const auto s3 = from_table(s3_table());
  check_axioms(s3);
  CHECK_FALSE(s3.is_abelian());

  try {
    from_table({{0, 1}, {1, 1}});
    FAIL("expected rejection");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("row 1 is not a permutation") != std::string::npos);
  }
  CHECK_THROWS_AS(from_table({{1, 0}, {0, 1}}), PreconditionError);     // identity not at 0
  CHECK_THROWS_AS(from_table({{0, 2}, {1, 0}}), PreconditionError);     // entry out of range
  CHECK_THROWS_AS(from_table({{0, 1}, {1, 0}}, {"e", "e"}), PreconditionError);
}

TEST_CASE("from_table: non-associative Latin square reports a triple") {
  // A loop of order 5 with identity 0 that is not a group.
  const std::vector<std::vector<int>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    from_table(loop);
    FAIL("expected rejection");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("associativ") != std::string::npos);
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
}

TEST_CASE("from_table: associativity cap") {
  const auto big = from_family("C30");
  std::vector<std::vector<int>> t(30, std::vector<int>(30));
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 30; ++j) t[i][j] = big.mul(i, j);
  CHECK_THROWS_AS(from_table(t, {}, "t", TableOptions{10, false}), PreconditionError);
  CHECK(from_table(t, {}, "t", TableOptions{10, true}).order() == 30);
  CHECK(from_table(t).order() == 30);
}

TEST_CASE("find: names with index fallback") {
  const auto s3 = from_family("S3");
  for (int a = 0; a < 6; ++a) CHECK(s3.find(s3.name(a)) == a);
  CHECK(s3.find("3") == 3);
  CHECK_FALSE(s3.find("6").has_value());
  CHECK_FALSE(s3.find("nope").has_value());
}

TEST_CASE("abelian_structure") {
  const auto c3 = from_family("C3");
  const auto s = abelian_structure(c3);
  REQUIRE(s);
  CHECK(s->factors == std::vector<int>{3});
  for (int k = 0; k < 3; ++k) CHECK(s->to_exponents(k) == std::vector<int>{k});

  CHECK_FALSE(abelian_structure(from_family("S3")));
  CHECK_FALSE(abelian_structure(from_family("Q8")));

  const auto v4 = from_family("C2xC2");
  const auto sv = abelian_structure(v4);
  REQUIRE(sv);
  CHECK(sv->factors == std::vector<int>{2, 2});
  check_homomorphism(v4, *sv);
}

TEST_CASE("abelian_structure: table groups get invariant factors") {
  for (const char* spec : {"C2xC3", "C4xC2", "C2xC2xC2", "C3xC3", "C12", "C2xC6"}) {
    CAPTURE(spec);
    const auto fam = from_family(spec);
    std::vector<std::vector<int>> t(fam.order(), std::vector<int>(fam.order()));
    for (int i = 0; i < fam.order(); ++i)
      for (int j = 0; j < fam.order(); ++j) t[i][j] = fam.mul(i, j);
    const auto g = from_table(t);
    const auto s = abelian_structure(g);
    REQUIRE(s);
    check_homomorphism(g, *s);
    for (std::size_t j = 1; j < s->factors.size(); ++j) CHECK(s->factors[j] % s->factors[j - 1] == 0);
  }
  const auto c2c3 = from_family("C2xC3");
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) t[i][j] = c2c3.mul(i, j);
  CHECK(abelian_structure(from_table(t))->factors == std::vector<int>{6});
}

TEST_CASE("abelian_structure: trivial group") {
  const auto s = abelian_structure(from_family("C1"));
  REQUIRE(s);
  CHECK(s->factors.empty());
  CHECK(s->order() == 1);
}

TEST_CASE("character_block_trivial") {
  const auto s2 = *abelian_structure(from_family("C2"));
  const auto s3 = *abelian_structure(from_family("C3"));
  const auto s22 = *abelian_structure(from_family("C2xC2"));

  const std::vector<AbelianCharacter> a{make_character(s2, {1}), make_character(s2, {1})};
  CHECK(character_block_trivial(s2, a));
  const std::vector<AbelianCharacter> b{make_character(s3, {1}), make_character(s3, {1})};
  CHECK_FALSE(character_block_trivial(s3, b));
  const std::vector<AbelianCharacter> c{make_character(s22, {1, 0}), make_character(s22, {0, 1}),
                                        make_character(s22, {1, 1})};
  CHECK(character_block_trivial(s22, c));

  for (const auto& ch : all_characters(s22)) {
    const std::vector<AbelianCharacter> one{ch};
    CHECK(character_block_trivial(s22, one) == ch.is_trivial());
  }
  CHECK(all_characters(s22).size() == 4);

  const std::vector<AbelianCharacter> bad{AbelianCharacter{{1}}};
  CHECK_THROWS_AS(character_block_trivial(s22, bad), std::invalid_argument);
  CHECK_THROWS(make_character(s3, {3}));
  CHECK_THROWS(make_character(s3, {1, 0}));
}
