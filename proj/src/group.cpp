#include "trid/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

namespace trid {

class GroupBuilder {
 public:
  static FiniteGroup build(const std::vector<std::vector<int>>& mul,
                           std::vector<std::string> names, std::string label,
                           const TableOptions& opts);

  static FiniteGroup with_family(FiniteGroup g, std::string family,
                                 std::optional<std::vector<int>> factors) {
    g.family_ = family;
    g.label_ = std::move(family);
    g.cyclic_factors_ = std::move(factors);
    return g;
  }
};

namespace {

// Family constructions are associative by construction; the exhaustive check
// still runs below the cap.
const TableOptions kFamilyOptions{128, true};

std::string describe(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

std::vector<std::vector<int>> table_from(Index n, auto&& op) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) t[i][j] = op(static_cast<int>(i), static_cast<int>(j));
  return t;
}

// Direct product of cyclic groups; element code is mixed radix with the
// first factor most significant.
FiniteGroup cyclic_product(const std::vector<int>& d, const std::string& label) {
  Index n = 1;
  for (int di : d) n *= di;
  const auto digits = [&](int code) {
    std::vector<int> out(d.size());
    for (Index j = static_cast<Index>(d.size()) - 1; j >= 0; --j) {
      out[j] = code % d[j];
      code /= d[j];
    }
    return out;
  };
  const auto encode = [&](const std::vector<int>& a) {
    int code = 0;
    for (std::size_t j = 0; j < d.size(); ++j) code = code * d[j] + a[j];
    return code;
  };
  auto mul = table_from(n, [&](int x, int y) {
    auto a = digits(x);
    const auto b = digits(y);
    for (std::size_t j = 0; j < d.size(); ++j) a[j] = (a[j] + b[j]) % d[j];
    return encode(a);
  });

  std::vector<std::string> names(n);
  const bool single = d.size() == 1;
  for (int x = 0; x < n; ++x) {
    const auto a = digits(x);
    std::string s;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (a[j] == 0) continue;
      s += single ? std::string("g") : std::string(1, static_cast<char>('a' + j));
      if (a[j] > 1) s += "^" + std::to_string(a[j]);
    }
    names[x] = s.empty() ? "e" : s;
  }
  return GroupBuilder::build(mul, std::move(names), label, kFamilyOptions);
}

std::string cycle_name(const std::vector<int>& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

FiniteGroup symmetric(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  auto mul = table_from(static_cast<Index>(perms.size()), [&](int x, int y) {
    std::vector<int> r(k);
    for (int i = 0; i < k; ++i) r[i] = perms[x][perms[y][i]];
    return index.at(r);
  });
  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back(cycle_name(q));
  return GroupBuilder::build(mul, std::move(names), "S" + std::to_string(k), kFamilyOptions);
}

FiniteGroup dihedral(int k) {
  // index b*k + a  <->  s^b r^a
  auto mul = table_from(2 * k, [&](int x, int y) {
    const int b1 = x / k, a1 = x % k, b2 = y / k, a2 = y % k;
    const int a = ((b2 ? (k - a1) % k : a1) + a2) % k;
    return (b1 ^ b2) * k + a;
  });
  std::vector<std::string> names;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < k; ++a) {
      std::string s = b ? "s" : "";
      if (a == 1) s += "r";
      if (a > 1) s += "r^" + std::to_string(a);
      names.push_back(s.empty() ? "e" : s);
    }
  return GroupBuilder::build(mul, std::move(names), "D" + std::to_string(k), kFamilyOptions);
}

FiniteGroup quaternion() {
  // basis unit u in {1,i,j,k} and sign; index = 2*u + (negative ? 1 : 0)
  static constexpr int unit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto mul = table_from(8, [&](int x, int y) {
    const int ux = x / 2, uy = y / 2;
    int s = sign[ux][uy];
    if (x % 2) s = -s;
    if (y % 2) s = -s;
    return 2 * unit[ux][uy] + (s < 0 ? 1 : 0);
  });
  return GroupBuilder::build(mul, {"e", "-1", "i", "-i", "j", "-j", "k", "-k"},
                             "Q8", {});
}

int parse_positive(const std::string& digits, const std::string& spec) {
  long v = 0;
  try {
    v = std::stol(digits);
  } catch (const std::exception&) {
    throw PreconditionError("malformed group spec '" + spec + "'");
  }
  if (v < 1) throw PreconditionError("order parameter < 1 in '" + spec + "'");
  if (v > 100000) throw PreconditionError("order parameter too large in '" + spec + "'");
  return static_cast<int>(v);
}

}  // namespace

FiniteGroup GroupBuilder::build(const std::vector<std::vector<int>>& mul,
                                std::vector<std::string> names,
                                std::string label, const TableOptions& opts) {
  const Index n = static_cast<Index>(mul.size());
  if (n < 1) throw PreconditionError("empty multiplication table");
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(mul[i].size()) != n)
      throw PreconditionError("row " + std::to_string(i) + " has length " +
                              std::to_string(mul[i].size()) + ", expected " +
                              std::to_string(n));
    for (int v : mul[i])
      if (v < 0 || v >= n)
        throw PreconditionError("entry " + std::to_string(v) + " in row " +
                                std::to_string(i) + " is out of range");
  }
  for (Index i = 0; i < n; ++i)
    if (mul[0][i] != i || mul[i][0] != i)
      throw PreconditionError("identity law fails: element 0 is not a two-sided identity (at " +
                              std::to_string(i) + ")");
  for (Index i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (Index j = 0; j < n; ++j) {
      if (row[mul[i][j]])
        throw PreconditionError("row " + std::to_string(i) + " is not a permutation");
      row[mul[i][j]] = true;
      if (col[mul[j][i]])
        throw PreconditionError("column " + std::to_string(i) + " is not a permutation");
      col[mul[j][i]] = true;
    }
  }
  if (n <= opts.assoc_cap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
            throw PreconditionError("associativity fails at " + describe(a, b, c));
  } else if (!opts.allow_unchecked_associativity) {
    throw CapExceeded("associativity check for order " + std::to_string(n) +
                      " exceeds cap " + std::to_string(opts.assoc_cap));
  }

  FiniteGroup g;
  g.order_ = n;
  g.mul_.reserve(n * n);
  for (const auto& row : mul) g.mul_.insert(g.mul_.end(), row.begin(), row.end());
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == 0) {
        if (mul[b][a] != 0)
          throw PreconditionError("element " + std::to_string(a) +
                                  " lacks a two-sided inverse");
        g.inv_[a] = b;
      }
  for (int a = 0; a < n; ++a)
    if (g.inv_[a] < 0)
      throw PreconditionError("element " + std::to_string(a) + " lacks an inverse");

  if (names.empty()) {
    names.resize(n);
    names[0] = "e";
    for (int a = 1; a < n; ++a) names[a] = "x" + std::to_string(a);
  }
  if (static_cast<Index>(names.size()) != n)
    throw PreconditionError("expected " + std::to_string(n) + " element names");
  if (names[0] != "e") throw PreconditionError("element 0 must be named \"e\"");
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("element names must be distinct");
  g.names_ = std::move(names);
  g.label_ = std::move(label);
  return g;
}

std::optional<FiniteGroup::Element> FiniteGroup::find(const std::string& s) const {
  for (Index i = 0; i < order_; ++i)
    if (names_[i] == s) return static_cast<Element>(i);
  if (!s.empty() && std::all_of(s.begin(), s.end(), ::isdigit)) {
    const long v = std::stol(s);
    if (v < order_) return static_cast<Element>(v);
  }
  return std::nullopt;
}

Index FiniteGroup::element_order(Element a) const {
  Index k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup from_family(const std::string& spec) {
  static const std::regex cyclic(R"(C(\d+)(xC(\d+))*)");
  static const std::regex dihedral_re(R"(D(\d+))");
  std::smatch m;
  if (std::regex_match(spec, cyclic)) {
    std::vector<int> d;
    std::size_t pos = 0;
    while (pos < spec.size()) {
      const std::size_t start = spec.find('C', pos) + 1;
      std::size_t end = spec.find('x', start);
      if (end == std::string::npos) end = spec.size();
      d.push_back(parse_positive(spec.substr(start, end - start), spec));
      pos = end;
    }
    Index n = 1;
    for (int di : d) {
      n *= di;
      if (n > 100000) throw PreconditionError("group order too large in '" + spec + "'");
    }
    return GroupBuilder::with_family(cyclic_product(d, spec), spec, d);
  }
  if (std::regex_match(spec, m, dihedral_re)) {
    const int k = parse_positive(m[1].str(), spec);
    return GroupBuilder::with_family(dihedral(k), spec, std::nullopt);
  }
  if (spec == "S3" || spec == "S4")
    return GroupBuilder::with_family(symmetric(spec[1] - '0'), spec, std::nullopt);
  if (spec == "Q8") return GroupBuilder::with_family(quaternion(), spec, std::nullopt);
  throw PreconditionError("unrecognized group family '" + spec + "'");
}

FiniteGroup from_table(const std::vector<std::vector<int>>& mul,
                       std::vector<std::string> names, std::string label,
                       const TableOptions& opts) {
  return GroupBuilder::build(mul, std::move(names), std::move(label), opts);
}

// ---------------------------------------------------------------------------
// Abelian decomposition

namespace {

using Element = FiniteGroup::Element;

Element power(const FiniteGroup& g, Element a, Index k) {
  Element r = 0;
  for (Index i = 0; i < k; ++i) r = g.mul(r, a);
  return r;
}

// Chooses generators of a p-group P = <members> as a direct sum of cyclic
// subgroups. Depth-first over elements in descending order, requiring each
// new cyclic subgroup to meet the span so far trivially.
bool split_p_group(const FiniteGroup& g, const std::vector<Element>& members,
                   std::vector<bool>& span, Index span_size,
                   std::vector<Element>& gens) {
  if (span_size == static_cast<Index>(members.size())) return true;
  for (Element x : members) {
    if (span[x]) continue;
    const Index ord = g.element_order(x);
    bool meets = false;
    for (Element y = x; y != 0; y = g.mul(y, x))
      if (span[y]) {
        meets = true;
        break;
      }
    if (meets) continue;
    std::vector<Element> added;
    std::vector<Element> current;
    for (Element h = 0; h < g.order(); ++h)
      if (span[h]) current.push_back(h);
    for (Element h : current)
      for (Element y = x; y != 0; y = g.mul(y, x)) {
        const Element z = g.mul(h, y);
        if (!span[z]) {
          span[z] = true;
          added.push_back(z);
        }
      }
    gens.push_back(x);
    if (split_p_group(g, members, span, span_size * ord, gens)) return true;
    gens.pop_back();
    for (Element z : added) span[z] = false;
  }
  return false;
}

std::vector<Index> prime_factors(Index n) {
  std::vector<Index> ps;
  for (Index p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_power_of(Index v, Index p) {
  while (v % p == 0) v /= p;
  return v == 1;
}

}  // namespace

std::optional<AbelianStructure> abelian_structure(const FiniteGroup& g) {
  if (!g.is_abelian()) return std::nullopt;
  const Index n = g.order();

  std::vector<int> factors;
  std::vector<Element> gens;
  if (g.cyclic_factors()) {
    // Mixed-radix layout: generator j is the unit vector in digit j.
    const auto& d = *g.cyclic_factors();
    Index stride = n;
    for (int dj : d) {
      stride /= dj;
      if (dj >= 2) {
        factors.push_back(dj);
        gens.push_back(static_cast<Element>(stride));
      }
    }
  } else {
    std::vector<std::vector<Index>> orders;
    std::vector<std::vector<Element>> pgens;
    for (Index p : prime_factors(n)) {
      std::vector<Element> members;
      for (Element a = 0; a < n; ++a)
        if (is_power_of(g.element_order(a), p)) members.push_back(a);
      std::stable_sort(members.begin(), members.end(), [&](Element a, Element b) {
        return g.element_order(a) > g.element_order(b);
      });
      std::vector<bool> span(n, false);
      span[0] = true;
      std::vector<Element> chosen;
      if (!split_p_group(g, members, span, 1, chosen))
        throw std::logic_error("abelian p-group failed to split");
      std::stable_sort(chosen.begin(), chosen.end(), [&](Element a, Element b) {
        return g.element_order(a) > g.element_order(b);
      });
      std::vector<Index> ords;
      for (Element x : chosen) ords.push_back(g.element_order(x));
      orders.push_back(std::move(ords));
      pgens.push_back(std::move(chosen));
    }
    // Combine primary components into invariant factors: the i-th largest
    // cyclic factor of every Sylow subgroup multiplies into one factor.
    std::size_t r = 0;
    for (const auto& o : orders) r = std::max(r, o.size());
    for (std::size_t i = 0; i < r; ++i) {
      Index d = 1;
      Element x = 0;
      for (std::size_t q = 0; q < orders.size(); ++q)
        if (i < orders[q].size()) {
          d *= orders[q][i];
          x = g.mul(x, pgens[q][i]);
        }
      factors.push_back(static_cast<int>(d));
      gens.push_back(x);
    }
    std::reverse(factors.begin(), factors.end());
    std::reverse(gens.begin(), gens.end());
  }

  AbelianStructure s;
  s.factors = factors;
  s.exponents.assign(n, {});
  s.from_code.assign(n, -1);
  const std::size_t r = factors.size();
  std::vector<int> a(r, 0);
  for (Index code = 0; code < n; ++code) {
    Element x = 0;
    for (std::size_t j = 0; j < r; ++j) x = g.mul(x, power(g, gens[j], a[j]));
    if (!s.exponents[x].empty() || (x == 0 && code != 0))
      throw std::logic_error("abelian coordinates are not bijective");
    s.exponents[x] = a;
    s.from_code[code] = x;
    for (Index j = static_cast<Index>(r) - 1; j >= 0; --j) {
      if (++a[j] < factors[j]) break;
      a[j] = 0;
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto& ex = s.exponents[x];
      const auto& ey = s.exponents[y];
      const auto& exy = s.exponents[g.mul(x, y)];
      for (std::size_t j = 0; j < r; ++j)
        if ((ex[j] + ey[j]) % factors[j] != exy[j])
          throw std::logic_error("abelian coordinates are not a homomorphism");
    }
  return s;
}

bool AbelianCharacter::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int a) { return a == 0; });
}

AbelianCharacter make_character(const AbelianStructure& s, std::vector<int> exponents) {
  if (exponents.size() != s.factors.size())
    throw std::invalid_argument("character arity does not match the factor list");
  for (std::size_t j = 0; j < exponents.size(); ++j)
    if (exponents[j] < 0 || exponents[j] >= s.factors[j])
      throw std::invalid_argument("character exponent out of range");
  return AbelianCharacter{std::move(exponents)};
}

std::vector<AbelianCharacter> all_characters(const AbelianStructure& s) {
  std::vector<AbelianCharacter> out;
  out.reserve(s.order());
  for (Index code = 0; code < s.order(); ++code)
    out.push_back(AbelianCharacter{s.exponents[s.from_code[code]]});
  return out;
}

bool character_block_trivial(const AbelianStructure& s,
                             std::span<const AbelianCharacter> chars) {
  std::vector<long> sum(s.factors.size(), 0);
  for (const auto& c : chars) {
    if (c.exponents.size() != s.factors.size())
      throw std::invalid_argument("character arity does not match the factor list");
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += c.exponents[j];
  }
  for (std::size_t j = 0; j < sum.size(); ++j)
    if (sum[j] % s.factors[j] != 0) return false;
  return true;
}

}  // namespace trid
