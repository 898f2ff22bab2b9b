#include "trid/identity_io.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace trid {

using nlohmann::ordered_json;

namespace {

constexpr std::string_view kDot = "·";
constexpr std::string_view kMinus = "−";
constexpr std::string_view kZeta = "ζ";

ordered_json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt big_from_json(const ordered_json& j, const char* what) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == digits_from ||
        s.find_first_not_of("0123456789", digits_from) != std::string::npos)
      throw PreconditionError(std::string("malformed integer for ") + what);
    return BigInt(s);
  }
  throw PreconditionError(std::string("expected an integer for ") + what);
}

int element_of(const FiniteGroup& g, const std::string& name) {
  const auto e = g.find(name);
  if (!e) throw PreconditionError("unknown element '" + name + "' in group " + g.label());
  return *e;
}

ordered_json names_of(const FiniteGroup& g, std::span<const int> coords) {
  ordered_json out = ordered_json::array();
  for (int c : coords) out.push_back(g.name(c));
  return out;
}

std::vector<int> coords_of(const FiniteGroup& g, const ordered_json& j, Index m, const char* what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != m)
    throw PreconditionError(std::string(what) + " must list exactly m elements");
  std::vector<int> out;
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      const auto v = e.get<std::int64_t>();
      if (v < 0 || v >= g.order()) throw PreconditionError("element index out of range");
      out.push_back(static_cast<int>(v));
    } else if (e.is_string()) {
      out.push_back(element_of(g, e.get<std::string>()));
    } else {
      throw PreconditionError(std::string(what) + " entries must be names or indices");
    }
  }
  return out;
}

ordered_json table_json(const FiniteGroup& g) {
  ordered_json doc;
  doc["order"] = g.order();
  ordered_json mul = ordered_json::array();
  for (Index i = 0; i < g.order(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index j = 0; j < g.order(); ++j) row.push_back(g.mul(static_cast<int>(i), static_cast<int>(j)));
    mul.push_back(std::move(row));
  }
  doc["mul"] = std::move(mul);
  doc["names"] = g.element_names();
  doc["label"] = g.label();
  return doc;
}

FiniteGroup group_from_json(const ordered_json& doc, const TableOptions& opts) {
  if (doc.is_string()) return from_family(doc.get<std::string>());
  if (!doc.is_object() || !doc.contains("mul"))
    throw PreconditionError("group document needs a \"mul\" table");
  std::vector<std::vector<int>> mul;
  try {
    mul = doc.at("mul").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw PreconditionError("\"mul\" must be a list of integer rows");
  }
  if (doc.contains("order") && doc.at("order").get<Index>() != static_cast<Index>(mul.size()))
    throw PreconditionError("\"order\" does not match the table size");
  std::vector<std::string> names;
  if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
  const std::string label = doc.value("label", std::string("table"));
  return from_table(mul, std::move(names), label, opts);
}

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("malformed JSON: ") + e.what());
  }
}

std::string zeta(const FiniteGroup& g, Index pos, int element) {
  std::string s(kZeta);
  s += "_{" + std::to_string(pos) + "," + g.name(element) + "}";
  return s;
}

std::string monomial(const FiniteGroup& g, std::span<const int> coords, int k = 0, int l = 0) {
  std::string s;
  for (Index p = 1; p <= static_cast<Index>(coords.size()); ++p) {
    if (p == k) s += "tr[";
    s += zeta(g, p, coords[p - 1]);
    if (p == l - 1) s += "]";
  }
  return s;
}

std::string coefficient(const BigInt& magnitude) {
  return magnitude == 1 ? std::string() : magnitude.str() + std::string(kDot);
}

// Cursor over the text rendering.
class TextParser {
 public:
  TextParser(std::string_view s, const FiniteGroup& g, Index m) : s_(s), g_(g), m_(m) {}

  TraceIdentity parse() {
    TraceIdentity id;
    id.upsilon = coefficient_or_one();
    const auto head = term_monomial();
    if (head.k != 0) fail("left-hand side must not contain a trace");
    const TupleCodec codec(g_.order(), m_);
    id.target = TupleVertex::from_coords(codec, head.coords);
    skip_ws();
    if (!eat("=")) fail("expected '='");
    skip_ws();
    if (eat("0")) {
      skip_ws();
      if (pos_ != s_.size()) fail("trailing text after '0'");
      return id;
    }
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (eat(kMinus) || eat("-"))
        sign = -1;
      else if (!eat("+") && !first)
        fail("expected '+' or '-' between terms");
      skip_ws();
      BigInt gamma = coefficient_or_one() * sign;
      const auto t = term_monomial();
      if (t.k == 0) fail("right-hand term without a trace");
      id.terms.push_back({std::move(gamma), RowIndex{t.k, t.l, TupleVertex::from_coords(codec, t.coords)}});
      first = false;
    }
    return id;
  }

 private:
  struct Term {
    std::vector<int> coords;
    int k = 0, l = 0;
  };

  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("identity text, offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  BigInt coefficient_or_one() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) return BigInt(1);
    BigInt v(std::string(s_.substr(start, pos_ - start)));
    if (!eat(kDot) && !eat("*")) fail("expected '·' after a coefficient");
    return v;
  }

  Term term_monomial() {
    Term t;
    bool in_trace = false;
    while (true) {
      if (eat("tr[")) {
        if (t.k != 0) fail("more than one trace in a term");
        t.k = static_cast<int>(t.coords.size()) + 1;
        in_trace = true;
        continue;
      }
      if (in_trace && eat("]")) {
        t.l = static_cast<int>(t.coords.size()) + 1;
        if (t.l == t.k) fail("empty trace");
        in_trace = false;
        continue;
      }
      if (!eat(kZeta)) break;
      if (!eat("_{")) fail("expected '_{'");
      const std::size_t comma = s_.find(',', pos_);
      const std::size_t close = s_.find('}', pos_);
      if (comma == std::string_view::npos || close == std::string_view::npos || comma > close)
        fail("malformed variable");
      const std::string index(s_.substr(pos_, comma - pos_));
      if (index != std::to_string(t.coords.size() + 1)) fail("variables must be numbered 1..m in order");
      const std::string name(s_.substr(comma + 1, close - comma - 1));
      const auto e = g_.find(name);
      if (!e) fail("unknown element '" + name + "'");
      t.coords.push_back(*e);
      pos_ = close + 1;
    }
    if (in_trace) fail("unterminated trace");
    if (static_cast<Index>(t.coords.size()) != m_) fail("monomial must have degree m");
    return t;
  }

  std::string_view s_;
  const FiniteGroup& g_;
  Index m_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup parse_group_document(std::string_view text, const TableOptions& opts) {
  return group_from_json(parse_json(text), opts);
}

std::string group_document(const FiniteGroup& g) { return table_json(g).dump(2) + "\n"; }

FiniteGroup load_group(const std::string& spec, const TableOptions& opts) {
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_group_document(ss.str(), opts);
  }
  return from_family(spec);
}

std::string render_text(const TraceIdentity& id, const FiniteGroup& g) {
  std::string out = coefficient(id.upsilon) + monomial(g, id.target.coords) + " =";
  if (id.terms.empty()) return out + " 0\n";
  for (std::size_t i = 0; i < id.terms.size(); ++i) {
    const auto& t = id.terms[i];
    const bool negative = t.gamma < 0;
    if (i == 0)
      out += negative ? " " + std::string(kMinus) + " " : " ";
    else
      out += negative ? "\n  " + std::string(kMinus) + " " : "\n  + ";
    out += coefficient(negative ? BigInt(-t.gamma) : t.gamma);
    out += monomial(g, t.row.rep.coords, t.row.k, t.row.l);
  }
  return out + "\n";
}

TraceIdentity parse_text(std::string_view text, const FiniteGroup& g, Index m) {
  return TextParser(text, g, m).parse();
}

std::string render_structured(const TraceIdentity& id, const FiniteGroup& g) {
  ordered_json doc;
  if (g.family())
    doc["group"] = *g.family();
  else
    doc["group"] = table_json(g);
  doc["m"] = id.target.coords.size();
  doc["target"] = names_of(g, id.target.coords);
  doc["upsilon"] = big_to_json(id.upsilon);
  ordered_json terms = ordered_json::array();
  for (const auto& t : id.terms) {
    ordered_json j;
    j["gamma"] = big_to_json(t.gamma);
    j["k"] = t.row.k;
    j["l"] = t.row.l;
    j["rep"] = names_of(g, t.row.rep.coords);
    terms.push_back(std::move(j));
  }
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

ParsedIdentity parse_structured(std::string_view text, const TableOptions& opts) {
  const auto doc = parse_json(text);
  if (!doc.is_object()) throw PreconditionError("identity document must be an object");
  for (const char* key : {"group", "m", "target", "upsilon", "terms"})
    if (!doc.contains(key)) throw PreconditionError(std::string("identity document lacks \"") + key + "\"");

  ParsedIdentity out;
  out.group = std::make_shared<const FiniteGroup>(group_from_json(doc.at("group"), opts));
  const auto& g = *out.group;
  if (!doc.at("m").is_number_integer() || doc.at("m").get<Index>() < 1)
    throw PreconditionError("\"m\" must be a positive integer");
  out.m = doc.at("m").get<Index>();
  const TupleCodec codec(g.order(), out.m);
  out.identity.target = TupleVertex::from_coords(codec, coords_of(g, doc.at("target"), out.m, "target"));
  out.identity.upsilon = big_from_json(doc.at("upsilon"), "upsilon");
  if (!doc.at("terms").is_array()) throw PreconditionError("\"terms\" must be a list");
  for (const auto& t : doc.at("terms")) {
    if (!t.is_object() || !t.contains("gamma") || !t.contains("k") || !t.contains("l") || !t.contains("rep"))
      throw PreconditionError("each term needs gamma, k, l and rep");
    RowIndex row{t.at("k").get<int>(), t.at("l").get<int>(),
                 TupleVertex::from_coords(codec, coords_of(g, t.at("rep"), out.m, "rep"))};
    out.identity.terms.push_back({big_from_json(t.at("gamma"), "gamma"), std::move(row)});
  }
  return out;
}

std::string render_identity(const TraceIdentity& id, const FiniteGroup& g, IdentityFormat format) {
  return format == IdentityFormat::text ? render_text(id, g) : render_structured(id, g);
}

}  // namespace trid
