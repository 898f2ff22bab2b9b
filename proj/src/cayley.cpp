#include "trid/cayley.hpp"

#include <algorithm>
#include <memory>

namespace trid {

TupleCodec::TupleCodec(Index n, Index m) : n_(n), m_(m), stride_(m) {
  if (n < 1 || m < 1) throw std::invalid_argument("TupleCodec needs n >= 1, m >= 1");
  size_ = checked_pow(n, m);
  if (size_ < 0) throw CapExceeded("n^m overflows");
  Index s = 1;
  for (Index p = m - 1; p >= 0; --p) {
    stride_[p] = s;
    s *= n;
  }
}

Index TupleCodec::encode(std::span<const int> coords) const {
  if (static_cast<Index>(coords.size()) != m_)
    throw std::invalid_argument("tuple has wrong length");
  Index code = 0;
  for (int c : coords) {
    if (c < 0 || c >= n_) throw std::invalid_argument("tuple coordinate out of range");
    code = code * n_ + c;
  }
  return code;
}

std::vector<int> TupleCodec::decode(Index code) const {
  if (code < 0 || code >= size_) throw std::invalid_argument("tuple code out of range");
  std::vector<int> out(m_);
  for (Index p = m_ - 1; p >= 0; --p) {
    out[p] = static_cast<int>(code % n_);
    code /= n_;
  }
  return out;
}

TupleVertex TupleVertex::from_coords(const TupleCodec& codec, std::vector<int> coords) {
  const Index code = codec.encode(coords);
  return TupleVertex{std::move(coords), code};
}

TupleVertex TupleVertex::from_code(const TupleCodec& codec, Index code) {
  return TupleVertex{codec.decode(code), code};
}

std::vector<int> IntervalGenerator::realize(Index m) const {
  if (k < 1 || k >= l || l > m + 1) throw std::invalid_argument("interval out of range");
  std::vector<int> t(m, 0);
  for (int j = k; j < l; ++j) t[j - 1] = x;
  return t;
}

std::vector<int> tuple_mul(const FiniteGroup& g, std::span<const int> a,
                           std::span<const int> b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = g.mul(a[i], b[i]);
  return out;
}

std::vector<int> apply_interval(const FiniteGroup& g, int x, int k, int l,
                                std::span<const int> t) {
  std::vector<int> out(t.begin(), t.end());
  for (int j = k; j < l; ++j) out[j - 1] = g.mul(x, out[j - 1]);
  return out;
}

std::vector<TupleVertex> symmetric_set(const FiniteGroup& g, Index m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const TupleCodec codec(g.order(), m);
  std::vector<TupleVertex> s;
  s.reserve(interval_count(m) * (g.order() - 1));
  for (int k = 1; k <= m; ++k)
    for (int l = k + 1; l <= m + 1; ++l)
      for (int x = 1; x < g.order(); ++x)
        s.push_back(TupleVertex::from_coords(codec, IntervalGenerator{x, k, l}.realize(m)));
  return s;
}

Graph build_script_graph(const FiniteGroup& g, Index m, const Caps& caps) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const Index n = g.order();
  const Index v = checked_pow(n, m);
  require_within(v, caps.vertex_cap, "vertex count n^m");
  const TupleCodec codec(n, m);

  // Left multiplication by x_[k,l) changes digits k-1..l-2 only, so the
  // neighbour code is code + sum_j (x*t_j - t_j) * stride_j.
  std::vector<std::vector<Graph::Vertex>> adj(v);
  std::vector<int> t(m);
  for (Index code = 0; code < v; ++code) {
    for (Index p = 0; p < m; ++p) t[p] = codec.digit(code, p);
    auto& row = adj[code];
    row.reserve(interval_count(m) * (n - 1));
    for (int k = 1; k <= m; ++k)
      for (int l = k + 1; l <= m + 1; ++l)
        for (int x = 1; x < n; ++x) {
          Index w = code;
          for (int j = k; j < l; ++j)
            w += (static_cast<Index>(g.mul(x, t[j - 1])) - t[j - 1]) * codec.stride(j - 1);
          row.push_back(static_cast<Graph::Vertex>(w));
        }
    std::sort(row.begin(), row.end());
  }
  Graph graph = Graph::from_adjacency(std::move(adj));
  if (auto s = abelian_structure(g))
    graph.set_script_tag({std::make_shared<const AbelianStructure>(std::move(*s)), m});
  return graph;
}

CayleyGraph build_cayley(const FiniteGroup& g, std::span<const int> s) {
  const Index n = g.order();
  std::vector<bool> in(n, false);
  for (int x : s) {
    if (x < 0 || x >= n) throw PreconditionError("connection set element out of range");
    if (x == 0) throw PreconditionError("connection set contains the identity");
    in[x] = true;
  }
  for (int x : s)
    if (!in[g.inv(x)]) throw PreconditionError("connection set is not symmetric");

  bool normal = true;
  for (int x : s)
    for (int h = 0; h < n && normal; ++h)
      normal = in[g.mul(g.mul(h, x), g.inv(h))];

  std::vector<std::vector<Graph::Vertex>> adj(n);
  for (int a = 0; a < n; ++a) {
    for (int x = 1; x < n; ++x)
      if (in[x]) adj[a].push_back(g.mul(x, a));
    std::sort(adj[a].begin(), adj[a].end());
  }
  return {Graph::from_adjacency(std::move(adj)), normal};
}

std::vector<Index> interval_clique(const FiniteGroup& g, Index m,
                                   const TupleVertex& base, int k, int l) {
  if (k < 1 || k >= l || l > m + 1) throw std::invalid_argument("interval out of range");
  const TupleCodec codec(g.order(), m);
  std::vector<Index> out;
  for (int x = 0; x < g.order(); ++x)
    out.push_back(codec.encode(apply_interval(g, x, k, l, base.coords)));
  return out;
}

std::vector<Index> chain_clique(const FiniteGroup& g, Index m, int x) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (x <= 0 || x >= g.order())
    throw PreconditionError("chain clique needs a non-identity element");
  const TupleCodec codec(g.order(), m);
  std::vector<Index> out{0};
  for (int j = 2; j <= m + 1; ++j)
    out.push_back(codec.encode(IntervalGenerator{x, 1, j}.realize(m)));
  return out;
}

}  // namespace trid
