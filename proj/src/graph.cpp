#include "trid/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <string>

namespace trid {

Graph::Graph(std::vector<std::vector<Vertex>> adjacency) : adj_(std::move(adjacency)) {
  if (!adj_.empty()) {
    const Index d = degree(0);
    bool regular = true;
    for (Index u = 1; u < vertex_count() && regular; ++u) regular = degree(u) == d;
    if (regular) regular_degree_ = d;
  }
}

Graph Graph::from_edges(Index v, std::span<const std::pair<Index, Index>> edges) {
  if (v < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::vector<Vertex>> adj(v);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= v || b >= v)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    adj[a].push_back(static_cast<Vertex>(b));
    adj[b].push_back(static_cast<Vertex>(a));
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return Graph(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  const Index v = static_cast<Index>(adjacency.size());
  for (auto& row : adjacency) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::invalid_argument("duplicate neighbour");
  }
  for (Index u = 0; u < v; ++u)
    for (Vertex w : adjacency[u]) {
      if (w < 0 || w >= v) throw std::invalid_argument("neighbour out of range");
      if (w == u) throw std::invalid_argument("loops are not allowed");
      if (!std::binary_search(adjacency[w].begin(), adjacency[w].end(),
                              static_cast<Vertex>(u)))
        throw std::invalid_argument("adjacency is not symmetric");
    }
  return Graph(std::move(adjacency));
}

Index Graph::edge_count() const {
  Index total = 0;
  for (const auto& row : adj_) total += static_cast<Index>(row.size());
  return total / 2;
}

bool Graph::has_edge(Index u, Index w) const {
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), static_cast<Vertex>(w));
}

bool Graph::is_connected() const {
  const Index v = vertex_count();
  if (v <= 1) return true;
  std::vector<bool> seen(v, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  Index reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == v;
}

std::vector<std::pair<Index, Index>> Graph::edges() const {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(edge_count());
  for (Index u = 0; u < vertex_count(); ++u)
    for (Vertex w : adj_[u])
      if (w > u) out.emplace_back(u, w);
  return out;
}

Graph complement(const Graph& g) {
  const Index v = g.vertex_count();
  std::vector<std::vector<Graph::Vertex>> adj(v);
  for (Index u = 0; u < v; ++u) {
    auto nb = g.neighbors(u);
    auto it = nb.begin();
    for (Index w = 0; w < v; ++w) {
      while (it != nb.end() && *it < w) ++it;
      if (w != u && (it == nb.end() || *it != w))
        adj[u].push_back(static_cast<Graph::Vertex>(w));
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

IntMatrix distance_matrix(const Graph& g) {
  const Index v = g.vertex_count();
  IntMatrix d = IntMatrix::Constant(v, v, -1);
  std::vector<Graph::Vertex> queue(v);
  for (Index s = 0; s < v; ++s) {
    std::size_t head = 0, tail = 0;
    queue[tail++] = static_cast<Graph::Vertex>(s);
    d(s, s) = 0;
    while (head < tail) {
      const Graph::Vertex u = queue[head++];
      for (Graph::Vertex w : g.neighbors(u))
        if (d(s, w) < 0) {
          d(s, w) = d(s, u) + 1;
          queue[tail++] = w;
        }
    }
  }
  return d;
}

std::vector<IntMatrix> distance_partition(const Graph& g) {
  const Index v = g.vertex_count();
  const IntMatrix d = distance_matrix(g);
  if ((d.array() < 0).any())
    throw PreconditionError("distance partition requires a connected graph");
  const Index diameter = v == 0 ? 0 : d.maxCoeff();
  std::vector<IntMatrix> classes;
  for (Index i = 1; i <= diameter; ++i)
    classes.push_back((d.array() == i).cast<std::int64_t>().matrix());
  return classes;
}

bool is_clique(const Graph& g, std::span<const Index> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || !g.has_edge(vertices[i], vertices[j]))
        return false;
  return true;
}

namespace graphs {

Graph complete(Index k) {
  std::vector<std::pair<Index, Index>> e;
  for (Index a = 0; a < k; ++a)
    for (Index b = a + 1; b < k; ++b) e.emplace_back(a, b);
  return Graph::from_edges(k, e);
}

Graph cycle(Index k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<Index, Index>> e;
  for (Index a = 0; a < k; ++a) e.emplace_back(a, (a + 1) % k);
  return Graph::from_edges(k, e);
}

Graph path(Index k) {
  std::vector<std::pair<Index, Index>> e;
  for (Index a = 0; a + 1 < k; ++a) e.emplace_back(a, a + 1);
  return Graph::from_edges(k, e);
}

Graph petersen() {
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, e);
}

Graph complete_bipartite(Index a, Index b) {
  std::vector<std::pair<Index, Index>> e;
  for (Index x = 0; x < a; ++x)
    for (Index y = 0; y < b; ++y) e.emplace_back(x, a + y);
  return Graph::from_edges(a + b, e);
}

Graph empty(Index v) { return Graph::from_edges(v, {}); }

Graph random_regular(Index v, Index d, std::uint64_t seed) {
  if (v * d % 2 != 0 || d >= v)
    throw std::invalid_argument("no simple d-regular graph with these parameters");
  // Pair stubs one at a time, drawing only pairs that keep the graph simple,
  // and restart when the remaining stubs admit no such pair.
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Index> stubs;
    for (Index u = 0; u < v; ++u)
      for (Index i = 0; i < d; ++i) stubs.push_back(u);
    std::vector<std::vector<bool>> adjacent(v, std::vector<bool>(v, false));
    std::vector<std::pair<Index, Index>> e;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      std::vector<std::pair<std::size_t, std::size_t>> valid;
      for (std::size_t i = 0; i < stubs.size(); ++i)
        for (std::size_t j = i + 1; j < stubs.size(); ++j)
          if (stubs[i] != stubs[j] && !adjacent[stubs[i]][stubs[j]]) valid.emplace_back(i, j);
      if (valid.empty()) {
        stuck = true;
        break;
      }
      const auto [i, j] = valid[std::uniform_int_distribution<std::size_t>(0, valid.size() - 1)(rng)];
      const Index a = stubs[i], b = stubs[j];
      adjacent[a][b] = adjacent[b][a] = true;
      e.emplace_back(a, b);
      stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(j));
      stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(i));
    }
    if (!stuck) return Graph::from_edges(v, e);
  }
  throw std::runtime_error("random_regular: pairing kept getting stuck");
}

}  // namespace graphs

void write_edge_list(std::ostream& os, const Graph& g) {
  os << "# vertices " << g.vertex_count() << "\n";
  for (auto [u, w] : g.edges()) os << u << " " << w << "\n";
}

Graph read_edge_list(std::istream& is) {
  std::vector<std::pair<Index, Index>> e;
  Index declared = -1, max_vertex = -1;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string word;
      if (hs >> word && word == "vertices") hs >> declared;
      continue;
    }
    std::istringstream ls(line);
    Index a, b;
    if (!(ls >> a >> b)) throw PreconditionError("malformed edge line: " + line);
    e.emplace_back(a, b);
    max_vertex = std::max({max_vertex, a, b});
  }
  const Index v = declared >= 0 ? declared : max_vertex + 1;
  if (max_vertex >= v) throw PreconditionError("edge endpoint exceeds declared vertex count");
  return Graph::from_edges(v, e);
}

}  // namespace trid
