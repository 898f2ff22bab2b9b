#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

#include "trid/group.hpp"
#include "trid/types.hpp"

namespace trid {

/// Provenance of a graph built as G_m(G) over an abelian group; lets
/// consumers use the exact character spectrum instead of a numeric one.
struct ScriptGraphTag {
  std::shared_ptr<const AbelianStructure> abelian;
  Index m = 0;
};

/// Finite simple undirected graph stored as sorted neighbour lists.
class Graph {
 public:
  using Vertex = std::int32_t;

  Graph() = default;

  /// Builds from an edge list; duplicate edges are merged, loops rejected.
  static Graph from_edges(Index v, std::span<const std::pair<Index, Index>> edges);

  /// Builds from neighbour lists, which must already be symmetric and loop
  /// free (checked).
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  Index vertex_count() const { return static_cast<Index>(adj_.size()); }
  Index edge_count() const;
  std::span<const Vertex> neighbors(Index u) const { return adj_[u]; }
  Index degree(Index u) const { return static_cast<Index>(adj_[u].size()); }
  bool has_edge(Index u, Index w) const;

  /// Common degree when every vertex has the same degree.
  std::optional<Index> degree_if_regular() const { return regular_degree_; }
  bool is_connected() const;

  const std::optional<ScriptGraphTag>& script_tag() const { return tag_; }
  void set_script_tag(ScriptGraphTag tag) { tag_ = std::move(tag); }

  template <typename Scalar = std::int64_t>
  Mat<Scalar> adjacency_matrix() const {
    const Index v = vertex_count();
    Mat<Scalar> a = Mat<Scalar>::Zero(v, v);
    for (Index u = 0; u < v; ++u)
      for (Vertex w : adj_[u]) a(u, w) = Scalar(1);
    return a;
  }

  template <typename Scalar = std::int64_t>
  Eigen::SparseMatrix<Scalar> adjacency_sparse() const {
    std::vector<Eigen::Triplet<Scalar>> t;
    t.reserve(2 * edge_count());
    for (Index u = 0; u < vertex_count(); ++u)
      for (Vertex w : adj_[u]) t.emplace_back(u, w, Scalar(1));
    Eigen::SparseMatrix<Scalar> a(vertex_count(), vertex_count());
    a.setFromTriplets(t.begin(), t.end());
    return a;
  }

  /// Unordered edges (u < w) in lexicographic order.
  std::vector<std::pair<Index, Index>> edges() const;

 private:
  explicit Graph(std::vector<std::vector<Vertex>> adjacency);

  std::vector<std::vector<Vertex>> adj_;
  std::optional<Index> regular_degree_;
  std::optional<ScriptGraphTag> tag_;
};

Graph complement(const Graph& g);

/// Distance classes A_1..A_D of a connected graph, A_i(x,y) = [d(x,y) = i].
/// Throws PreconditionError for disconnected input.
std::vector<IntMatrix> distance_partition(const Graph& g);

/// All-pairs BFS distances (-1 for unreachable pairs).
IntMatrix distance_matrix(const Graph& g);

/// True iff every pair of the given vertices is adjacent.
bool is_clique(const Graph& g, std::span<const Index> vertices);

namespace graphs {

Graph complete(Index k);
Graph cycle(Index k);
Graph path(Index k);
Graph petersen();
Graph complete_bipartite(Index a, Index b);
Graph empty(Index v);
/// Uniformly seeded d-regular simple graph on v vertices (configuration
/// model with rejection); deterministic for a given seed.
Graph random_regular(Index v, Index d, std::uint64_t seed);

}  // namespace graphs

/// Edge list text: optional "# vertices N" header, then one "u v" pair per
/// line, 0-based.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);

}  // namespace trid
