#pragma once

#include <span>
#include <vector>

#include "trid/config.hpp"
#include "trid/graph.hpp"
#include "trid/group.hpp"

namespace trid {

/// Mixed-radix codec between m-tuples over G and integers in [0, n^m); the
/// first coordinate is most significant, so code order is lexicographic.
class TupleCodec {
 public:
  TupleCodec(Index n, Index m);

  Index n() const { return n_; }
  Index m() const { return m_; }
  Index size() const { return size_; }

  Index encode(std::span<const int> coords) const;
  std::vector<int> decode(Index code) const;
  /// Coordinate at 0-based position `pos`.
  int digit(Index code, Index pos) const { return static_cast<int>(code / stride_[pos] % n_); }
  Index stride(Index pos) const { return stride_[pos]; }

 private:
  Index n_, m_, size_;
  std::vector<Index> stride_;
};

/// A vertex of G^m: an m-tuple of element indices with its mixed-radix code.
struct TupleVertex {
  std::vector<int> coords;
  Index code = 0;

  static TupleVertex from_coords(const TupleCodec& codec, std::vector<int> coords);
  static TupleVertex from_code(const TupleCodec& codec, Index code);
  friend bool operator==(const TupleVertex& a, const TupleVertex& b) {
    return a.coords == b.coords;
  }
};

/// x_[k,l): x on positions k..l-1 (1-based), identity elsewhere.
struct IntervalGenerator {
  int x = 1;
  int k = 1;
  int l = 2;

  std::vector<int> realize(Index m) const;
};

/// Componentwise product a*b in G^m.
std::vector<int> tuple_mul(const FiniteGroup& g, std::span<const int> a,
                           std::span<const int> b);

/// Left multiplication x_[k,l) * t, i.e. t with positions k..l-1 replaced by
/// x*t_j.
std::vector<int> apply_interval(const FiniteGroup& g, int x, int k, int l,
                                std::span<const int> t);

/// The symmetric set S: all realizations of interval generators, ordered by
/// (k, l) lexicographically and then by x. Size C(m+1,2)(n-1).
std::vector<TupleVertex> symmetric_set(const FiniteGroup& g, Index m);

/// G_m(G) = Cay(G^m, S). Vertices follow TupleCodec order. When G is abelian
/// the result carries a ScriptGraphTag.
Graph build_script_graph(const FiniteGroup& g, Index m, const Caps& caps = {});

struct CayleyGraph {
  Graph graph;
  bool normal = false;  // s in S  =>  h s h^-1 in S for all h
};

/// Cay(G, S): g ~ h iff h g^-1 in S. S must be symmetric and avoid e.
CayleyGraph build_cayley(const FiniteGroup& g, std::span<const int> s);

/// {x_[k,l) * base | x in G}: an n-clique through base.
std::vector<Index> interval_clique(const FiniteGroup& g, Index m,
                                   const TupleVertex& base, int k, int l);

/// {e} together with x_[1,j) for j = 2..m+1: an (m+1)-clique.
std::vector<Index> chain_clique(const FiniteGroup& g, Index m, int x);

}  // namespace trid
