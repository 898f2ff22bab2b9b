#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

#include "trid/cayley.hpp"
#include "trid/config.hpp"
#include "trid/graph.hpp"
#include "trid/group.hpp"

namespace trid {

/// One trace relation a tr(b) c with the monomial split at [k, l) (1-based,
/// 1 <= k < l <= m+1). `rep` is the canonical member of the class
/// {x_[k,l) rep | x in G}: the one whose k-th coordinate is the identity.
struct RowIndex {
  int k = 1;
  int l = 2;
  TupleVertex rep;

  friend bool operator==(const RowIndex& a, const RowIndex& b) {
    return a.k == b.k && a.l == b.l && a.rep == b.rep;
  }
};

/// The 0/1 relation matrix B: C(m+1,2) n^(m-1) rows, n^m columns. Row
/// (k, l, rep) has ones exactly at the columns x_[k,l) rep, x in G.
/// Rows are ordered by (k, l) lexicographically, then by rep code.
class TraceSystem {
 public:
  TraceSystem(std::shared_ptr<const FiniteGroup> group, Index m, const Caps& caps = {});

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  Index m() const { return m_; }
  const TupleCodec& codec() const { return codec_; }

  Index row_count() const { return static_cast<Index>(rows_.size()); }
  Index col_count() const { return codec_.size(); }
  const RowIndex& row(Index r) const { return rows_[r]; }
  /// Column indices of the ones in row r, ascending.
  std::span<const Index> row_support(Index r) const {
    return {support_.data() + r * group_->order(), static_cast<std::size_t>(group_->order())};
  }

  /// Position of a relation in the row order. The monomial need not be
  /// canonical: any member of the class resolves to the same row.
  /// Throws std::out_of_range for invalid (k, l) or coordinates.
  Index row_of(int k, int l, std::span<const int> coords) const;
  Index row_of(const RowIndex& r) const { return row_of(r.k, r.l, r.rep.coords); }

  /// Canonical RowIndex for the relation a tr(b) c with abc = coords.
  RowIndex canonical(int k, int l, std::span<const int> coords) const;

  template <typename Scalar = std::int64_t>
  Eigen::SparseMatrix<Scalar> b_matrix() const {
    std::vector<Eigen::Triplet<Scalar>> t;
    t.reserve(support_.size());
    for (Index r = 0; r < row_count(); ++r)
      for (Index c : row_support(r)) t.emplace_back(r, c, Scalar(1));
    Eigen::SparseMatrix<Scalar> b(row_count(), col_count());
    b.setFromTriplets(t.begin(), t.end());
    return b;
  }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  Index m_;
  TupleCodec codec_;
  std::vector<RowIndex> rows_;
  std::vector<Index> support_;   // row_count x n, row-major
  std::vector<Index> block_of_;  // (k-1)*(m+1) + (l-1) -> block position
};

TraceSystem build_system(const FiniteGroup& g, Index m, const Caps& caps = {});

struct TraceTerm {
  BigInt gamma;
  RowIndex row;
};

/// upsilon * zeta_{1,g_1} ... zeta_{m,g_m} = sum gamma_i a_i tr(b_i) c_i.
struct TraceIdentity {
  TupleVertex target;
  BigInt upsilon;
  std::vector<TraceTerm> terms;
};

/// Row-count and column-count invariants of B: every row sums to n, every
/// column to C(m+1,2).
struct SystemShape {
  Index rows = 0;
  Index cols = 0;
  bool row_sums_ok = false;
  bool col_sums_ok = false;
};
SystemShape system_shape(const TraceSystem& ts);

/// B^T B - C(m+1,2) I == adjacency of `gr`, exactly. Throws
/// std::invalid_argument on a dimension mismatch.
bool gram_identity_check(const TraceSystem& ts, const Graph& gr);

/// Selects n^m independent rows of B in canonical order (exact rational
/// elimination), solves for the target's coefficients over that square
/// submatrix and clears denominators. Throws PreconditionError when B does
/// not have full column rank.
TraceIdentity solve_submatrix(const TraceSystem& ts, const TupleVertex& target);

/// Least upsilon > 0 with upsilon * e_target in the integer row lattice of
/// B, with a certificate read off the Hermite normal form transform (the
/// target column is ordered last). Throws PreconditionError when e_target is
/// outside the rational row space.
std::pair<BigInt, TraceIdentity> minimal_upsilon(const TraceSystem& ts,
                                                 const TupleVertex& target);

/// Expands every term into its n monomials and compares exactly with
/// upsilon * e_target; also requires n | upsilon. Throws std::out_of_range
/// for rows that do not belong to the system.
bool verify_identity(const TraceSystem& ts, const TraceIdentity& id);

/// True iff minimal_upsilon agrees across all targets (at least two).
bool upsilon_invariance(const TraceSystem& ts, std::span<const TupleVertex> targets);

/// log2 of the Hadamard bound (sqrt n)^(n^n), i.e. (n^n / 2) log2 n.
double hadamard_log_bound(Index n);

}  // namespace trid
