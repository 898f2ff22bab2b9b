#pragma once

// Exact linear algebra over integers and rationals. Everything here is
// generic in the scalar; the library instantiates it with BigInt and
// Rational (and tests with plain 64-bit integers where entries stay small).

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "trid/types.hpp"

namespace trid {

namespace detail {

template <typename Scalar>
bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

}  // namespace detail

/// Leading principal minors det(A[0..k, 0..k]) for k = 0.. by fraction-free
/// (Bareiss) elimination without pivoting. Elimination stops after the first
/// minor that is not positive when `stop_at_nonpositive` is set, and always
/// after a zero minor (no pivoting is possible past it).
template <typename Scalar>
std::vector<Scalar> leading_principal_minors(Mat<Scalar> a, bool stop_at_nonpositive = false) {
  const Index n = a.rows();
  std::vector<Scalar> minors;
  minors.reserve(n);
  Scalar prev(1);
  for (Index k = 0; k < n; ++k) {
    const Scalar pivot = a(k, k);
    minors.push_back(pivot);
    if (detail::is_zero(pivot) || (stop_at_nonpositive && pivot < Scalar(0))) break;
    // column-major storage: walk down columns
    for (Index j = k + 1; j < n; ++j) {
      for (Index i = k + 1; i < n; ++i) {
        if constexpr (std::is_same_v<Scalar, BigInt>) {
          // in place, no temporaries; the division is exact
          mpz_ptr x = a(i, j).backend().data();
          mpz_mul(x, x, pivot.backend().data());
          mpz_submul(x, a(i, k).backend().data(), a(k, j).backend().data());
          mpz_divexact(x, x, prev.backend().data());
        } else {
          a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;
        }
      }
    }
    prev = pivot;
  }
  return minors;
}

/// Sylvester's criterion, decided exactly.
template <typename Scalar>
bool is_positive_definite(const Mat<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  const auto minors = leading_principal_minors(a, /*stop_at_nonpositive=*/true);
  if (static_cast<Index>(minors.size()) != a.rows()) return false;
  for (const auto& m : minors)
    if (!(m > Scalar(0))) return false;
  return true;
}

/// Determinant by Bareiss elimination with row pivoting.
template <typename Scalar>
Scalar bareiss_determinant(Mat<Scalar> a) {
  const Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("matrix must be square");
  Scalar prev(1);
  bool negate = false;
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && detail::is_zero(a(p, k))) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      a.row(p).swap(a.row(k));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return negate ? Scalar(-prev) : prev;
}

/// Solves a x = b over a field by Gaussian elimination; the pivot in each
/// column is the first nonzero entry in row order. Returns nullopt when a is
/// singular.
template <typename Field>
std::optional<Vec<Field>> solve_linear(Mat<Field> a, Vec<Field> b) {
  const Index n = a.rows();
  if (n != a.cols() || n != b.size()) throw std::invalid_argument("dimension mismatch");
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && detail::is_zero(a(p, k))) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      a.row(p).swap(a.row(k));
      std::swap(b(p), b(k));
    }
    for (Index i = k + 1; i < n; ++i) {
      if (detail::is_zero(a(i, k))) continue;
      const Field f = a(i, k) / a(k, k);
      for (Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b(i) -= f * b(k);
    }
  }
  Vec<Field> x(n);
  for (Index i = n - 1; i >= 0; --i) {
    Field s = b(i);
    for (Index j = i + 1; j < n; ++j) s -= a(i, j) * x(j);
    x(i) = s / a(i, i);
  }
  return x;
}

/// Incrementally maintained reduced row echelon basis over a field; used to
/// pick linearly independent rows in a fixed order.
template <typename Field>
class RowBasis {
 public:
  explicit RowBasis(Index cols) : cols_(cols) {}

  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Adds the row if it is independent of the basis; returns whether it was.
  bool add(Vec<Field> row) {
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const Index p = pivots_[b];
      if (detail::is_zero(row(p))) continue;
      const Field f = row(p);
      for (Index j = p; j < cols_; ++j)
        if (!detail::is_zero(rows_[b](j))) row(j) -= f * rows_[b](j);
    }
    Index p = 0;
    while (p < cols_ && detail::is_zero(row(p))) ++p;
    if (p == cols_) return false;
    const Field inv = Field(1) / row(p);
    for (Index j = p; j < cols_; ++j) row(j) *= inv;
    // keep the basis reduced so later rows need a single pass
    for (auto& r : rows_) {
      if (detail::is_zero(r(p))) continue;
      const Field f = r(p);
      for (Index j = p; j < cols_; ++j)
        if (!detail::is_zero(row(j))) r(j) -= f * row(j);
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

 private:
  Index cols_;
  std::vector<Vec<Field>> rows_;
  std::vector<Index> pivots_;
};

/// Integer row echelon form U A = H computed with unimodular row operations.
/// Rows of H with a pivot appear first, in increasing pivot column; pivots
/// are positive and entries above each pivot are reduced into [0, pivot),
/// so the nonzero rows are the Hermite normal form of the row lattice.
template <typename Scalar>
struct RowEchelon {
  std::vector<std::vector<Scalar>> h;          // rows() x cols()
  std::vector<std::vector<Scalar>> transform;  // rows() x rows(), empty if not tracked
  std::vector<Index> pivot_cols;               // pivot column of row i, i < rank
  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

template <typename Scalar>
RowEchelon<Scalar> hermite_row_echelon(const Mat<Scalar>& a, bool track_transform = true) {
  using detail::is_zero;
  const Index rows = a.rows(), cols = a.cols();
  const Index width = cols + (track_transform ? rows : 0);

  // Work rows are [lattice part | transform part].
  std::vector<std::vector<Scalar>> w(rows, std::vector<Scalar>(width, Scalar(0)));
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) w[i][j] = a(i, j);
    if (track_transform) w[i][cols + i] = Scalar(1);
  }

  std::vector<Index> support;
  const auto collect_support = [&](const std::vector<Scalar>& row, Index from) {
    support.clear();
    for (Index c = from; c < width; ++c)
      if (!is_zero(row[c])) support.push_back(c);
  };
  // target -= q * source, touching only the source's support
  const auto axpy = [&](std::vector<Scalar>& target, const std::vector<Scalar>& source,
                        const Scalar& q) {
    for (Index c : support) target[c] -= q * source[c];
  };

  std::vector<Index> pivots;
  Index r = 0;
  for (Index j = 0; j < cols && r < rows; ++j) {
    bool found = false;
    for (;;) {
      Index best = -1;
      for (Index i = r; i < rows; ++i)
        if (!is_zero(w[i][j]) &&
            (best < 0 || detail::abs_value(w[i][j]) < detail::abs_value(w[best][j])))
          best = i;
      if (best < 0) break;
      found = true;
      std::swap(w[best], w[r]);
      collect_support(w[r], j);
      bool clean = true;
      for (Index i = r + 1; i < rows; ++i) {
        if (is_zero(w[i][j])) continue;
        const Scalar q = w[i][j] / w[r][j];
        axpy(w[i], w[r], q);
        if (!is_zero(w[i][j])) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (w[r][j] < Scalar(0))
      for (auto& x : w[r]) x = -x;
    collect_support(w[r], j);
    const Scalar& pivot = w[r][j];
    for (Index i = 0; i < r; ++i) {
      if (is_zero(w[i][j])) continue;
      Scalar q = w[i][j] / pivot;
      if (w[i][j] - q * pivot < Scalar(0)) q -= Scalar(1);
      if (!is_zero(q)) axpy(w[i], w[r], q);
    }
    pivots.push_back(j);
    ++r;
  }

  RowEchelon<Scalar> out;
  out.pivot_cols = std::move(pivots);
  out.h.resize(rows);
  if (track_transform) out.transform.resize(rows);
  for (Index i = 0; i < rows; ++i) {
    out.h[i].assign(w[i].begin(), w[i].begin() + cols);
    if (track_transform) out.transform[i].assign(w[i].begin() + cols, w[i].end());
  }
  return out;
}

}  // namespace trid
