#include "trid/trace_system.hpp"

#include <algorithm>
#include <cmath>

#include "trid/exact.hpp"

namespace trid {

TraceSystem::TraceSystem(std::shared_ptr<const FiniteGroup> group, Index m, const Caps& caps)
    : group_(std::move(group)), m_(m), codec_(group_->order(), m) {
  const Index n = group_->order();
  const Index cols = codec_.size();
  const Index per_block = checked_pow(n, m - 1);
  const Index rows = per_block < 0 ? -1 : interval_count(m) * per_block;
  require_within(cols, caps.vertex_cap, "column count n^m");
  require_within(rows, caps.vertex_cap, "row count C(m+1,2) n^(m-1)");

  block_of_.assign((m + 2) * (m + 2), -1);
  rows_.reserve(rows);
  support_.reserve(rows * n);
  Index block = 0;
  std::vector<int> rep(m);
  for (int k = 1; k <= m; ++k)
    for (int l = k + 1; l <= m + 1; ++l, ++block) {
      block_of_[k * (m + 2) + l] = block;
      for (Index reduced = 0; reduced < per_block; ++reduced) {
        // spread the reduced code over all positions except k-1
        Index rest = reduced;
        for (Index p = m - 1; p >= 0; --p) {
          if (p == k - 1) {
            rep[p] = 0;
            continue;
          }
          rep[p] = static_cast<int>(rest % n);
          rest /= n;
        }
        rows_.push_back(RowIndex{k, l, TupleVertex::from_coords(codec_, rep)});
        const std::size_t start = support_.size();
        for (int x = 0; x < n; ++x)
          support_.push_back(codec_.encode(apply_interval(*group_, x, k, l, rep)));
        std::sort(support_.begin() + static_cast<std::ptrdiff_t>(start), support_.end());
      }
    }
}

RowIndex TraceSystem::canonical(int k, int l, std::span<const int> coords) const {
  if (k < 1 || k >= l || l > m_ + 1) throw std::out_of_range("interval (k, l) out of range");
  if (static_cast<Index>(coords.size()) != m_) throw std::out_of_range("monomial has wrong degree");
  for (int c : coords)
    if (c < 0 || c >= group_->order()) throw std::out_of_range("element index out of range");
  const int x = group_->inv(coords[k - 1]);
  return RowIndex{k, l, TupleVertex::from_coords(codec_, apply_interval(*group_, x, k, l, coords))};
}

Index TraceSystem::row_of(int k, int l, std::span<const int> coords) const {
  const RowIndex r = canonical(k, l, coords);
  const Index n = group_->order();
  Index reduced = 0;
  for (Index p = 0; p < m_; ++p)
    if (p != k - 1) reduced = reduced * n + r.rep.coords[p];
  return block_of_[k * (m_ + 2) + l] * checked_pow(n, m_ - 1) + reduced;
}

TraceSystem build_system(const FiniteGroup& g, Index m, const Caps& caps) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  return TraceSystem(std::make_shared<const FiniteGroup>(g), m, caps);
}

SystemShape system_shape(const TraceSystem& ts) {
  SystemShape s;
  s.rows = ts.row_count();
  s.cols = ts.col_count();
  const Index n = ts.group().order();
  std::vector<Index> col_sum(s.cols, 0);
  s.row_sums_ok = true;
  for (Index r = 0; r < s.rows; ++r) {
    const auto sup = ts.row_support(r);
    // distinct columns, so the row sum is the support size
    if (static_cast<Index>(sup.size()) != n ||
        std::adjacent_find(sup.begin(), sup.end()) != sup.end())
      s.row_sums_ok = false;
    for (Index c : sup) ++col_sum[c];
  }
  const Index expect = interval_count(ts.m());
  s.col_sums_ok = std::all_of(col_sum.begin(), col_sum.end(),
                              [&](Index v) { return v == expect; });
  return s;
}

bool gram_identity_check(const TraceSystem& ts, const Graph& gr) {
  if (gr.vertex_count() != ts.col_count())
    throw std::invalid_argument("graph and system dimensions differ");
  const auto b = ts.b_matrix<std::int64_t>();
  Eigen::SparseMatrix<std::int64_t> diff = Eigen::SparseMatrix<std::int64_t>(b.transpose()) * b;
  diff -= gr.adjacency_sparse<std::int64_t>();
  for (Index i = 0; i < diff.rows(); ++i) diff.coeffRef(i, i) -= interval_count(ts.m());
  diff.prune(std::int64_t{0});
  return diff.nonZeros() == 0;
}

namespace {

void check_target(const TraceSystem& ts, const TupleVertex& target) {
  if (static_cast<Index>(target.coords.size()) != ts.m())
    throw std::invalid_argument("target has wrong degree");
  if (ts.codec().encode(target.coords) != target.code)
    throw std::invalid_argument("target code does not match its coordinates");
}

}  // namespace

TraceIdentity solve_submatrix(const TraceSystem& ts, const TupleVertex& target) {
  check_target(ts, target);
  const Index cols = ts.col_count();

  RowBasis<Rational> basis(cols);
  std::vector<Index> chosen;
  for (Index r = 0; r < ts.row_count() && static_cast<Index>(chosen.size()) < cols; ++r) {
    Vec<Rational> row = Vec<Rational>::Constant(cols, Rational(0));
    for (Index c : ts.row_support(r)) row(c) = Rational(1);
    if (basis.add(std::move(row))) chosen.push_back(r);
  }
  if (static_cast<Index>(chosen.size()) < cols)
    throw PreconditionError("relation matrix has rank " + std::to_string(chosen.size()) +
                            " < " + std::to_string(cols) +
                            ": no square nonsingular submatrix exists");

  // y^T B_sub = e_target^T  <=>  B_sub^T y = e_target
  Mat<Rational> bt = Mat<Rational>::Constant(cols, cols, Rational(0));
  for (Index i = 0; i < cols; ++i)
    for (Index c : ts.row_support(chosen[i])) bt(c, i) = Rational(1);
  Vec<Rational> rhs = Vec<Rational>::Constant(cols, Rational(0));
  rhs(target.code) = Rational(1);
  const auto y = solve_linear(std::move(bt), std::move(rhs));
  if (!y) throw std::logic_error("selected submatrix is singular");

  BigInt denom(1);
  for (Index i = 0; i < cols; ++i)
    denom = boost::multiprecision::lcm(denom, BigInt(boost::multiprecision::denominator((*y)(i))));

  TraceIdentity id{target, denom, {}};
  for (Index i = 0; i < cols; ++i) {
    const Rational scaled = (*y)(i) * Rational(denom);
    if (scaled == 0) continue;
    id.terms.push_back({BigInt(boost::multiprecision::numerator(scaled)), ts.row(chosen[i])});
  }
  return id;
}

std::pair<BigInt, TraceIdentity> minimal_upsilon(const TraceSystem& ts, const TupleVertex& target) {
  check_target(ts, target);
  const Index rows = ts.row_count();
  const Index cols = ts.col_count();

  // column order: everything except the target, then the target
  std::vector<Index> position(cols);
  for (Index c = 0, p = 0; c < cols; ++c)
    if (c != target.code) position[c] = p++;
  position[target.code] = cols - 1;

  Mat<BigInt> a = Mat<BigInt>::Constant(rows, cols, BigInt(0));
  for (Index r = 0; r < rows; ++r)
    for (Index c : ts.row_support(r)) a(r, position[c]) = BigInt(1);

  const auto ech = hermite_row_echelon(a, /*track_transform=*/true);
  if (ech.rank() == 0 || ech.pivot_cols.back() != cols - 1)
    throw PreconditionError("target monomial is outside the rational span of the trace relations");
  const Index pivot_row = ech.rank() - 1;
  for (Index c = 0; c < cols - 1; ++c)
    if (ech.h[pivot_row][c] != 0) throw std::logic_error("echelon row is not supported on the target");

  TraceIdentity id{target, ech.h[pivot_row][cols - 1], {}};
  const auto& u = ech.transform[pivot_row];
  for (Index r = 0; r < rows; ++r)
    if (u[r] != 0) id.terms.push_back({u[r], ts.row(r)});
  return {id.upsilon, std::move(id)};
}

bool verify_identity(const TraceSystem& ts, const TraceIdentity& id) {
  if (static_cast<Index>(id.target.coords.size()) != ts.m())
    throw std::out_of_range("target has wrong degree");
  const Index target = ts.codec().encode(id.target.coords);
  std::vector<BigInt> acc(ts.col_count(), BigInt(0));
  for (const auto& term : id.terms) {
    const Index r = ts.row_of(term.row);
    for (Index c : ts.row_support(r)) acc[c] += term.gamma;
  }
  if (id.upsilon <= 0 || id.upsilon % ts.group().order() != 0) return false;
  for (Index c = 0; c < ts.col_count(); ++c)
    if (acc[c] != (c == target ? id.upsilon : BigInt(0))) return false;
  return true;
}

bool upsilon_invariance(const TraceSystem& ts, std::span<const TupleVertex> targets) {
  if (targets.size() < 2) throw std::invalid_argument("need at least two targets");
  const BigInt first = minimal_upsilon(ts, targets[0]).first;
  for (std::size_t i = 1; i < targets.size(); ++i)
    if (minimal_upsilon(ts, targets[i]).first != first) return false;
  return true;
}

double hadamard_log_bound(Index n) {
  if (n < 2) throw std::invalid_argument("hadamard_log_bound needs n >= 2");
  const double nd = static_cast<double>(n);
  return std::pow(nd, nd) / 2.0 * std::log2(nd);
}

}  // namespace trid
