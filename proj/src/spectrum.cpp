#include "trid/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "trid/cayley.hpp"
#include "trid/exact.hpp"

namespace trid {

std::map<double, Index> Spectrum::histogram(double tol) const {
  std::map<double, Index> h;
  if (exact) {
    for (auto v : exact_values) ++h[static_cast<double>(v)];
    return h;
  }
  for (std::size_t i = 0; i < eigenvalues.size();) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < eigenvalues.size() && eigenvalues[j] - eigenvalues[i] <= tol) sum += eigenvalues[j++];
    double key = std::round(sum / static_cast<double>(j - i) * 1e9) / 1e9;
    if (key == 0.0) key = 0.0;  // fold -0
    h[key] += static_cast<Index>(j - i);
    i = j;
  }
  return h;
}

double Spectrum::trace() const {
  return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
}

namespace {

Spectrum from_sorted(std::vector<double> values) {
  Spectrum s;
  s.eigenvalues = std::move(values);
  if (!s.eigenvalues.empty()) {
    s.lambda_min = s.eigenvalues.front();
    s.lambda_max = s.eigenvalues.back();
  }
  return s;
}

// Tridiagonal QR occasionally stalls on highly degenerate 0/1 matrices. A
// symmetric vertex relabelling keeps the spectrum and usually unsticks it, so
// `a` is replaced by the permuted matrix the solver actually converged on.
Eigen::SelfAdjointEigenSolver<MatXd> eigensolve(MatXd& a, int options) {
  Eigen::SelfAdjointEigenSolver<MatXd> solver(a, options);
  std::mt19937_64 rng(0x5eed);
  for (int attempt = 0; attempt < 4 && solver.info() != Eigen::Success; ++attempt) {
    Eigen::PermutationMatrix<Eigen::Dynamic> p(a.rows());
    p.setIdentity();
    std::shuffle(p.indices().data(), p.indices().data() + a.rows(), rng);
    a = (p * a * p.transpose()).eval();
    solver.compute(a, options);
  }
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  return solver;
}

}  // namespace

Spectrum spectrum_numeric(const Graph& g, const Caps& caps) {
  require_within(g.vertex_count(), caps.eigen_cap, "dense eigensolver size");
  MatXd a = g.adjacency_matrix<double>();
  const auto solver = eigensolve(a, Eigen::EigenvaluesOnly);
  const VecXd& ev = solver.eigenvalues();
  return from_sorted(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

double max_eigen_residual(const Graph& g, const Caps& caps) {
  require_within(g.vertex_count(), caps.eigen_cap, "dense eigensolver size");
  MatXd a = g.adjacency_matrix<double>();
  const auto solver = eigensolve(a, Eigen::ComputeEigenvectors);
  const MatXd r = a * solver.eigenvectors() -
                  solver.eigenvectors() * solver.eigenvalues().asDiagonal();
  return r.colwise().norm().maxCoeff();
}

Index count_trivial_blocks(const AbelianStructure& s,
                           std::span<const AbelianCharacter> chars) {
  // Block [k,l) is trivial iff the prefix products before k and before l
  // agree, so count equal pairs among the m+1 prefix exponent sums.
  const std::size_t r = s.factors.size();
  std::vector<std::vector<int>> prefix(chars.size() + 1, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (chars[i].exponents.size() != r)
      throw std::invalid_argument("character arity does not match the factor list");
    for (std::size_t j = 0; j < r; ++j)
      prefix[i + 1][j] = (prefix[i][j] + chars[i].exponents[j]) % s.factors[j];
  }
  std::sort(prefix.begin(), prefix.end());
  Index count = 0;
  for (std::size_t i = 0; i < prefix.size();) {
    std::size_t j = i;
    while (j < prefix.size() && prefix[j] == prefix[i]) ++j;
    const Index run = static_cast<Index>(j - i);
    count += run * (run - 1) / 2;
    i = j;
  }
  return count;
}

Spectrum abelian_spectrum(const AbelianStructure& s, Index m, const Caps& caps) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const Index n = s.order();
  const Index total = checked_pow(n, m);
  require_within(total, caps.vertex_cap, "character tuple count n^m");
  const auto chars = all_characters(s);
  const std::int64_t base = -interval_count(m);

  Spectrum out;
  out.exact = true;
  out.exact_values.reserve(total);
  std::vector<AbelianCharacter> tuple(m, chars[0]);
  std::vector<Index> idx(m, 0);
  for (Index t = 0; t < total; ++t) {
    for (Index p = 0; p < m; ++p) tuple[p] = chars[idx[p]];
    out.exact_values.push_back(base + count_trivial_blocks(s, tuple) * n);
    for (Index p = m - 1; p >= 0; --p) {
      if (++idx[p] < n) break;
      idx[p] = 0;
    }
  }
  std::sort(out.exact_values.begin(), out.exact_values.end());
  out.eigenvalues.assign(out.exact_values.begin(), out.exact_values.end());
  out.lambda_min = out.eigenvalues.front();
  out.lambda_max = out.eigenvalues.back();
  return out;
}

bool certify_lambda_min_above(const IntMatrix& a, std::int64_t c) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  if (a != a.transpose()) throw std::invalid_argument("matrix must be symmetric");
  Mat<BigInt> shifted(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) shifted(i, j) = BigInt(a(i, j) + (i == j ? c : 0));
  return is_positive_definite(shifted);
}

Index delsarte_from(double degree, double lambda_min) {
  if (!(lambda_min < 0.0)) throw PreconditionError("lambda_min must be negative");
  const double ratio = 1.0 - degree / lambda_min;
  const double snapped = std::round(ratio);
  const double value = std::abs(ratio - snapped) <= 1e-9 ? snapped : std::floor(ratio);
  return static_cast<Index>(value);
}

Index delsarte_bound(const Graph& g, const Caps& caps) {
  const auto k = g.degree_if_regular();
  if (!k) throw PreconditionError("Delsarte bound requires a regular graph");
  if (*k == 0) throw PreconditionError("Delsarte bound requires at least one edge");
  double lambda_min = 0.0;
  if (const auto& tag = g.script_tag(); tag && tag->abelian)
    lambda_min = abelian_spectrum(*tag->abelian, tag->m, caps).lambda_min;
  else
    lambda_min = spectrum_numeric(g, caps).lambda_min;
  return delsarte_from(static_cast<double>(*k), lambda_min);
}

bool commute_check(const IntMatrix& m1, const IntMatrix& m2) {
  if (m1.rows() != m1.cols() || m2.rows() != m2.cols() || m1.rows() != m2.rows())
    throw std::invalid_argument("commute_check needs square matrices of equal size");
  return (m1 * m2 - m2 * m1).isZero();
}

}  // namespace trid
