#include "trid/projection.hpp"

#include <algorithm>
#include <deque>

#include <Eigen/Eigenvalues>

namespace trid {

namespace {

double inner(const MatXd& x, const MatXd& y) { return x.cwiseProduct(y).sum(); }

// Orthogonalizes x against the basis (twice, for stability) and appends it
// when something independent remains.
bool absorb(std::vector<MatXd>& basis, MatXd x, double tol) {
  const double scale = x.norm();
  if (scale == 0.0) return false;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& e : basis) x -= inner(x, e) * e;
  const double rest = x.norm();
  if (rest <= tol * scale) return false;
  basis.push_back(x / rest);
  return true;
}

}  // namespace

std::vector<MatXd> algebra_basis(std::span<const MatXd> generators, double tol) {
  std::vector<MatXd> basis;
  if (generators.empty()) return basis;
  const Index v = generators.front().rows();
  std::deque<std::size_t> pending;
  for (const auto& g : generators)
    if (absorb(basis, g, tol)) pending.push_back(basis.size() - 1);
  while (!pending.empty() && static_cast<Index>(basis.size()) < v * v) {
    const std::size_t i = pending.front();
    pending.pop_front();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const MatXd left = basis[i] * basis[j];
      const MatXd right = basis[j] * basis[i];
      if (absorb(basis, left, tol)) pending.push_back(basis.size() - 1);
      if (absorb(basis, right, tol)) pending.push_back(basis.size() - 1);
    }
  }
  return basis;
}

CliqueProjection project_clique(const Graph& g, std::span<const Index> clique) {
  const auto k = g.degree_if_regular();
  if (!k) throw PreconditionError("clique projection requires a regular graph");
  if (!g.is_connected()) throw PreconditionError("clique projection requires a connected graph");
  if (clique.empty()) throw PreconditionError("clique must be nonempty");
  for (Index x : clique)
    if (x < 0 || x >= g.vertex_count()) throw PreconditionError("clique vertex out of range");
  if (!is_clique(g, clique)) throw PreconditionError("vertex set is not a clique");

  const Index v = g.vertex_count();
  const Index c = static_cast<Index>(clique.size());
  const MatXd a = g.adjacency_matrix<double>();
  const MatXd id = MatXd::Identity(v, v);
  const MatXd abar = MatXd::Ones(v, v) - id - a;

  VecXd indicator = VecXd::Zero(v);
  for (Index x : clique) indicator(x) = 1.0;
  const MatXd cm = indicator * indicator.transpose();

  const MatXd gens[] = {id, a, abar};
  const auto basis = algebra_basis(gens);

  CliqueProjection out;
  out.algebra_dimension = static_cast<Index>(basis.size());
  out.c_hat = MatXd::Zero(v, v);
  for (const auto& e : basis) out.c_hat += inner(cm, e) * e;

  out.alpha = Rational(BigInt(c), BigInt(v));
  const Index sigma_a = 2 * g.edge_count();
  out.beta = sigma_a == 0 ? Rational(0) : Rational(BigInt(c * (c - 1)), BigInt(sigma_a));
  out.residual = out.c_hat - out.alpha.convert_to<double>() * id -
                 out.beta.convert_to<double>() * a;

  auto& r = out.report;
  r.trace_residual = out.residual.trace();
  r.sum_residual = out.residual.sum();
  r.adjacency_residual = inner(out.residual, a);
  r.ratio = out.c_hat.sum() / out.c_hat.trace();
  r.norm = out.c_hat.norm();
  Eigen::SelfAdjointEigenSolver<MatXd> solver(out.c_hat, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = solver.eigenvalues().minCoeff();
  return out;
}

}  // namespace trid
