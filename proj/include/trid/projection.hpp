#pragma once

#include <span>
#include <vector>

#include "trid/graph.hpp"
#include "trid/types.hpp"

namespace trid {

struct ProjectionReport {
  double trace_residual = 0.0;      // Tr(B)
  double sum_residual = 0.0;        // Sigma(B), the sum of all entries
  double adjacency_residual = 0.0;  // <B, A>
  double ratio = 0.0;               // Sigma(C_hat) / Tr(C_hat)
  double min_eigenvalue = 0.0;      // of C_hat
  double norm = 0.0;                // Frobenius norm of C_hat
};

/// Orthogonal projection of a clique matrix onto the algebra spanned by
/// {I, A, complement(A)} and their products, split as
/// C_hat = alpha I + beta A + B.
struct CliqueProjection {
  Rational alpha;  // c / v
  Rational beta;   // c (c - 1) / Sigma(A)
  MatXd c_hat;
  MatXd residual;  // B
  Index algebra_dimension = 0;
  ProjectionReport report;
};

/// Orthonormal basis (trace inner product) of the matrix algebra generated
/// by the given symmetric matrices, grown breadth first by products with
/// Gram-Schmidt; a candidate is dependent when its residual norm is below
/// `tol` times its own norm.
std::vector<MatXd> algebra_basis(std::span<const MatXd> generators, double tol = 1e-8);

/// Requires a regular connected graph and a nonempty clique.
CliqueProjection project_clique(const Graph& g, std::span<const Index> clique);

}  // namespace trid
