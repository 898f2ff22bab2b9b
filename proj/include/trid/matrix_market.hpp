#pragma once

#include <iosfwd>
#include <string>

#include <Eigen/SparseCore>

#include "trid/graph.hpp"
#include "trid/types.hpp"

namespace trid {

enum class MMField { pattern, integer, real };
enum class MMSymmetry { general, symmetric };

struct MMHeader {
  MMField field = MMField::real;
  MMSymmetry symmetry = MMSymmetry::general;
};

/// Coordinate format, 1-based, entries in column-major order. Symmetric
/// output keeps the lower triangle only; pattern output drops values.
void write_matrix_market(std::ostream& os, const Eigen::SparseMatrix<std::int64_t>& a,
                         MMField field = MMField::integer,
                         MMSymmetry symmetry = MMSymmetry::general);

/// Reads "matrix coordinate {pattern|integer|real} {general|symmetric}".
/// Symmetric input is expanded to both triangles; pattern entries read as 1.
Eigen::SparseMatrix<double> read_matrix_market(std::istream& is, MMHeader* header = nullptr);

/// Adjacency matrix as "pattern symmetric".
void write_graph_matrix_market(std::ostream& os, const Graph& g);

/// Graph from a square symmetric 0/1 Matrix Market file; a nonzero diagonal
/// or a non-symmetric pattern is rejected.
Graph read_graph_matrix_market(std::istream& is);

}  // namespace trid
