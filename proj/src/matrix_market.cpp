#include "trid/matrix_market.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace trid {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

const char* field_name(MMField f) {
  switch (f) {
    case MMField::pattern: return "pattern";
    case MMField::integer: return "integer";
    case MMField::real: return "real";
  }
  return "real";
}

}  // namespace

void write_matrix_market(std::ostream& os, const Eigen::SparseMatrix<std::int64_t>& a,
                         MMField field, MMSymmetry symmetry) {
  if (symmetry == MMSymmetry::symmetric && a.rows() != a.cols())
    throw std::invalid_argument("symmetric output needs a square matrix");
  Index nnz = 0;
  for (Index c = 0; c < a.outerSize(); ++c)
    for (Eigen::SparseMatrix<std::int64_t>::InnerIterator it(a, c); it; ++it)
      if (it.value() != 0 && (symmetry == MMSymmetry::general || it.row() >= it.col())) ++nnz;

  os << "%%MatrixMarket matrix coordinate " << field_name(field) << ' '
     << (symmetry == MMSymmetry::symmetric ? "symmetric" : "general") << '\n';
  os << a.rows() << ' ' << a.cols() << ' ' << nnz << '\n';
  for (Index c = 0; c < a.outerSize(); ++c)
    for (Eigen::SparseMatrix<std::int64_t>::InnerIterator it(a, c); it; ++it) {
      if (it.value() == 0 || (symmetry == MMSymmetry::symmetric && it.row() < it.col())) continue;
      os << it.row() + 1 << ' ' << it.col() + 1;
      if (field != MMField::pattern) os << ' ' << it.value();
      os << '\n';
    }
}

Eigen::SparseMatrix<double> read_matrix_market(std::istream& is, MMHeader* header) {
  std::string line;
  if (!std::getline(is, line)) throw PreconditionError("empty Matrix Market input");
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || lower(object) != "matrix")
    throw PreconditionError("missing %%MatrixMarket matrix banner");
  if (lower(format) != "coordinate") throw PreconditionError("only coordinate format is supported");

  MMHeader h;
  field = lower(field);
  if (field == "pattern") h.field = MMField::pattern;
  else if (field == "integer") h.field = MMField::integer;
  else if (field == "real") h.field = MMField::real;
  else throw PreconditionError("unsupported field '" + field + "'");
  symmetry = lower(symmetry);
  if (symmetry == "general") h.symmetry = MMSymmetry::general;
  else if (symmetry == "symmetric") h.symmetry = MMSymmetry::symmetric;
  else throw PreconditionError("unsupported symmetry '" + symmetry + "'");

  while (std::getline(is, line))
    if (!line.empty() && line[0] != '%') break;
  Index rows = 0, cols = 0, nnz = 0;
  if (!(std::istringstream(line) >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0)
    throw PreconditionError("malformed size line");
  if (h.symmetry == MMSymmetry::symmetric && rows != cols)
    throw PreconditionError("symmetric matrix must be square");

  std::vector<Eigen::Triplet<double>> t;
  t.reserve(h.symmetry == MMSymmetry::symmetric ? 2 * nnz : nnz);
  for (Index e = 0; e < nnz; ++e) {
    Index i = 0, j = 0;
    double v = 1.0;
    if (!(is >> i >> j)) throw PreconditionError("truncated entry list");
    if (h.field != MMField::pattern && !(is >> v)) throw PreconditionError("entry without a value");
    if (i < 1 || i > rows || j < 1 || j > cols) throw PreconditionError("entry index out of range");
    t.emplace_back(i - 1, j - 1, v);
    if (h.symmetry == MMSymmetry::symmetric && i != j) t.emplace_back(j - 1, i - 1, v);
  }
  Eigen::SparseMatrix<double> a(rows, cols);
  a.setFromTriplets(t.begin(), t.end());
  if (header) *header = h;
  return a;
}

void write_graph_matrix_market(std::ostream& os, const Graph& g) {
  write_matrix_market(os, g.adjacency_sparse<std::int64_t>(), MMField::pattern, MMSymmetry::symmetric);
}

Graph read_graph_matrix_market(std::istream& is) {
  const auto a = read_matrix_market(is);
  if (a.rows() != a.cols()) throw PreconditionError("adjacency matrix must be square");
  std::vector<std::pair<Index, Index>> edges;
  for (Index c = 0; c < a.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(a, c); it; ++it) {
      if (it.value() == 0.0) continue;
      if (it.value() != 1.0) throw PreconditionError("adjacency entries must be 0 or 1");
      if (it.row() == it.col()) throw PreconditionError("adjacency matrix has a loop");
      if (a.coeff(it.col(), it.row()) != 1.0) throw PreconditionError("adjacency matrix is not symmetric");
      if (it.row() < it.col()) edges.emplace_back(it.row(), it.col());
    }
  return Graph::from_edges(a.rows(), edges);
}

}  // namespace trid
