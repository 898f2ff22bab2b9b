#pragma once

#include <map>
#include <vector>

#include "trid/config.hpp"
#include "trid/graph.hpp"
#include "trid/group.hpp"

namespace trid {

/// Sorted adjacency eigenvalues with multiplicity.
struct Spectrum {
  std::vector<double> eigenvalues;       // ascending
  std::vector<std::int64_t> exact_values;  // ascending, filled iff exact
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  bool exact = false;

  /// Eigenvalue -> multiplicity. Numeric values are grouped when they agree
  /// within `tol`.
  std::map<double, Index> histogram(double tol = 1e-6) const;
  double trace() const;
};

/// Full spectrum from the dense symmetric eigensolver. Throws CapExceeded
/// above caps.eigen_cap vertices.
Spectrum spectrum_numeric(const Graph& g, const Caps& caps = {});

/// max over eigenpairs of ||A x - lambda x|| from a full decomposition.
double max_eigen_residual(const Graph& g, const Caps& caps = {});

/// Spectrum of G_m(G) for abelian G: one eigenvalue -C(m+1,2) + n_chi * n
/// per m-tuple of characters, where n_chi counts the intervals [k,l) whose
/// character product is trivial. Integer arithmetic only.
Spectrum abelian_spectrum(const AbelianStructure& s, Index m, const Caps& caps = {});

/// Number of intervals [k,l), 1 <= k < l <= m+1, on which the product of
/// the given characters is trivial.
Index count_trivial_blocks(const AbelianStructure& s,
                           std::span<const AbelianCharacter> chars);

/// True iff c I + a is positive definite, i.e. lambda_min(a) > -c, decided
/// by exact leading principal minors. Throws std::invalid_argument for
/// non-symmetric input.
bool certify_lambda_min_above(const IntMatrix& a, std::int64_t c);

/// floor(1 - k / lambda_min) for a regular graph with at least one edge.
/// Uses the exact character spectrum when the graph carries a script tag.
Index delsarte_bound(const Graph& g, const Caps& caps = {});

/// floor(1 - k / lambda_min) with ratios within 1e-9 of an integer snapped
/// before flooring.
Index delsarte_from(double degree, double lambda_min);

/// m1 m2 == m2 m1, computed exactly.
bool commute_check(const IntMatrix& m1, const IntMatrix& m2);

}  // namespace trid
