#pragma once

#include "trid/types.hpp"

namespace trid {

/// Size caps shared by the pipelines. Defaults can be overridden through
/// the environment (TRID_VERTEX_CAP, TRID_EIGEN_CAP, TRID_CLIQUE_CAP,
/// TRID_ASSOC_CAP, TRID_EXACT_CAP) or explicitly by callers.
struct Caps {
  Index vertex_cap = 100000;  // vertices of G_m(G) / columns of B
  Index eigen_cap = 4096;     // dense symmetric eigensolver
  Index clique_cap = 5000;    // exact maximum clique search
  Index assoc_cap = 128;      // exhaustive associativity check (n^3)
  Index exact_cap = 512;      // dense exact elimination (Bareiss, HNF, rational solve)

  static Caps defaults();
  static Caps from_environment();
};

void require_within(Index value, Index cap, const std::string& what);

}  // namespace trid
