#pragma once

#include <vector>

#include "trid/config.hpp"
#include "trid/graph.hpp"

namespace trid {

/// A maximum clique (sorted vertex list) by branch and bound with greedy
/// colouring bounds. Vertices are explored in descending degree, then index
/// order, so the result is deterministic. Throws CapExceeded above
/// caps.clique_cap vertices.
std::vector<Index> max_clique_exact(const Graph& g, const Caps& caps = {});

}  // namespace trid
