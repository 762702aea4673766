#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "endgraph/finite_graph.hpp"

namespace endgraph {

// Length of a shortest cycle; nullopt for forests ("infinite girth").
// Parallel edges give girth 2.
std::optional<int> girth(const FiniteGraph& g);

// All simple cycles of length <= max_len, each exactly once up to
// rotation and reflection, in canonical order. A pair with multiplicity
// >= 2 is reported once as the 2-cycle (u, v).
//
// The callback may return false to stop the enumeration early.
void enumerate_cycles(const FiniteGraph& g, int max_len,
                      const std::function<bool(const std::vector<int>&)>& emit);

std::vector<std::vector<int>> all_cycles(const FiniteGraph& g, int max_len);

// Maximal subgraph of minimum degree >= k (degrees count multiplicity),
// computed by iterative peeling.
FiniteGraph k_core(const FiniteGraph& g, int k);

}  // namespace endgraph
