#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "endgraph/finite_graph.hpp"

namespace endgraph {

// A minor embedding: branch_sets[i] is the (connected) set of host
// vertices contracted to pattern vertex i.
struct MinorCert {
    std::vector<std::vector<VertexId>> branch_sets;
};

enum class SearchOutcome {
    Found,      // certificate attached
    NoneFound,  // search space fully exhausted: no embedding exists
    Exhausted,  // node budget hit before exhaustion: inconclusive
};

struct MinorResult {
    SearchOutcome outcome = SearchOutcome::Exhausted;
    MinorCert cert;
    std::uint64_t nodes_used = 0;
};

// Pattern graph given as simple adjacency over {0..p-1}.
struct Pattern {
    int p = 0;
    std::vector<std::pair<int, int>> edges;

    static Pattern complete(int r);
    static Pattern grid(int cols, int rows);  // cols x rows grid, column-major
};

// Exact bounded branch-set search for a pattern minor of g.
// "NoneFound" is only reported when the search space was exhausted.
MinorResult find_minor(const FiniteGraph& g, const Pattern& pattern, std::uint64_t node_budget);

// K^r minor search.
MinorResult complete_minor(const FiniteGraph& g, int r, std::uint64_t node_budget);

// Independent certificate check: disjoint connected branch sets, one per
// pattern vertex, pairwise joined along every pattern edge.
bool verify_minor_cert(const FiniteGraph& g, const Pattern& pattern, const MinorCert& cert);

}  // namespace endgraph
