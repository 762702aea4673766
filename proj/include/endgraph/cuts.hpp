#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "endgraph/finite_graph.hpp"

namespace endgraph {

using Path = std::vector<VertexId>;

// A vertex separator together with the two sides it certifies.
// Re-verifiable by one component scan: no edge joins side_a to side_b.
struct VertexCut {
    VertexSet separator;
    VertexSet side_a;
    VertexSet side_b;
};

struct EdgeCut {
    std::vector<Edge> cut_edges;
    VertexSet side_a;
    VertexSet side_b;
};

// Result of a minimum vertex cut query. When a source is adjacent to a
// sink no internal separator exists; this is the "unseparable" outcome,
// a legitimate result rather than an error (end-degree estimators react
// to it by enlarging the source set).
struct VertexCutResult {
    bool unseparable = false;
    std::vector<std::pair<VertexId, VertexId>> unseparable_pairs;
    int size = 0;
    VertexCut cut;
    std::vector<Path> paths;  // internally disjoint source->sink paths
};

struct EdgeCutResult {
    int size = 0;
    EdgeCut cut;
    std::vector<Path> paths;  // pairwise edge-disjoint source->sink paths
};

// Max number of internally disjoint source->sink paths and a matching
// minimum separator among vertices outside sources ∪ sinks (Menger).
// Deterministic: augmentation explores lowest vertex index first.
VertexCutResult min_vertex_cut(const FiniteGraph& g, const VertexSet& sources,
                               const VertexSet& sinks);

// Edge version; multiplicities count.
EdgeCutResult min_edge_cut(const FiniteGraph& g, const VertexSet& sources,
                           const VertexSet& sinks);

// Independent re-verification of returned certificates.
bool verify_vertex_cut(const FiniteGraph& g, const VertexCut& cut);
bool verify_edge_cut(const FiniteGraph& g, const EdgeCut& cut);
bool verify_disjoint_paths(const FiniteGraph& g, const std::vector<Path>& paths,
                           bool vertex_disjoint);

struct ConnectivityReport {
    bool holds = false;
    // On failure: a separator of size < k (vertex mode) or a cut of
    // size < k / too few vertices. On success: a certifying minimum
    // over the worst pair.
    std::optional<VertexCut> violating_separator;
    std::optional<EdgeCut> violating_cut;
    std::vector<Path> certifying_paths;
    std::string note;
};

// |V| >= k+1 and no vertex set of size < k disconnects g.
ConnectivityReport is_k_connected(const FiniteGraph& g, int k);
ConnectivityReport is_k_edge_connected(const FiniteGraph& g, int k);

int vertex_connectivity(const FiniteGraph& g);
int edge_connectivity(const FiniteGraph& g);

}  // namespace endgraph
