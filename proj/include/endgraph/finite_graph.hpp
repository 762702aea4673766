#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace endgraph {

// Thrown on malformed caller input (unknown vertex ids, loops, bad parameters).
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

using VertexId = std::string;
using VertexSet = std::set<VertexId>;

// An undirected edge with multiplicity. Endpoints are stored in sorted order.
struct Edge {
    VertexId u, v;
    int mult = 1;
};

// Immutable finite multigraph over string vertex ids.
//
// Vertices are indexed densely in sorted-id order, so every traversal and
// every algorithm downstream is deterministic. Loops are rejected;
// parallel edges are kept as multiplicities.
class FiniteGraph {
  public:
    FiniteGraph() = default;
    FiniteGraph(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(ids_.size()); }
    // Number of distinct adjacent pairs.
    int edge_pairs() const { return static_cast<int>(edges_.size()); }
    // Number of edges counted with multiplicity.
    int edge_count() const;

    const std::vector<VertexId>& ids() const { return ids_; }
    const VertexId& id_of(int idx) const { return ids_.at(idx); }
    int index_of(const VertexId& id) const;
    bool has_vertex(const VertexId& id) const { return index_.count(id) > 0; }

    // Neighbours of idx in ascending index order (each listed once).
    const std::vector<int>& neighbors(int idx) const { return adj_.at(idx); }
    int multiplicity(int u, int v) const;
    bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }
    // Degree counts multiplicities, as usual for multigraphs.
    int degree(int idx) const;

    // Distinct edges as (min-index, max-index, mult), sorted.
    const std::vector<std::tuple<int, int, int>>& edges() const { return edges_; }

    // --- derived graphs -------------------------------------------------
    FiniteGraph induced(const std::vector<int>& vertices) const;
    FiniteGraph without_vertex(int idx) const;
    // Removes one unit of multiplicity (the whole pair if mult reaches 0).
    FiniteGraph without_edge(int u, int v) const;

    // --- elementary queries ----------------------------------------------
    // Component labels (label = smallest vertex index in the component).
    std::vector<int> components() const;
    bool connected() const;
    // Component labels after deleting `removed` (removed vertices get -1).
    std::vector<int> components_after_removal(const std::vector<bool>& removed) const;
    bool set_connected(const std::vector<int>& vertices) const;

    // Index helpers for id-based call sites.
    std::vector<int> indices_of(const VertexSet& ids) const;
    VertexSet ids_of(const std::vector<int>& idxs) const;

  private:
    std::vector<VertexId> ids_;
    std::map<VertexId, int> index_;
    std::vector<std::vector<int>> adj_;
    std::map<std::pair<int, int>, int> mult_;
    std::vector<std::tuple<int, int, int>> edges_;
};

// ∂_v H: the vertices of H with a neighbour outside H.
//
// Note the orientation: the boundary lies *inside* H (the attachment
// vertices of H), matching how boundary ratios |∂_e H|/|∂_v H| are formed
// throughout this project. Both conventions exist in the literature.
VertexSet vertex_boundary(const FiniteGraph& g, const VertexSet& h);

// ∂_e H: edges with exactly one endpoint in H, with multiplicity.
std::vector<Edge> edge_boundary(const FiniteGraph& g, const VertexSet& h);

int edge_boundary_size(const FiniteGraph& g, const VertexSet& h);

}  // namespace endgraph
