#pragma once

#include <vector>

#include "endgraph/presentation.hpp"

namespace endgraph {

// One component of G - B_r, explored down to a bounded depth.
// `key` is the smallest attachment vertex and identifies the component
// stably across different exploration depths.
struct EndComponent {
    int radius = 0;
    VertexId key;
    bool infinite = false;
    bool undecided = false;
    int explored_depth = 0;
    std::vector<VertexId> members;  // sorted, levels in (r, r+depth]
    VertexSet attachment;           // members with a neighbour in B_r (= ∂_v)

    bool contains(const VertexId& v) const;
};

// All components of G - B_r explored to at least `min_depth` levels.
// With strict = true the escape verdicts are recomputed at double the
// margin; a disagreement marks the component undecided.
std::vector<EndComponent> components_beyond(const Presentation& p, int radius,
                                            int min_depth = 0, bool strict = false);

// The infinite components only (the end directions at this radius).
std::vector<EndComponent> end_components(const Presentation& p, int radius,
                                         bool strict = false);

// A nested chain of infinite components of ball complements: one end
// approximation at increasing radii.
struct EndHandle {
    std::vector<std::pair<int, VertexId>> chain;  // (radius, component key)

    int last_radius() const { return chain.back().first; }
    const VertexId& last_key() const { return chain.back().second; }
    std::string spec() const;  // printable handle description
};

// Chain of components containing `deep`, for radii 1..max_radius.
// Requires level(deep) > max_radius.
EndHandle handle_from_vertex(const Presentation& p, const VertexId& deep, int max_radius);

// All handles at a given base radius (one per infinite component).
std::vector<EndHandle> handles_at(const Presentation& p, int radius);

// The infinite components of G - B_{r2} inside h's last component, each
// extending the chain. r2 must exceed the handle's last radius.
std::vector<EndHandle> refine(const Presentation& p, const EndHandle& h, int r2);

// The component a handle designates at one of its chain radii.
EndComponent handle_component(const Presentation& p, const EndHandle& h, int radius,
                              int min_depth = 0);

// A region view: the handle's component at a radius together with its
// exact vertex- and edge-boundary.
struct RegionView {
    int radius = 0;
    VertexId key;
    bool infinite = false;
    std::vector<VertexId> members;  // explored part
    VertexSet boundary_v;
    std::vector<Edge> boundary_e;
    int boundary_e_size = 0;
};

RegionView region_of(const Presentation& p, const EndHandle& h, int radius);

}  // namespace endgraph
