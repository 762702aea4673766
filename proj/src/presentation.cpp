#include "endgraph/presentation.hpp"

#include <algorithm>

namespace endgraph {

VertexId Presentation::neighbor_at(const VertexId& v, std::size_t i) const {
    auto nb = neighbors(v);
    if (i >= nb.size()) throw InputError("neighbor index out of range for " + v);
    return nb[i];
}

bool Presentation::adjacent(const VertexId& u, const VertexId& v) const {
    if (!infinite_degree(u)) {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }
    if (!infinite_degree(v)) {
        auto nb = neighbors(v);
        return std::binary_search(nb.begin(), nb.end(), u);
    }
    throw IntegrityError("adjacency query between two infinite-degree vertices");
}

Ball ball(const Presentation& p, int radius) {
    if (radius < 0) throw InputError("ball radius must be >= 0");
    std::vector<VertexId> verts;
    for (int r = 0; r <= radius; ++r) {
        auto ls = p.level_set(r);
        for (const auto& v : ls) {
            if (p.level(v) != r)
                throw IntegrityError("level_set/level mismatch at " + v);
            verts.push_back(v);
        }
    }
    VertexSet inside(verts.begin(), verts.end());

    std::vector<Edge> edges;
    VertexSet frontier;
    for (const auto& v : verts) {
        if (p.infinite_degree(v)) {
            frontier.insert(v);  // infinitely many neighbours, only finitely many inside
            continue;
        }
        for (const auto& w : p.neighbors(v)) {
            if (!inside.count(w)) {
                frontier.insert(v);
                continue;
            }
            if (!p.infinite_degree(w) && !p.adjacent(w, v))
                throw IntegrityError("asymmetric adjacency: " + v + " -- " + w);
            if (v < w) edges.push_back({v, w, 1});
        }
    }
    Ball b;
    b.graph = FiniteGraph(verts, edges);
    b.radius = radius;
    b.frontier = std::move(frontier);
    return b;
}

void check_presentation_integrity(const Presentation& p, int max_radius) {
    if (p.level(p.root()) != 0) throw IntegrityError("root must have level 0");
    auto l0 = p.level_set(0);
    if (std::find(l0.begin(), l0.end(), p.root()) == l0.end())
        throw IntegrityError("root missing from level_set(0)");

    for (int r = 0; r <= max_radius; ++r) {
        auto ls = p.level_set(r);
        if (!std::is_sorted(ls.begin(), ls.end()))
            throw IntegrityError("level_set not sorted at radius " + std::to_string(r));
        for (const auto& v : ls) {
            if (p.infinite_degree(v)) {
                if (p.locally_finite())
                    throw IntegrityError("locally finite presentation reports infinite degree");
                continue;
            }
            auto nb = p.neighbors(v);
            if (!std::is_sorted(nb.begin(), nb.end()) ||
                std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw IntegrityError("neighbour list not sorted/unique at " + v);
            for (const auto& w : nb) {
                if (w == v) throw IntegrityError("loop at " + v);
                if (!p.adjacent(w, v)) throw IntegrityError("asymmetric edge " + v + " -- " + w);
                if (p.locally_finite() && std::abs(p.level(w) - p.level(v)) > 1)
                    throw IntegrityError("level grading violated on edge " + v + " -- " + w);
            }
        }
    }

    // Frontier soundness on a mid-size ball.
    auto b = ball(p, max_radius > 0 ? max_radius - 1 : 0);
    for (const auto& v : b.graph.ids()) {
        bool marked = b.frontier.count(v) > 0;
        bool actual = false;
        if (p.infinite_degree(v)) {
            actual = true;
        } else {
            for (const auto& w : p.neighbors(v))
                if (p.level(w) > b.radius) actual = true;
        }
        if (marked != actual) throw IntegrityError("frontier marking wrong at " + v);
    }
}

std::string fmt_nat(int i) {
    std::string s = std::to_string(i);
    while (s.size() < 3) s = "0" + s;
    return s;
}

std::string fmt_signed(int i) {
    if (i < 0) return "-" + fmt_nat(-i);
    return "+" + fmt_nat(i);
}

}  // namespace endgraph
