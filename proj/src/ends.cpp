#include "endgraph/ends.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace endgraph {

bool EndComponent::contains(const VertexId& v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

namespace {

struct Zone {
    std::vector<VertexId> verts;          // sorted
    std::vector<std::vector<int>> adj;    // indices into verts
    std::vector<bool> attached;           // has neighbour at level <= radius
};

int zone_index(const Zone& z, const VertexId& v) {
    auto it = std::lower_bound(z.verts.begin(), z.verts.end(), v);
    if (it == z.verts.end() || *it != v) return -1;
    return static_cast<int>(it - z.verts.begin());
}

// Induced structure on levels (radius, radius+depth].
Zone explore_zone(const Presentation& p, int radius, int depth) {
    Zone z;
    for (int l = radius + 1; l <= radius + depth; ++l) {
        auto ls = p.level_set(l);
        z.verts.insert(z.verts.end(), ls.begin(), ls.end());
    }
    std::sort(z.verts.begin(), z.verts.end());
    z.adj.assign(z.verts.size(), {});
    z.attached.assign(z.verts.size(), false);

    for (int i = 0; i < static_cast<int>(z.verts.size()); ++i) {
        const auto& v = z.verts[i];
        if (p.infinite_degree(v)) {
            // Edges to such vertices are collected from the finite side;
            // attachment needs a scan of the ball side.
            for (int l = 0; l <= radius && !z.attached[i]; ++l)
                for (const auto& u : p.level_set(l))
                    if (!p.infinite_degree(u) && p.adjacent(u, v)) {
                        z.attached[i] = true;
                        break;
                    }
            continue;
        }
        for (const auto& w : p.neighbors(v)) {
            int lw = p.level(w);
            if (lw <= radius) {
                z.attached[i] = true;
                continue;
            }
            int j = zone_index(z, w);
            if (j >= 0) z.adj[i].push_back(j);
        }
    }
    return z;
}

std::vector<EndComponent> components_from_zone(const Presentation& p, const Zone& z, int radius,
                                               int depth) {
    std::vector<int> label(z.verts.size(), -1);
    std::vector<EndComponent> out;
    for (int s = 0; s < static_cast<int>(z.verts.size()); ++s) {
        if (label[s] != -1) continue;
        std::vector<int> comp{s};
        label[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : z.adj[x]) {
                if (label[y] != -1) continue;
                label[y] = s;
                comp.push_back(y);
                q.push(y);
            }
        }
        EndComponent ec;
        ec.radius = radius;
        ec.explored_depth = depth;
        int deepest = radius;
        for (int idx : comp) {
            const auto& v = z.verts[idx];
            ec.members.push_back(v);
            deepest = std::max(deepest, p.level(v));
            if (z.attached[idx]) ec.attachment.insert(v);
        }
        std::sort(ec.members.begin(), ec.members.end());
        ec.infinite = deepest > radius + p.escape_margin();
        if (ec.attachment.empty()) {
            // A component of G - B_r with no door to the ball would mean a
            // disconnected presentation.
            throw IntegrityError("component without attachment at radius " +
                                 std::to_string(radius));
        }
        ec.key = *ec.attachment.begin();
        out.push_back(std::move(ec));
    }
    std::sort(out.begin(), out.end(),
              [](const EndComponent& a, const EndComponent& b) { return a.key < b.key; });
    return out;
}

}  // namespace

std::vector<EndComponent> components_beyond(const Presentation& p, int radius, int min_depth,
                                            bool strict) {
    int depth = std::max({p.escape_margin() + 1, p.component_horizon(), min_depth});
    Zone z = explore_zone(p, radius, depth);
    auto comps = components_from_zone(p, z, radius, depth);
    if (strict) {
        int depth2 = std::max(depth, 2 * p.escape_margin() + p.component_horizon() + 1);
        Zone z2 = explore_zone(p, radius, depth2);
        auto comps2 = components_from_zone(p, z2, radius, depth2);
        for (auto& c : comps) {
            for (const auto& c2 : comps2) {
                if (c2.key == c.key && c2.infinite != c.infinite) c.undecided = true;
            }
        }
    }
    return comps;
}

std::vector<EndComponent> end_components(const Presentation& p, int radius, bool strict) {
    std::vector<EndComponent> out;
    for (auto& c : components_beyond(p, radius, 0, strict))
        if (c.infinite || c.undecided) out.push_back(std::move(c));
    return out;
}

std::string EndHandle::spec() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) os << ">";
        os << chain[i].first << ":" << chain[i].second;
    }
    return os.str();
}

EndHandle handle_from_vertex(const Presentation& p, const VertexId& deep, int max_radius) {
    int lv = p.level(deep);
    if (lv <= max_radius)
        throw InputError("handle anchor must lie deeper than the last radius");
    EndHandle h;
    for (int r = 1; r <= max_radius; ++r) {
        auto comps = components_beyond(p, r, lv - r);
        const EndComponent* mine = nullptr;
        for (const auto& c : comps)
            if (c.contains(deep)) mine = &c;
        if (!mine) throw IntegrityError("anchor vertex not found beyond radius " + std::to_string(r));
        h.chain.emplace_back(r, mine->key);
    }
    return h;
}

std::vector<EndHandle> handles_at(const Presentation& p, int radius) {
    std::vector<EndHandle> out;
    for (const auto& c : end_components(p, radius)) {
        EndHandle h;
        h.chain.emplace_back(radius, c.key);
        out.push_back(std::move(h));
    }
    return out;
}

EndComponent handle_component(const Presentation& p, const EndHandle& h, int radius,
                              int min_depth) {
    for (const auto& [r, key] : h.chain) {
        if (r != radius) continue;
        for (auto& c : components_beyond(p, r, min_depth))
            if (c.key == key) return c;
        throw IntegrityError("handle component vanished at radius " + std::to_string(r));
    }
    throw InputError("radius not on the handle chain: " + std::to_string(radius));
}

std::vector<EndHandle> refine(const Presentation& p, const EndHandle& h, int r2) {
    int r1 = h.last_radius();
    if (r2 <= r1) throw InputError("refinement radius must exceed the handle's last radius");
    // Parent component re-explored deep enough to contain level r2+1.
    auto parent = handle_component(p, h, r1, r2 + 1 - r1);
    std::vector<EndHandle> out;
    for (const auto& c : end_components(p, r2)) {
        if (!parent.contains(c.key)) continue;
        EndHandle ext = h;
        ext.chain.emplace_back(r2, c.key);
        out.push_back(std::move(ext));
    }
    return out;
}

RegionView region_of(const Presentation& p, const EndHandle& h, int radius) {
    auto c = handle_component(p, h, radius);
    RegionView rv;
    rv.radius = radius;
    rv.key = c.key;
    rv.infinite = c.infinite;
    rv.members = c.members;
    rv.boundary_v = c.attachment;
    for (const auto& a : rv.boundary_v) {
        for (const auto& w : p.neighbors(a))
            if (p.level(w) <= radius) rv.boundary_e.push_back({a, w, 1});
    }
    rv.boundary_e_size = static_cast<int>(rv.boundary_e.size());
    return rv;
}

}  // namespace endgraph
