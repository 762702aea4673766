#include "endgraph/finite_graph.hpp"

#include <algorithm>
#include <queue>

namespace endgraph {

FiniteGraph::FiniteGraph(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges) {
    ids_ = vertices;
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i) index_[ids_[i]] = i;

    for (const auto& e : edges) {
        if (e.u == e.v) throw InputError("loop edge rejected: " + e.u);
        if (e.mult < 1) throw InputError("edge multiplicity must be >= 1");
        auto iu = index_.find(e.u);
        auto iv = index_.find(e.v);
        if (iu == index_.end()) throw InputError("edge endpoint not a vertex: " + e.u);
        if (iv == index_.end()) throw InputError("edge endpoint not a vertex: " + e.v);
        int a = iu->second, b = iv->second;
        if (a > b) std::swap(a, b);
        mult_[{a, b}] += e.mult;
    }

    adj_.assign(ids_.size(), {});
    for (const auto& [pr, m] : mult_) {
        adj_[pr.first].push_back(pr.second);
        adj_[pr.second].push_back(pr.first);
        edges_.emplace_back(pr.first, pr.second, m);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int FiniteGraph::edge_count() const {
    int total = 0;
    for (const auto& [u, v, m] : edges_) total += m;
    return total;
}

int FiniteGraph::index_of(const VertexId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown vertex id: " + id);
    return it->second;
}

int FiniteGraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = mult_.find({u, v});
    return it == mult_.end() ? 0 : it->second;
}

int FiniteGraph::degree(int idx) const {
    int d = 0;
    for (int nb : adj_.at(idx)) d += multiplicity(idx, nb);
    return d;
}

FiniteGraph FiniteGraph::induced(const std::vector<int>& vertices) const {
    std::vector<bool> keep(n(), false);
    std::vector<VertexId> vs;
    for (int v : vertices) {
        if (v < 0 || v >= n()) throw InputError("vertex index out of range");
        if (!keep[v]) vs.push_back(ids_[v]);
        keep[v] = true;
    }
    std::vector<Edge> es;
    for (const auto& [u, v, m] : edges_)
        if (keep[u] && keep[v]) es.push_back({ids_[u], ids_[v], m});
    return FiniteGraph(vs, es);
}

FiniteGraph FiniteGraph::without_vertex(int idx) const {
    std::vector<int> vs;
    for (int i = 0; i < n(); ++i)
        if (i != idx) vs.push_back(i);
    return induced(vs);
}

FiniteGraph FiniteGraph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (multiplicity(u, v) == 0) throw InputError("edge not present");
    std::vector<Edge> es;
    for (const auto& [a, b, m] : edges_) {
        int mm = (a == u && b == v) ? m - 1 : m;
        if (mm > 0) es.push_back({ids_[a], ids_[b], mm});
    }
    return FiniteGraph(ids_, es);
}

std::vector<int> FiniteGraph::components() const {
    std::vector<bool> removed(n(), false);
    return components_after_removal(removed);
}

bool FiniteGraph::connected() const {
    if (n() == 0) return true;
    auto comp = components();
    for (int c : comp)
        if (c != comp[0]) return false;
    return true;
}

std::vector<int> FiniteGraph::components_after_removal(const std::vector<bool>& removed) const {
    std::vector<int> label(n(), -1);
    for (int s = 0; s < n(); ++s) {
        if (removed[s] || label[s] != -1) continue;
        label[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj_[x]) {
                if (removed[y] || label[y] != -1) continue;
                label[y] = s;
                q.push(y);
            }
        }
    }
    return label;
}

bool FiniteGraph::set_connected(const std::vector<int>& vertices) const {
    if (vertices.empty()) return true;
    std::set<int> inside(vertices.begin(), vertices.end());
    std::set<int> seen;
    std::queue<int> q;
    q.push(vertices[0]);
    seen.insert(vertices[0]);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj_[x]) {
            if (!inside.count(y) || seen.count(y)) continue;
            seen.insert(y);
            q.push(y);
        }
    }
    return seen.size() == inside.size();
}

std::vector<int> FiniteGraph::indices_of(const VertexSet& ids) const {
    std::vector<int> out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(index_of(id));
    return out;
}

VertexSet FiniteGraph::ids_of(const std::vector<int>& idxs) const {
    VertexSet out;
    for (int i : idxs) out.insert(ids_.at(i));
    return out;
}

VertexSet vertex_boundary(const FiniteGraph& g, const VertexSet& h) {
    VertexSet out;
    std::vector<bool> in(g.n(), false);
    for (int i : g.indices_of(h)) in[i] = true;
    for (int i = 0; i < g.n(); ++i) {
        if (!in[i]) continue;
        for (int nb : g.neighbors(i)) {
            if (!in[nb]) {
                out.insert(g.id_of(i));
                break;
            }
        }
    }
    return out;
}

std::vector<Edge> edge_boundary(const FiniteGraph& g, const VertexSet& h) {
    std::vector<Edge> out;
    std::vector<bool> in(g.n(), false);
    for (int i : g.indices_of(h)) in[i] = true;
    for (const auto& [u, v, m] : g.edges())
        if (in[u] != in[v]) out.push_back({g.id_of(u), g.id_of(v), m});
    return out;
}

int edge_boundary_size(const FiniteGraph& g, const VertexSet& h) {
    int total = 0;
    for (const auto& e : edge_boundary(g, h)) total += e.mult;
    return total;
}

}  // namespace endgraph
