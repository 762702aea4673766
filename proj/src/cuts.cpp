#include "endgraph/cuts.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace endgraph {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Minimal deterministic augmenting-path max flow. Arcs are stored in
// insertion order and BFS scans them in that order, so for a fixed
// network the flow (and thus every certificate) is reproducible.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int flow = 0;
    };
    std::vector<Arc> arcs;                  // arc 2i and 2i+1 are a pair
    std::vector<std::vector<int>> out;      // node -> arc indices

    explicit FlowNet(int nodes) : out(nodes) {}

    void add(int from, int to, int cap) {
        out[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        out[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    }

    int residual(int a) const { return arcs[a].cap - arcs[a].flow; }

    // One BFS augmentation; returns pushed amount (0 or 1 for unit caps,
    // but general caps are supported).
    int augment(int s, int t) {
        std::vector<int> via(out.size(), -1);
        std::vector<int> seen(out.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int x = q.front();
            q.pop();
            for (int a : out[x]) {
                if (residual(a) <= 0) continue;
                int y = arcs[a].to;
                if (seen[y]) continue;
                seen[y] = 1;
                via[y] = a;
                q.push(y);
            }
        }
        if (!seen[t]) return 0;
        int push = kInf;
        for (int y = t; y != s;) {
            int a = via[y];
            push = std::min(push, residual(a));
            y = arcs[a ^ 1].to;
        }
        for (int y = t; y != s;) {
            int a = via[y];
            arcs[a].flow += push;
            arcs[a ^ 1].flow -= push;
            y = arcs[a ^ 1].to;
        }
        return push;
    }

    int max_flow(int s, int t, int stop_at = kInf) {
        int total = 0;
        while (total < stop_at) {
            int p = augment(s, t);
            if (p == 0) break;
            total += p;
        }
        return total;
    }

    std::vector<bool> reachable(int s) const {
        std::vector<bool> r(out.size(), false);
        std::queue<int> q;
        q.push(s);
        r[s] = true;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int a : out[x]) {
                if (residual(a) <= 0) continue;
                int y = arcs[a].to;
                if (!r[y]) {
                    r[y] = true;
                    q.push(y);
                }
            }
        }
        return r;
    }

    // Decomposes the (integral) flow leaving s into arc paths; the flow
    // on consumed arcs is decremented. Circulations encountered along a
    // walk are spliced out (their flow is simply discarded).
    std::vector<std::vector<int>> decompose(int s, int t) {
        std::vector<std::vector<int>> node_paths;
        while (true) {
            std::vector<int> path{s};
            std::vector<int> used_arcs;
            int x = s;
            bool advanced = true;
            while (x != t && advanced) {
                advanced = false;
                for (int a : out[x]) {
                    if ((a & 1) || arcs[a].flow <= 0) continue;  // forward arcs only
                    arcs[a].flow -= 1;
                    x = arcs[a].to;
                    auto seen = std::find(path.begin(), path.end(), x);
                    if (seen != path.end()) {
                        path.erase(seen + 1, path.end());  // drop the circulation
                    } else {
                        path.push_back(x);
                    }
                    used_arcs.push_back(a);
                    advanced = true;
                    break;
                }
            }
            if (x != t) {
                for (int a : used_arcs) arcs[a].flow += 1;  // dead end: restore
                break;
            }
            node_paths.push_back(path);
        }
        return node_paths;
    }
};

void check_terminals(const FiniteGraph& g, const VertexSet& sources, const VertexSet& sinks) {
    if (sources.empty() || sinks.empty()) throw InputError("empty source or sink set");
    for (const auto& s : sources)
        if (sinks.count(s)) throw InputError("sources and sinks must be disjoint: " + s);
    for (const auto& s : sources) g.index_of(s);
    for (const auto& t : sinks) g.index_of(t);
}

}  // namespace

VertexCutResult min_vertex_cut(const FiniteGraph& g, const VertexSet& sources,
                               const VertexSet& sinks) {
    check_terminals(g, sources, sinks);
    VertexCutResult res;

    std::vector<bool> is_src(g.n(), false), is_snk(g.n(), false);
    for (int i : g.indices_of(sources)) is_src[i] = true;
    for (int i : g.indices_of(sinks)) is_snk[i] = true;
    for (int u = 0; u < g.n(); ++u) {
        if (!is_src[u]) continue;
        for (int v : g.neighbors(u))
            if (is_snk[v]) res.unseparable_pairs.emplace_back(g.id_of(u), g.id_of(v));
    }
    if (!res.unseparable_pairs.empty()) {
        res.unseparable = true;
        return res;
    }

    // Split every vertex; terminals get uncuttable internal arcs.
    const int n = g.n();
    auto in_node = [](int v) { return 2 * v; };
    auto out_node = [](int v) { return 2 * v + 1; };
    const int S = 2 * n, T = 2 * n + 1;
    FlowNet net(2 * n + 2);
    for (int v = 0; v < n; ++v)
        net.add(in_node(v), out_node(v), (is_src[v] || is_snk[v]) ? kInf : 1);
    for (const auto& [u, v, m] : g.edges()) {
        net.add(out_node(u), in_node(v), kInf);
        net.add(out_node(v), in_node(u), kInf);
    }
    for (int v = 0; v < n; ++v) {
        if (is_src[v]) net.add(S, in_node(v), kInf);
        if (is_snk[v]) net.add(out_node(v), T, kInf);
    }

    res.size = net.max_flow(S, T);

    auto reach = net.reachable(S);
    for (int v = 0; v < n; ++v) {
        if (!is_src[v] && !is_snk[v] && reach[in_node(v)] && !reach[out_node(v)]) {
            res.cut.separator.insert(g.id_of(v));
        } else if (reach[in_node(v)] || reach[out_node(v)]) {
            res.cut.side_a.insert(g.id_of(v));
        } else {
            res.cut.side_b.insert(g.id_of(v));
        }
    }

    for (const auto& np : net.decompose(S, T)) {
        Path p;
        for (std::size_t i = 1; i + 1 < np.size(); ++i) {
            int node = np[i];
            if (node % 2 == 0) p.push_back(g.id_of(node / 2));  // in-node marks the vertex
        }
        res.paths.push_back(std::move(p));
    }
    return res;
}

EdgeCutResult min_edge_cut(const FiniteGraph& g, const VertexSet& sources,
                           const VertexSet& sinks) {
    check_terminals(g, sources, sinks);
    EdgeCutResult res;

    std::vector<bool> is_src(g.n(), false), is_snk(g.n(), false);
    for (int i : g.indices_of(sources)) is_src[i] = true;
    for (int i : g.indices_of(sinks)) is_snk[i] = true;

    const int n = g.n();
    const int S = n, T = n + 1;
    FlowNet net(n + 2);
    for (const auto& [u, v, m] : g.edges()) {
        net.add(u, v, m);
        net.add(v, u, m);
    }
    for (int v = 0; v < n; ++v) {
        if (is_src[v]) net.add(S, v, kInf);
        if (is_snk[v]) net.add(v, T, kInf);
    }

    res.size = net.max_flow(S, T);

    auto reach = net.reachable(S);
    for (int v = 0; v < n; ++v)
        (reach[v] ? res.cut.side_a : res.cut.side_b).insert(g.id_of(v));
    for (const auto& [u, v, m] : g.edges())
        if (reach[u] != reach[v]) res.cut.cut_edges.push_back({g.id_of(u), g.id_of(v), m});

    for (const auto& np : net.decompose(S, T)) {
        Path p;
        for (std::size_t i = 1; i + 1 < np.size(); ++i) p.push_back(g.id_of(np[i]));
        res.paths.push_back(std::move(p));
    }
    return res;
}

bool verify_vertex_cut(const FiniteGraph& g, const VertexCut& cut) {
    if (cut.side_a.empty() || cut.side_b.empty()) return false;
    std::vector<int> where(g.n(), 0);  // 0 = separator, 1 = a, 2 = b
    int assigned = 0;
    for (const auto& v : cut.separator) { where[g.index_of(v)] = 0; ++assigned; }
    for (const auto& v : cut.side_a) { where[g.index_of(v)] = 1; ++assigned; }
    for (const auto& v : cut.side_b) { where[g.index_of(v)] = 2; ++assigned; }
    if (assigned != g.n()) return false;
    for (const auto& [u, v, m] : g.edges())
        if ((where[u] == 1 && where[v] == 2) || (where[u] == 2 && where[v] == 1)) return false;
    return true;
}

bool verify_edge_cut(const FiniteGraph& g, const EdgeCut& cut) {
    if (cut.side_a.empty() || cut.side_b.empty()) return false;
    std::vector<int> where(g.n(), -1);
    for (const auto& v : cut.side_a) where[g.index_of(v)] = 1;
    for (const auto& v : cut.side_b) where[g.index_of(v)] = 2;
    for (int i = 0; i < g.n(); ++i)
        if (where[i] == -1) return false;
    int crossing = 0;
    for (const auto& [u, v, m] : g.edges())
        if (where[u] != where[v]) crossing += m;
    int declared = 0;
    for (const auto& e : cut.cut_edges) declared += e.mult;
    return crossing == declared;
}

bool verify_disjoint_paths(const FiniteGraph& g, const std::vector<Path>& paths,
                           bool vertex_disjoint) {
    std::set<VertexId> interior_used;
    std::set<std::pair<int, int>> edges_used;
    std::map<std::pair<int, int>, int> edge_budget;
    for (const auto& [u, v, m] : g.edges()) edge_budget[{u, v}] = m;

    for (const auto& p : paths) {
        if (p.empty()) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            int a = g.index_of(p[i]), b = g.index_of(p[i + 1]);
            if (!g.adjacent(a, b)) return false;
            auto key = std::minmax(a, b);
            if (--edge_budget[{key.first, key.second}] < 0) return false;
        }
        if (vertex_disjoint) {
            for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                if (interior_used.count(p[i])) return false;
                interior_used.insert(p[i]);
            }
        }
    }
    return true;
}

namespace {

ConnectivityReport vertex_report(const FiniteGraph& g, int k) {
    ConnectivityReport rep;
    if (g.n() < k + 1) {
        rep.holds = false;
        rep.note = "fewer than k+1 vertices";
        return rep;
    }
    if (k <= 0) {
        rep.holds = g.n() > 0;
        return rep;
    }
    int best = kInf;
    std::optional<VertexCutResult> best_cut;
    bool any_pair = false;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.adjacent(u, v)) continue;
            any_pair = true;
            auto r = min_vertex_cut(g, {g.id_of(u)}, {g.id_of(v)});
            if (r.size < best) {
                best = r.size;
                best_cut = r;
                if (best < k) break;
            }
        }
        if (best < k) break;
    }
    if (!any_pair) {
        // Complete graph: connectivity n-1 by convention.
        rep.holds = g.n() - 1 >= k;
        rep.note = "complete graph";
        return rep;
    }
    if (!g.connected()) {
        rep.holds = false;
        auto comp = g.components();
        VertexCut cut;
        for (int i = 0; i < g.n(); ++i)
            (comp[i] == comp[0] ? cut.side_a : cut.side_b).insert(g.id_of(i));
        rep.violating_separator = cut;
        rep.note = "disconnected";
        return rep;
    }
    rep.holds = best >= k;
    if (!rep.holds) {
        rep.violating_separator = best_cut->cut;
    } else if (best_cut) {
        rep.certifying_paths = best_cut->paths;
    }
    return rep;
}

ConnectivityReport edge_report(const FiniteGraph& g, int k) {
    ConnectivityReport rep;
    if (k <= 0) {
        rep.holds = g.n() > 0;
        return rep;
    }
    if (g.n() < 2) {
        rep.holds = false;
        rep.note = "fewer than 2 vertices";
        return rep;
    }
    if (!g.connected()) {
        rep.holds = false;
        auto comp = g.components();
        EdgeCut cut;
        for (int i = 0; i < g.n(); ++i)
            (comp[i] == comp[0] ? cut.side_a : cut.side_b).insert(g.id_of(i));
        rep.violating_cut = cut;
        rep.note = "disconnected";
        return rep;
    }
    int best = kInf;
    std::optional<EdgeCutResult> best_cut;
    for (int v = 1; v < g.n(); ++v) {
        auto r = min_edge_cut(g, {g.id_of(0)}, {g.id_of(v)});
        if (r.size < best) {
            best = r.size;
            best_cut = r;
            if (best < k) break;
        }
    }
    rep.holds = best >= k;
    if (!rep.holds) {
        rep.violating_cut = best_cut->cut;
    } else if (best_cut) {
        rep.certifying_paths = best_cut->paths;
    }
    return rep;
}

}  // namespace

ConnectivityReport is_k_connected(const FiniteGraph& g, int k) { return vertex_report(g, k); }

ConnectivityReport is_k_edge_connected(const FiniteGraph& g, int k) { return edge_report(g, k); }

int vertex_connectivity(const FiniteGraph& g) {
    if (g.n() <= 1) return 0;
    if (!g.connected()) return 0;
    int best = g.n() - 1;
    bool any_pair = false;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.adjacent(u, v)) continue;
            any_pair = true;
            best = std::min(best, min_vertex_cut(g, {g.id_of(u)}, {g.id_of(v)}).size);
        }
    }
    (void)any_pair;
    return best;
}

int edge_connectivity(const FiniteGraph& g) {
    if (g.n() <= 1) return 0;
    if (!g.connected()) return 0;
    int best = kInf;
    for (int v = 1; v < g.n(); ++v)
        best = std::min(best, min_edge_cut(g, {g.id_of(0)}, {g.id_of(v)}).size);
    return best;
}

}  // namespace endgraph
