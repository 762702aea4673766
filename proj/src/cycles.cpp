#include "endgraph/cycles.hpp"

#include <algorithm>
#include <queue>

namespace endgraph {

std::optional<int> girth(const FiniteGraph& g) {
    std::optional<int> best;
    for (const auto& [u, v, m] : g.edges()) {
        if (m >= 2) {
            best = best ? std::min(*best, 2) : 2;
            continue;
        }
        // Shortest u-v path avoiding this edge closes a shortest cycle
        // through it.
        std::vector<int> dist(g.n(), -1);
        std::queue<int> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty() && dist[v] == -1) {
            int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                if (x == u && y == v) continue;
                if (dist[y] != -1) continue;
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
        if (dist[v] != -1) {
            int cyc = dist[v] + 1;
            best = best ? std::min(*best, cyc) : cyc;
        }
    }
    return best;
}

namespace {

// DFS over paths anchored at a smallest vertex; intermediate vertices
// must exceed the anchor, and the second vertex must be smaller than the
// last one so every cycle appears in exactly one direction.
struct CycleSearch {
    const FiniteGraph& g;
    int max_len;
    const std::function<bool(const std::vector<int>&)>& emit;
    std::vector<int> path;
    std::vector<bool> on_path;
    bool stopped = false;

    CycleSearch(const FiniteGraph& gg, int ml,
                const std::function<bool(const std::vector<int>&)>& e)
        : g(gg), max_len(ml), emit(e), on_path(gg.n(), false) {}

    void run() {
        for (int s = 0; s < g.n() && !stopped; ++s) {
            path = {s};
            on_path[s] = true;
            extend(s, s);
            on_path[s] = false;
        }
    }

    void extend(int anchor, int cur) {
        if (stopped) return;
        for (int nxt : g.neighbors(cur)) {
            if (stopped) return;
            if (nxt == anchor && path.size() >= 3) {
                if (path[1] < path.back()) {
                    if (!emit(path)) stopped = true;
                }
                continue;
            }
            if (nxt <= anchor || on_path[nxt]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            path.push_back(nxt);
            on_path[nxt] = true;
            extend(anchor, nxt);
            on_path[nxt] = false;
            path.pop_back();
        }
    }
};

}  // namespace

void enumerate_cycles(const FiniteGraph& g, int max_len,
                      const std::function<bool(const std::vector<int>&)>& emit) {
    if (max_len < 2) return;
    // 2-cycles from parallel edges.
    for (const auto& [u, v, m] : g.edges()) {
        if (m >= 2) {
            if (!emit({u, v})) return;
        }
    }
    if (max_len < 3) return;
    CycleSearch search(g, max_len, emit);
    search.run();
}

std::vector<std::vector<int>> all_cycles(const FiniteGraph& g, int max_len) {
    std::vector<std::vector<int>> out;
    enumerate_cycles(g, max_len, [&](const std::vector<int>& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

FiniteGraph k_core(const FiniteGraph& g, int k) {
    std::vector<bool> removed(g.n(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n(); ++v) {
            if (removed[v]) continue;
            int d = 0;
            for (int nb : g.neighbors(v))
                if (!removed[nb]) d += g.multiplicity(v, nb);
            if (d < k) {
                removed[v] = true;
                changed = true;
            }
        }
    }
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) keep.push_back(v);
    return g.induced(keep);
}

}  // namespace endgraph
