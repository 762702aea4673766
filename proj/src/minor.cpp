#include "endgraph/minor.hpp"

#include <algorithm>
#include <queue>

namespace endgraph {

Pattern Pattern::complete(int r) {
    Pattern pat;
    pat.p = r;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) pat.edges.emplace_back(i, j);
    return pat;
}

Pattern Pattern::grid(int cols, int rows) {
    Pattern pat;
    pat.p = cols * rows;
    auto node = [rows](int c, int r) { return c * rows + r; };
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) {
            if (r + 1 < rows) pat.edges.emplace_back(node(c, r), node(c, r + 1));
            if (c + 1 < cols) pat.edges.emplace_back(node(c, r), node(c + 1, r));
        }
    }
    return pat;
}

namespace {

// Branch-set search: host vertices are processed in BFS order and each
// is assigned to one branch set or left unused. Partial assignments are
// pruned when some branch set can no longer be connected using the
// unprocessed suffix, or when a set with no room to grow is missing a
// required adjacency.
struct MinorSearch {
    const FiniteGraph& g;
    const Pattern& pat;
    std::uint64_t budget;
    bool symmetric_labels;  // complete patterns: labels interchangeable

    std::vector<std::vector<bool>> pat_adj;
    std::vector<int> order;     // host vertices in processing order
    std::vector<int> rank;      // host vertex -> position in order
    std::vector<int> assign;    // host vertex -> pattern node or -1
    std::vector<std::vector<int>> sets;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool found = false;

    MinorSearch(const FiniteGraph& gg, const Pattern& pp, std::uint64_t b, bool sym)
        : g(gg), pat(pp), budget(b), symmetric_labels(sym) {
        pat_adj.assign(pat.p, std::vector<bool>(pat.p, false));
        for (auto [a, b2] : pat.edges) pat_adj[a][b2] = pat_adj[b2][a] = true;
        assign.assign(g.n(), -1);
        sets.resize(pat.p);

        // BFS order over all components, highest-degree start first.
        std::vector<int> verts(g.n());
        for (int i = 0; i < g.n(); ++i) verts[i] = i;
        std::sort(verts.begin(), verts.end(),
                  [&](int a, int bb) { return g.neighbors(a).size() > g.neighbors(bb).size(); });
        std::vector<bool> seen(g.n(), false);
        for (int s : verts) {
            if (seen[s]) continue;
            std::queue<int> q;
            q.push(s);
            seen[s] = true;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                order.push_back(x);
                for (int y : g.neighbors(x))
                    if (!seen[y]) {
                        seen[y] = true;
                        q.push(y);
                    }
            }
        }
        rank.assign(g.n(), 0);
        for (int i = 0; i < g.n(); ++i) rank[order[i]] = i;
    }

    bool sets_adjacent(int i, int j) const {
        for (int x : sets[i])
            for (int y : sets[j])
                if (g.adjacent(x, y)) return true;
        return false;
    }

    // True when every branch set is nonempty, connected, and all pattern
    // edges are realised: the partial assignment is already a minor.
    bool complete_now() const {
        for (int i = 0; i < pat.p; ++i) {
            if (sets[i].empty()) return false;
            if (!g.set_connected(sets[i])) return false;
        }
        for (auto [a, b] : pat.edges)
            if (!sets_adjacent(a, b)) return false;
        return true;
    }

    // Set i must be connectable inside sets[i] + unprocessed suffix.
    bool connect_feasible(int i, int pos) const {
        if (sets[i].size() <= 1) return true;
        std::vector<bool> allowed(g.n(), false);
        for (int v : sets[i]) allowed[v] = true;
        for (int p2 = pos; p2 < g.n(); ++p2)
            if (assign[order[p2]] == -1) allowed[order[p2]] = true;
        std::queue<int> q;
        std::vector<bool> vis(g.n(), false);
        q.push(sets[i][0]);
        vis[sets[i][0]] = true;
        int reached = 1;
        const int want = static_cast<int>(sets[i].size());
        while (!q.empty() && reached < want) {
            int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                if (!allowed[y] || vis[y]) continue;
                vis[y] = true;
                if (assign[y] == i) ++reached;
                q.push(y);
            }
        }
        return reached == want;
    }

    // A set is closed when no member has an unprocessed neighbour.
    bool closed_set(int i, int pos) const {
        for (int v : sets[i])
            for (int y : g.neighbors(v))
                if (assign[y] == -1 && rank[y] >= pos) return false;
        return true;
    }

    bool prune(int pos, int touched) {
        int empty = 0;
        for (int i = 0; i < pat.p; ++i)
            if (sets[i].empty()) ++empty;
        int future = 0;
        for (int p2 = pos; p2 < g.n(); ++p2)
            if (assign[order[p2]] == -1) ++future;
        if (empty > future) return true;

        for (int i = 0; i < pat.p; ++i) {
            if (sets[i].empty()) continue;
            if (!connect_feasible(i, pos)) return true;
            if (closed_set(i, pos)) {
                if (!g.set_connected(sets[i])) return true;
                for (int j = 0; j < pat.p; ++j) {
                    if (!pat_adj[i][j]) continue;
                    if (sets[j].empty()) return true;
                    if (!sets_adjacent(i, j) && closed_set(j, pos)) return true;
                }
            }
        }
        (void)touched;
        return false;
    }

    // Returns true when the search finished (found or space exhausted);
    // false only when the budget was hit.
    bool recurse(int pos) {
        if (found || budget_hit) return true;
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        if (complete_now()) {
            found = true;
            return true;
        }
        if (pos == g.n()) return true;
        int x = order[pos];

        int max_label = pat.p;
        if (symmetric_labels) {
            max_label = 0;
            while (max_label < pat.p && !sets[max_label].empty()) ++max_label;
            if (max_label < pat.p) ++max_label;  // first empty set is usable
        }
        for (int lab = 0; lab < max_label; ++lab) {
            assign[x] = lab;
            sets[lab].push_back(x);
            if (!prune(pos + 1, lab)) {
                recurse(pos + 1);
            }
            sets[lab].pop_back();
            assign[x] = -1;
            if (found || budget_hit) return !budget_hit;
        }
        // leave x unused
        if (!prune(pos + 1, -1)) recurse(pos + 1);
        return !budget_hit;
    }
};

}  // namespace

MinorResult find_minor(const FiniteGraph& g, const Pattern& pattern, std::uint64_t node_budget) {
    MinorResult res;
    if (pattern.p == 0) {
        res.outcome = SearchOutcome::Found;
        return res;
    }
    if (pattern.p > g.n()) {
        res.outcome = SearchOutcome::NoneFound;
        return res;
    }
    bool symmetric = true;
    for (int i = 0; i < pattern.p && symmetric; ++i)
        for (int j = i + 1; j < pattern.p && symmetric; ++j) {
            bool adj = false;
            for (auto [a, b] : pattern.edges)
                if ((a == i && b == j) || (a == j && b == i)) adj = true;
            if (!adj) symmetric = false;
        }
    MinorSearch search(g, pattern, node_budget, symmetric);
    search.recurse(0);
    res.nodes_used = search.nodes;
    if (search.found) {
        res.outcome = SearchOutcome::Found;
        for (const auto& s : search.sets) {
            std::vector<VertexId> ids;
            for (int v : s) ids.push_back(g.id_of(v));
            std::sort(ids.begin(), ids.end());
            res.cert.branch_sets.push_back(std::move(ids));
        }
    } else if (search.budget_hit) {
        res.outcome = SearchOutcome::Exhausted;
    } else {
        res.outcome = SearchOutcome::NoneFound;
    }
    return res;
}

MinorResult complete_minor(const FiniteGraph& g, int r, std::uint64_t node_budget) {
    if (r < 1) throw InputError("minor order must be >= 1");
    return find_minor(g, Pattern::complete(r), node_budget);
}

bool verify_minor_cert(const FiniteGraph& g, const Pattern& pattern, const MinorCert& cert) {
    if (static_cast<int>(cert.branch_sets.size()) != pattern.p) return false;
    std::set<VertexId> used;
    std::vector<std::vector<int>> idx_sets;
    for (const auto& bs : cert.branch_sets) {
        if (bs.empty()) return false;
        std::vector<int> idxs;
        for (const auto& v : bs) {
            if (used.count(v)) return false;
            used.insert(v);
            if (!g.has_vertex(v)) return false;
            idxs.push_back(g.index_of(v));
        }
        if (!g.set_connected(idxs)) return false;
        idx_sets.push_back(std::move(idxs));
    }
    for (auto [a, b] : pattern.edges) {
        bool adj = false;
        for (int x : idx_sets[a]) {
            for (int y : idx_sets[b])
                if (g.adjacent(x, y)) {
                    adj = true;
                    break;
                }
            if (adj) break;
        }
        if (!adj) return false;
    }
    return true;
}

}  // namespace endgraph
