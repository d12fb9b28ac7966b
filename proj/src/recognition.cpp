#include "gb/recognition.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gb {

namespace {

// Grows induced paths from each start vertex, extending at the right end.
// Any induced P_t is discovered from one of its endpoints, so right-end
// extension from every start is exhaustive.
struct InducedPathSearch {
    const Graph& g;
    int target;
    WorkBudget& budget;
    std::vector<int> path;
    Bitset on_path;
    Bitset blocked;  // neighbors of interior vertices; extension must avoid

    InducedPathSearch(const Graph& g_, int t, WorkBudget& b)
        : g(g_), target(t), budget(b), on_path(g_.vertex_count()), blocked(g_.vertex_count()) {}

    bool extend() {
        if (static_cast<int>(path.size()) == target) return true;
        if (!budget.try_tick()) throw budget_exceeded("induced path search budget");
        const int tail = path.back();
        // blocked holds all neighbors of interior path vertices, so the
        // remaining candidates extend the path while keeping it induced
        Bitset cand = g.neighbors(tail) - blocked;
        cand.reset(tail);
        bool found = false;
        cand.for_each([&](int v) {
            if (found || on_path.test(v)) return;
            path.push_back(v);
            on_path.set(v);
            Bitset saved_blocked = blocked;
            blocked |= g.neighbors(tail);
            if (extend()) {
                found = true;
                return;
            }
            blocked = saved_blocked;
            on_path.reset(v);
            path.pop_back();
        });
        return found;
    }

    std::optional<std::vector<int>> run() {
        for (int s = 0; s < g.vertex_count(); ++s) {
            path = {s};
            on_path.clear();
            on_path.set(s);
            blocked.clear();
            if (target == 1 || extend()) return path;
        }
        return std::nullopt;
    }
};

} // namespace

PtFreeResult is_pt_free(const Graph& g, int t) {
    WorkBudget budget;
    return is_pt_free(g, t, budget);
}

PtFreeResult is_pt_free(const Graph& g, int t, WorkBudget& budget) {
    if (t < 2 || t > 12) throw std::invalid_argument("is_pt_free: t must be in 2..12");
    PtFreeResult res;
    try {
        InducedPathSearch search(g, t, budget);
        if (auto p = search.run()) {
            res.status = PtFreeResult::Status::has_induced_path;
            res.path = *p;
        }
    } catch (const budget_exceeded&) {
        res.status = PtFreeResult::Status::budget_exceeded;
    }
    return res;
}

bool is_2k2_free(const Graph& g) {
    const auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        Bitset reach = g.neighbors(es[i].u) | g.neighbors(es[i].v);
        reach.set(es[i].u);
        reach.set(es[i].v);
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!reach.test(es[j].u) && !reach.test(es[j].v)) return false;
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        bool ok = true;
        while (!q.empty() && ok) {
            int x = q.front();
            q.pop();
            g.neighbors(x).for_each([&](int y) {
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    q.push(y);
                } else if (color[y] == color[x]) {
                    ok = false;
                }
            });
        }
        if (!ok) return false;
    }
    return true;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    // BFS from every root; a non-tree edge closes a walk of length
    // dist(a)+dist(b)+1 which contains a cycle no longer than that, and the
    // shortest cycle is found exactly from any of its vertices.
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            bool done = false;
            g.neighbors(x).for_each([&](int y) {
                if (done) return;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (y != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best == -1 || len < best) best = len;
                    if (best == 3) done = true;
                }
            });
            if (best == 3) break;
        }
        if (best == 3) break;
    }
    if (best == -1) return std::nullopt;
    return best;
}

bool is_cl_free_up_to(const Graph& g, int l) {
    if (l < 3) throw std::invalid_argument("is_cl_free_up_to: l must be >= 3");
    auto gi = girth(g);
    return !gi || *gi > l;
}

ClassReport class_report(const Graph& g) {
    ClassReport r;
    r.bipartite = is_bipartite(g);
    r.girth = girth(g);
    r.is_2k2_free = is_2k2_free(g);
    r.longest_induced_path_order = g.vertex_count() >= 1 ? 1 : 0;
    for (int t = 2; t <= std::min(12, g.vertex_count()); ++t) {
        PtFreeResult res = is_pt_free(g, t);
        if (res.status == PtFreeResult::Status::budget_exceeded)
            throw budget_exceeded("class_report: induced path scan exceeded budget");
        if (res.status == PtFreeResult::Status::pt_free) break;
        r.longest_induced_path_order = t;  // order is capped at 12
    }
    return r;
}

} // namespace gb
