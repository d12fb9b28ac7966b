#include "gb/enumeration.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace gb {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Iterated color refinement; returns per-vertex colors (as hashes).
std::vector<std::uint64_t> wl_colors(const Graph& g, int rounds) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> color(n), next(n);
    for (int v = 0; v < n; ++v) color[v] = splitmix(static_cast<std::uint64_t>(g.degree(v)));
    std::vector<std::uint64_t> buf;
    for (int r = 0; r < rounds; ++r) {
        for (int v = 0; v < n; ++v) {
            buf.clear();
            g.neighbors(v).for_each([&](int u) { buf.push_back(color[u]); });
            std::sort(buf.begin(), buf.end());
            std::uint64_t h = color[v];
            for (std::uint64_t c : buf) h = splitmix(h ^ c);
            next[v] = h;
        }
        color.swap(next);
    }
    return color;
}

std::uint64_t invariant_key(const Graph& g) {
    std::vector<std::uint64_t> colors = wl_colors(g, 3);
    std::sort(colors.begin(), colors.end());
    std::uint64_t h = splitmix(static_cast<std::uint64_t>(g.vertex_count()) * 131 +
                               static_cast<std::uint64_t>(g.edge_count()));
    for (std::uint64_t c : colors) h = splitmix(h ^ c);
    return h;
}

// Backtracking vertex-map search. Candidates are constrained to matching WL
// colors; partial maps must preserve adjacency both ways.
struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<std::uint64_t> ca, cb;
    std::vector<int> map_ab;  // a-vertex -> b-vertex or -1
    std::vector<bool> used_b;
    std::vector<int> order;  // a-vertices, rarest color first

    IsoSearch(const Graph& a_, const Graph& b_) : a(a_), b(b_) {}

    bool run() {
        const int n = a.vertex_count();
        ca = wl_colors(a, 3);
        cb = wl_colors(b, 3);
        {
            auto sa = ca, sb = cb;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb) return false;
        }
        std::map<std::uint64_t, int> freq;
        for (auto c : ca) ++freq[c];
        order.resize(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (freq[ca[x]] != freq[ca[y]]) return freq[ca[x]] < freq[ca[y]];
            return x < y;
        });
        map_ab.assign(n, -1);
        used_b.assign(n, false);
        return extend(0);
    }

    bool extend(int depth) {
        const int n = a.vertex_count();
        if (depth == n) return true;
        int va = order[depth];
        for (int vb = 0; vb < n; ++vb) {
            if (used_b[vb] || cb[vb] != ca[va]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int wa = order[d];
                if (a.has_edge(va, wa) != b.has_edge(vb, map_ab[wa])) ok = false;
            }
            if (!ok) continue;
            map_ab[va] = vb;
            used_b[vb] = true;
            if (extend(depth + 1)) return true;
            used_b[vb] = false;
            map_ab[va] = -1;
        }
        return false;
    }
};

} // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.vertex_count() == 0) return true;
    IsoSearch s(a, b);
    return s.run();
}

Graph unpack_graph(const PackedGraph& pg) {
    Graph g(pg.n);
    int idx = 0;
    for (int v = 1; v < pg.n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((pg.bits >> idx) & 1) g.add_edge(u, v);
    return g;
}

PackedGraph pack_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw std::invalid_argument("pack_graph: n > 11");
    PackedGraph pg;
    pg.n = static_cast<std::uint8_t>(n);
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if (g.has_edge(u, v)) pg.bits |= std::uint64_t{1} << idx;
    return pg;
}

namespace {

// Augment each graph of the previous level by one vertex with every nonempty
// neighborhood; every connected graph on k+1 vertices arises this way from a
// connected graph on k vertices (delete a non-cutvertex). Deduplicate up to
// isomorphism via invariant buckets plus exact checks.
std::vector<PackedGraph> build_level(const std::vector<PackedGraph>& prev) {
    std::vector<PackedGraph> out;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    const int k = prev.empty() ? 0 : prev[0].n;
    const int tri_base = k * (k - 1) / 2;
    for (const PackedGraph& p : prev) {
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
            PackedGraph cand{static_cast<std::uint8_t>(k + 1),
                             p.bits | (s << tri_base)};
            Graph g = unpack_graph(cand);
            std::uint64_t key = invariant_key(g);
            auto& bucket = buckets[key];
            bool dup = false;
            for (std::uint32_t idx : bucket) {
                if (are_isomorphic(g, unpack_graph(out[idx]))) {
                    dup = true;
                    break;
                }
            }
            if (!dup) {
                bucket.push_back(static_cast<std::uint32_t>(out.size()));
                out.push_back(cand);
            }
        }
    }
    return out;
}

} // namespace

const std::vector<PackedGraph>& connected_graphs(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("connected_graphs: n must be in 1..9");
    static std::vector<std::vector<PackedGraph>> levels = [] {
        std::vector<std::vector<PackedGraph>> ls(1);
        ls.push_back({PackedGraph{1, 0}});
        return ls;
    }();
    while (static_cast<int>(levels.size()) <= n) levels.push_back(build_level(levels.back()));
    return levels[n];
}

Graph random_connected_graph(int n, double edge_prob, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n must be >= 1");
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && coin(rng) < edge_prob) g.add_edge(u, v);
    return g;
}

} // namespace gb
