#include "gb/p5fast.hpp"

#include <stdexcept>

#include "gb/recognition.hpp"

namespace gb {

namespace {

bool dominates_all(const Graph& g, const Bitset& closed_union) {
    return closed_union.count() == g.vertex_count();
}

} // namespace

std::string to_string(P5Case c) {
    switch (c) {
        case P5Case::dominating_vertex: return "dominating_vertex";
        case P5Case::dominating_edge: return "dominating_edge";
        case P5Case::nonadjacent_pair_only: return "nonadjacent_pair_only";
        case P5Case::triple_with_two_edges: return "triple_with_two_edges";
        case P5Case::gamma_at_least_three: return "gamma_at_least_three";
    }
    return "?";
}

P5FastResult solve_p5_free(const Graph& g, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("solve_p5_free: k must be 1 or 2");
    if (g.vertex_count() == 0 || !is_connected(g))
        throw std::invalid_argument("solve_p5_free: graph must be nonempty and connected");

    P5FastResult res;
    if (g.vertex_count() >= 5) {
        WorkBudget probe(200'000);
        PtFreeResult p5 = is_pt_free(g, 5, probe);
        res.p5_warning = p5.status == PtFreeResult::Status::has_induced_path;
    }
    const int n = g.vertex_count();

    // (1) a dominating vertex makes every k a no-instance
    for (int v = 0; v < n; ++v) {
        if (g.closed_neighbors(v).count() == n) {
            res.case_fired = P5Case::dominating_vertex;
            return res;
        }
    }

    // (2) a dominating edge is a nonstable minimum dominating set
    for (const Edge& e : g.edges()) {
        if (dominates_all(g, g.closed_neighbors(e.u) | g.closed_neighbors(e.v))) {
            res.yes = true;
            res.case_fired = P5Case::dominating_edge;
            res.witness = {e};
            return res;
        }
    }

    // (3) nonadjacent dominating pair: gamma = 2 and every MDS is stable
    bool has_pair = false;
    for (int u = 0; u < n && !has_pair; ++u)
        for (int v = u + 1; v < n && !has_pair; ++v)
            if (!g.has_edge(u, v) &&
                dominates_all(g, g.closed_neighbors(u) | g.closed_neighbors(v)))
                has_pair = true;
    if (has_pair) {
        if (k == 1) {
            res.case_fired = P5Case::nonadjacent_pair_only;
            return res;
        }
        // k = 2: look for a dominating triple carrying two edges
        for (int a = 0; a < n; ++a) {
            Bitset da = g.closed_neighbors(a);
            for (int b = a + 1; b < n; ++b) {
                Bitset dab = da | g.closed_neighbors(b);
                for (int c = b + 1; c < n; ++c) {
                    int edges = (g.has_edge(a, b) ? 1 : 0) + (g.has_edge(a, c) ? 1 : 0) +
                                (g.has_edge(b, c) ? 1 : 0);
                    if (edges < 2) continue;
                    if (!dominates_all(g, dab | g.closed_neighbors(c))) continue;
                    res.yes = true;
                    res.case_fired = P5Case::triple_with_two_edges;
                    // two lexicographically first edges of the triple, the
                    // second one re-expressed after the first contraction
                    std::vector<Edge> in_triple;
                    if (g.has_edge(a, b)) in_triple.emplace_back(a, b);
                    if (g.has_edge(a, c)) in_triple.emplace_back(a, c);
                    if (g.has_edge(b, c)) in_triple.emplace_back(b, c);
                    auto step1 = contract_edge(g, in_triple[0]);
                    res.witness = {in_triple[0], map_edge(step1.old_to_new, in_triple[1])};
                    return res;
                }
            }
        }
        res.case_fired = P5Case::nonadjacent_pair_only;
        return res;
    }

    // (4) no dominating set of size <= 2: gamma >= 3, and a P5-free graph
    // with gamma >= 3 always admits a single gamma-decreasing contraction
    res.yes = true;
    res.case_fired = P5Case::gamma_at_least_three;
    return res;
}

} // namespace gb
