#include "gb/contraction.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gb {

namespace {

void require_connected(const Graph& g, const char* who) {
    if (g.vertex_count() == 0) throw std::invalid_argument(std::string(who) + ": graph is empty");
    if (!is_connected(g)) throw std::invalid_argument(std::string(who) + ": graph is not connected");
}

// Exact packed key of a labeled graph; collisions resolved by the set.
struct GraphKey {
    std::vector<std::uint64_t> words;
    bool operator==(const GraphKey& o) const { return words == o.words; }
};

struct GraphKeyHash {
    std::size_t operator()(const GraphKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : k.words) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

GraphKey graph_key(const Graph& g) {
    GraphKey k;
    k.words.push_back(static_cast<std::uint64_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (auto w : g.neighbors(v).words()) k.words.push_back(w);
    return k;
}

// Lexicographically smallest edge of G[D] (certificate has >= 1 edge).
Edge first_induced_edge(const Graph& g, const VertexSet& d) {
    for (const Edge& e : g.edges())
        if (d.test(e.u) && d.test(e.v)) return e;
    throw std::logic_error("first_induced_edge: set is stable");
}

// Two lexicographically smallest distinct edges of G[D].
std::pair<Edge, Edge> first_two_induced_edges(const Graph& g, const VertexSet& d) {
    std::vector<Edge> found;
    for (const Edge& e : g.edges()) {
        if (d.test(e.u) && d.test(e.v)) {
            found.push_back(e);
            if (found.size() == 2) return {found[0], found[1]};
        }
    }
    throw std::logic_error("first_two_induced_edges: fewer than two edges induced");
}

bool witness_drops_gamma(const Graph& g, int gamma_g, const std::vector<Edge>& witness) {
    Graph cur = replay_contractions(g, witness);
    return gamma(cur).gamma <= gamma_g - 1;
}

// Exhaustive search for a gamma-decreasing sequence of exactly `depth` more
// contractions, given that shorter sequences cannot decrease gamma below
// the target. Prefix-pruned by exact graph dedup per level.
struct BruteSearch {
    int gamma_target;  // success when gamma drops to <= gamma_target
    WorkBudget& budget;
    std::vector<std::unordered_set<GraphKey, GraphKeyHash>> seen;

    BruteSearch(int target, int kmax, WorkBudget& b) : gamma_target(target), budget(b), seen(kmax + 1) {}

    // Returns a completing edge sequence, or nullopt. `level` counts
    // contractions applied so far.
    std::optional<std::vector<Edge>> search(const Graph& g, int level, int kmax) {
        if (level == kmax) return std::nullopt;
        for (const Edge& e : g.edges()) {
            budget.tick();
            auto contracted = contract_edge(g, e);
            if (!seen[level + 1].insert(graph_key(contracted.graph)).second) continue;
            if (gamma(contracted.graph).gamma <= gamma_target) return std::vector<Edge>{e};
            auto deeper = search(contracted.graph, level + 1, kmax);
            if (deeper) {
                deeper->insert(deeper->begin(), e);
                return deeper;
            }
        }
        return std::nullopt;
    }
};

} // namespace

std::string to_string(CtValue v) {
    switch (v) {
        case CtValue::one: return "1";
        case CtValue::two: return "2";
        case CtValue::three: return "3";
        case CtValue::undefined_gamma_one: return "undefined";
    }
    return "?";
}

std::string to_string(CtBasis b) {
    switch (b) {
        case CtBasis::none: return "gamma_is_one";
        case CtBasis::nonstable_mds: return "nonstable_mds";
        case CtBasis::gamma_plus_one_two_edges: return "gamma_plus_one_two_edges";
        case CtBasis::upper_bound: return "upper_bound";
    }
    return "?";
}

Graph replay_contractions(const Graph& g, const std::vector<Edge>& witness) {
    Graph cur = g;
    for (const Edge& e : witness) cur = contract_edge(cur, e).graph;
    return cur;
}

ContractionNumber contraction_number(const Graph& g) {
    WorkBudget budget;
    return contraction_number(g, budget);
}

namespace {

ContractionNumber contraction_number_impl(const Graph& g, WorkBudget& budget, bool witness_for_three) {
    require_connected(g, "contraction_number");
    const int gam = gamma(g).gamma;
    ContractionNumber out;
    if (gam == 1) {
        out.value = CtValue::undefined_gamma_one;
        out.basis = CtBasis::none;
        return out;
    }
    if (auto nonstable = find_nonstable_mds(g)) {
        out.value = CtValue::one;
        out.basis = CtBasis::nonstable_mds;
        out.witness = {first_induced_edge(g, nonstable->set)};
        if (!witness_drops_gamma(g, gam, out.witness))
            throw std::logic_error("ct=1 witness failed replay check");
        return out;
    }
    if (auto fat = find_gamma_plus_one_with_two_edges(g)) {
        out.value = CtValue::two;
        out.basis = CtBasis::gamma_plus_one_two_edges;
        auto [e1, e2] = first_two_induced_edges(g, fat->set);
        auto step1 = contract_edge(g, e1);
        out.witness = {e1, map_edge(step1.old_to_new, e2)};
        if (!witness_drops_gamma(g, gam, out.witness))
            throw std::logic_error("ct=2 witness failed replay check");
        return out;
    }
    out.value = CtValue::three;
    out.basis = CtBasis::upper_bound;
    if (!witness_for_three) {
        out.witness_truncated = true;
        return out;
    }
    // witness by brute force; the characterizations already rule out k <= 2
    try {
        BruteSearch bs(gam - 1, 3, budget);
        if (auto w = bs.search(g, 0, 3)) {
            out.witness = *w;
            if (!witness_drops_gamma(g, gam, out.witness))
                throw std::logic_error("ct=3 witness failed replay check");
            return out;
        }
        throw std::logic_error("ct=3 brute-force witness search found nothing");
    } catch (const budget_exceeded&) {
        out.witness.clear();
        out.witness_truncated = true;
    }
    return out;
}

} // namespace

ContractionNumber contraction_number(const Graph& g, WorkBudget& budget) {
    return contraction_number_impl(g, budget, true);
}

KecResult decide_kec(const Graph& g, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("decide_kec: k must be 1, 2 or 3");
    WorkBudget budget;
    ContractionNumber cn = contraction_number_impl(g, budget, k >= 3);
    KecResult res;
    if (cn.value == CtValue::undefined_gamma_one) return res;
    if (static_cast<int>(cn.value) <= k) {
        res.yes = true;
        res.witness = cn.witness;
    }
    return res;
}

std::optional<CtBruteResult> ct_bruteforce(const Graph& g, int kmax) {
    WorkBudget budget;
    return ct_bruteforce(g, kmax, budget);
}

std::optional<CtBruteResult> ct_bruteforce(const Graph& g, int kmax, WorkBudget& budget) {
    require_connected(g, "ct_bruteforce");
    if (kmax < 1 || kmax > 3) throw std::invalid_argument("ct_bruteforce: kmax must be 1, 2 or 3");
    if (g.vertex_count() < 2) return std::nullopt;
    const int gam = gamma(g).gamma;
    for (int k = 1; k <= kmax; ++k) {
        BruteSearch bs(gam - 1, k, budget);
        if (auto w = bs.search(g, 0, k)) return CtBruteResult{k, *w};
    }
    return std::nullopt;
}

bool edge_contraction_decreases_gamma(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v))
        throw std::invalid_argument("edge_contraction_decreases_gamma: not an edge");
    const int gam = gamma(g).gamma;
    const Graph h = contract_edge(g, e).graph;
    return gamma(h).gamma <= gam - 1;
}

SelfReductionResult solve_domination_via_ec_oracle(const Graph& g, int ell) {
    require_connected(g, "solve_domination_via_ec_oracle");
    if (ell < 1) throw std::invalid_argument("solve_domination_via_ec_oracle: ell must be >= 1");
    SelfReductionResult res;
    Graph cur = g;
    int budget_ell = ell;
    while (cur.vertex_count() > 1) {
        Edge e = cur.edges().front();
        bool dec = edge_contraction_decreases_gamma(cur, e);
        cur = contract_edge(cur, e).graph;
        if (dec) --budget_ell;
        res.trace.push_back({e, dec, cur.vertex_count(), budget_ell});
    }
    res.yes = budget_ell >= 1;  // gamma of a single vertex is 1
    return res;
}

} // namespace gb
