#include "gb/domination.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gb {

namespace {

int count_induced_edges(const Graph& g, const VertexSet& set) {
    int c = 0;
    set.for_each([&](int u) { c += (g.neighbors(u) & set).count(); });
    return c / 2;
}

VertexSet dominated_by(const Graph& g, const VertexSet& set) {
    VertexSet dom(g.vertex_count());
    set.for_each([&](int v) {
        dom |= g.neighbors(v);
        dom.set(v);
    });
    return dom;
}

VertexSet full_set(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.set(v);
    return s;
}

// Branch and bound for minimum dominating sets, optionally with forced
// members and a size cutoff. Branching: lowest-id undominated vertex v, try
// each u in N[v] in id order, banning tried u's in later siblings so no set
// is explored twice. Prune on |chosen| + packing lower bound >= best.
struct BbSolver {
    const Graph& g;
    int n;
    std::vector<Bitset> closed;
    VertexSet everything;

    int best;                   // size of best solution found (limit+1 if none)
    std::vector<int> best_set;  // empty when none found
    bool enumerate = false;
    int enum_target = 0;
    std::set<std::vector<int>> enum_out;

    std::vector<int> chosen;

    explicit BbSolver(const Graph& g_) : g(g_), n(g_.vertex_count()), everything(full_set(n)) {
        closed.reserve(n);
        for (int v = 0; v < n; ++v) closed.push_back(g.closed_neighbors(v));
    }

    // Greedy completion of `base`; deterministic (max gain, lowest id).
    std::vector<int> greedy_complete(VertexSet dominated, std::vector<int> base) const {
        while (dominated != everything) {
            int bestv = -1, bestgain = 0;
            for (int v = 0; v < n; ++v) {
                int gain = (closed[v] - dominated).count();
                if (gain > bestgain) {
                    bestgain = gain;
                    bestv = v;
                }
            }
            base.push_back(bestv);  // an undominated vertex always has gain >= 1
            dominated |= closed[bestv];
        }
        return base;
    }

    // Greedy packing of undominated vertices whose allowed dominator sets are
    // pairwise disjoint; each needs its own dominator. Returns -1 when some
    // vertex has no allowed dominator at all.
    int lower_bound(const VertexSet& dominated, const VertexSet& banned) const {
        VertexSet used(n);
        int packed = 0;
        for (int v = 0; v < n; ++v) {
            if (dominated.test(v)) continue;
            Bitset allowed = closed[v] - banned;
            if (allowed.none()) return -1;
            if (!allowed.intersects(used)) {
                used |= allowed;
                ++packed;
            }
        }
        return packed;
    }

    void record() {
        if (enumerate) {
            if (static_cast<int>(chosen.size()) == enum_target) {
                std::vector<int> key = chosen;
                std::sort(key.begin(), key.end());
                enum_out.insert(std::move(key));
            }
            return;
        }
        if (static_cast<int>(chosen.size()) < best) {
            best = static_cast<int>(chosen.size());
            best_set = chosen;
            std::sort(best_set.begin(), best_set.end());
        }
    }

    void dfs(const VertexSet& dominated, VertexSet banned) {
        if (dominated == everything) {
            record();
            return;
        }
        const int bound = enumerate ? enum_target + 1 : best;
        int lb = lower_bound(dominated, banned);
        if (lb < 0) return;
        if (static_cast<int>(chosen.size()) + lb >= bound) return;
        int v = (everything - dominated).next();
        std::vector<int> cands = (closed[v] - banned).to_vector();
        for (int u : cands) {
            chosen.push_back(u);
            dfs(dominated | closed[u], banned);
            chosen.pop_back();
            banned.set(u);
            if (!enumerate && best <= lb + static_cast<int>(chosen.size())) break;
        }
    }

    // Returns best solution of size <= limit containing `forced`, if any.
    std::optional<std::vector<int>> solve(const VertexSet& forced, int limit) {
        chosen = forced.to_vector();
        if (static_cast<int>(chosen.size()) > limit) return std::nullopt;
        VertexSet dominated = dominated_by(g, forced);
        best = limit + 1;
        best_set.clear();
        std::vector<int> greedy = greedy_complete(dominated, chosen);
        if (static_cast<int>(greedy.size()) <= limit) {
            best = static_cast<int>(greedy.size());
            std::sort(greedy.begin(), greedy.end());
            best_set = std::move(greedy);
        }
        dfs(dominated, VertexSet(n));
        if (best_set.empty()) return std::nullopt;
        return best_set;
    }

    // All dominating sets of size exactly `size` containing nothing forced.
    std::set<std::vector<int>> enumerate_exact(int size) {
        enumerate = true;
        enum_target = size;
        chosen.clear();
        dfs(VertexSet(n), VertexSet(n));
        return std::move(enum_out);
    }
};

} // namespace

std::string DominationCertificate::to_text() const {
    std::ostringstream os;
    os << "size " << size << ":";
    set.for_each([&](int v) { os << " " << v; });
    return os.str();
}

DominationCertificate certify(const Graph& g, const VertexSet& set) {
    if (set.capacity() != g.vertex_count())
        throw std::invalid_argument("certify: set capacity does not match graph");
    DominationCertificate c;
    c.set = set;
    c.size = set.count();
    c.is_dominating = dominated_by(g, set) == full_set(g.vertex_count());
    c.induced_edge_count = count_induced_edges(g, set);
    c.is_stable = c.induced_edge_count == 0;
    return c;
}

GammaResult gamma(const Graph& g) {
    return gamma_forced(g, VertexSet(g.vertex_count()));
}

GammaResult gamma_forced(const Graph& g, const VertexSet& forced) {
    auto r = gamma_forced_bounded(g, forced, g.vertex_count());
    if (!r) throw std::invalid_argument("gamma: graph is empty");
    return *r;
}

std::optional<GammaResult> gamma_forced_bounded(const Graph& g, const VertexSet& forced, int limit) {
    if (g.vertex_count() == 0) return std::nullopt;
    BbSolver solver(g);
    auto sol = solver.solve(forced, std::min(limit, g.vertex_count()));
    if (!sol) return std::nullopt;
    GammaResult res;
    res.witness = certify(g, Bitset::of(g.vertex_count(), *sol));
    res.gamma = res.witness.size;
    return res;
}

std::optional<GammaResult> gamma_bounded(const Graph& g, int q) {
    if (g.vertex_count() == 0) throw std::invalid_argument("gamma_bounded: graph is empty");
    if (q < 1) throw std::invalid_argument("gamma_bounded: q must be >= 1");
    const int n = g.vertex_count();
    const VertexSet all = full_set(n);
    std::vector<int> comb;
    // enumerate subsets of size s in lexicographic order
    std::function<std::optional<std::vector<int>>(int, int)> search =
        [&](int start, int remaining) -> std::optional<std::vector<int>> {
        if (remaining == 0) {
            VertexSet s = Bitset::of(n, comb);
            if (dominated_by(g, s) == all) return comb;
            return std::nullopt;
        }
        for (int v = start; v <= n - remaining; ++v) {
            comb.push_back(v);
            auto r = search(v + 1, remaining - 1);
            if (r) return r;
            comb.pop_back();
        }
        return std::nullopt;
    };
    for (int s = 1; s <= std::min(q, n); ++s) {
        comb.clear();
        auto r = search(0, s);
        if (r) {
            GammaResult res;
            res.witness = certify(g, Bitset::of(n, *r));
            res.gamma = s;
            return res;
        }
    }
    return std::nullopt;
}

std::vector<DominationCertificate> enumerate_minimum_dominating_sets(const Graph& g) {
    const int gam = gamma(g).gamma;
    BbSolver solver(g);
    auto sets = solver.enumerate_exact(gam);
    std::vector<DominationCertificate> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(certify(g, Bitset::of(g.vertex_count(), s)));
    return out;  // std::set of sorted vectors is already lexicographic
}

std::optional<DominationCertificate> find_nonstable_mds(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    const int gam = gamma(g).gamma;
    for (const Edge& e : g.edges()) {
        VertexSet forced(g.vertex_count());
        forced.set(e.u);
        forced.set(e.v);
        auto r = gamma_forced_bounded(g, forced, gam);
        if (r) return r->witness;  // contains edge e, hence not stable
    }
    return std::nullopt;
}

std::optional<DominationCertificate> find_gamma_plus_one_with_two_edges(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    const int gam = gamma(g).gamma;
    if (gam + 1 > n) return std::nullopt;
    const auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            VertexSet forced(n);
            forced.set(es[i].u);
            forced.set(es[i].v);
            forced.set(es[j].u);
            forced.set(es[j].v);
            if (forced.count() > gam + 1) continue;
            auto r = gamma_forced_bounded(g, forced, gam + 1);
            if (!r) continue;
            VertexSet s = r->witness.set;
            // pad to exactly gamma+1 vertices if the minimum came in smaller
            for (int v = 0; s.count() < gam + 1 && v < n; ++v)
                if (!s.test(v)) s.set(v);
            DominationCertificate c = certify(g, s);
            if (c.size == gam + 1 && c.is_dominating && c.induced_edge_count >= 2) return c;
        }
    }
    return std::nullopt;
}

} // namespace gb
