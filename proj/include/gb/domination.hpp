#ifndef GB_DOMINATION_HPP
#define GB_DOMINATION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gb/graph.hpp"

namespace gb {

// A vertex set together with its recomputed domination facts.
struct DominationCertificate {
    VertexSet set;
    int size = 0;
    bool is_dominating = false;
    bool is_stable = false;
    int induced_edge_count = 0;

    std::string to_text() const;  // "size k: v1 v2 ... vk"
};

// Recomputes every certificate field from scratch.
DominationCertificate certify(const Graph& g, const VertexSet& set);

struct GammaResult {
    int gamma = 0;
    DominationCertificate witness;
};

// Exact domination number via branch and bound: branch over the closed
// neighborhood of the lowest-id undominated vertex, greedy upper bound,
// disjoint-closed-neighborhood packing lower bound. Deterministic.
GammaResult gamma(const Graph& g);

// Minimum dominating set containing all of `forced`.
GammaResult gamma_forced(const Graph& g, const VertexSet& forced);

// Minimum dominating set containing `forced` if one of size <= limit exists.
std::optional<GammaResult> gamma_forced_bounded(const Graph& g, const VertexSet& forced, int limit);

// Independent cross-check oracle: plain subset enumeration in increasing
// size, O(n^q). nullopt when gamma exceeds q.
std::optional<GammaResult> gamma_bounded(const Graph& g, int q);

// Every dominating set of size exactly gamma(g), each once, lexicographic.
std::vector<DominationCertificate> enumerate_minimum_dominating_sets(const Graph& g);

// Some minimum dominating set that is not stable, or nullopt if every
// minimum dominating set is stable. Decided by forcing each edge in turn.
std::optional<DominationCertificate> find_nonstable_mds(const Graph& g);

// A dominating set of size exactly gamma(g)+1 whose induced subgraph has at
// least two edges, or nullopt. Decided by forcing pairs of edges.
std::optional<DominationCertificate> find_gamma_plus_one_with_two_edges(const Graph& g);

} // namespace gb

#endif
