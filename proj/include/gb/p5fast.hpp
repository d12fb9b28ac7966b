#ifndef GB_P5FAST_HPP
#define GB_P5FAST_HPP

#include <string>
#include <vector>

#include "gb/graph.hpp"

namespace gb {

enum class P5Case {
    dominating_vertex,         // no-instance for every k
    dominating_edge,           // some edge dominates: yes for k = 1, 2
    nonadjacent_pair_only,     // gamma = 2, every MDS stable
    triple_with_two_edges,     // k = 2 witness triple found
    gamma_at_least_three,      // yes by the structure of P5-free graphs
};

std::string to_string(P5Case c);

struct P5FastResult {
    bool yes = false;
    P5Case case_fired = P5Case::dominating_vertex;
    std::vector<Edge> witness;  // contraction sequence when available
    bool p5_warning = false;    // input turned out to contain an induced P5
};

// Polynomial decision procedure for k-edge-contraction of the domination
// number on P5-free graphs, k in {1,2}. The input is trusted to be P5-free;
// if a bounded scan happens to find an induced P5 anyway, the result carries
// a warning and no guarantee.
P5FastResult solve_p5_free(const Graph& g, int k);

} // namespace gb

#endif
