#ifndef GB_TREEWIDTH_HPP
#define GB_TREEWIDTH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gb/domination.hpp"
#include "gb/graph.hpp"

namespace gb {

struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;
    int width = -1;

    static TreeDecomposition make(std::vector<VertexSet> bags,
                                  std::vector<std::pair<int, int>> tree_edges);
};

// nullopt when valid; otherwise the violated invariant.
std::optional<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Min-fill elimination ordering heuristic; the result always satisfies the
// decomposition invariants, its width is only an upper bound on tw(g).
TreeDecomposition heuristic_tree_decomposition(const Graph& g);

// Exact domination number by 3-state dynamic programming (in set /
// dominated / not yet dominated) over a nice form of the decomposition.
GammaResult gamma_via_treewidth(const Graph& g, const TreeDecomposition& td);

// Same DP with vertices forced into the dominating set.
GammaResult gamma_via_treewidth_forced(const Graph& g, const TreeDecomposition& td,
                                       const VertexSet& forced);

// Merges the endpoints of a contracted edge inside every bag; remains a
// valid decomposition of the contracted graph, width never grows.
TreeDecomposition contract_decomposition(const TreeDecomposition& td,
                                         const std::vector<int>& old_to_new, int new_n);

// Brute force over contraction sequences of length <= k (k in {1,2}),
// recomputing gamma by DP on merged decompositions.
bool decide_kec_via_treewidth(const Graph& g, int k, const TreeDecomposition& td);

// PACE-style text format: "s td <num_bags> <width+1> <n>", bag lines
// "b <id> <v1> <v2> ...", then one "<id1> <id2>" line per tree edge;
// ids and vertices are 1-based, '#' and 'c' lines are comments.
void write_pace(const TreeDecomposition& td, int n, std::ostream& out);
TreeDecomposition parse_pace(std::istream& in);

} // namespace gb

#endif
