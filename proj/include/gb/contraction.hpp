#ifndef GB_CONTRACTION_HPP
#define GB_CONTRACTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "gb/budget.hpp"
#include "gb/domination.hpp"
#include "gb/graph.hpp"

namespace gb {

enum class CtValue { one = 1, two = 2, three = 3, undefined_gamma_one = 0 };

enum class CtBasis {
    none,                      // undefined (gamma = 1)
    nonstable_mds,             // ct = 1 characterization
    gamma_plus_one_two_edges,  // ct = 2 characterization
    upper_bound,               // ct = 3 by elimination and the general bound
};

std::string to_string(CtValue v);
std::string to_string(CtBasis b);

// Minimum number of edge contractions that drop gamma, always in {1,2,3}
// for connected graphs with gamma >= 2. witness[i] is an edge of the graph
// after the first i contractions (id maps chain through the sequence).
struct ContractionNumber {
    CtValue value = CtValue::undefined_gamma_one;
    CtBasis basis = CtBasis::none;
    std::vector<Edge> witness;
    bool witness_truncated = false;  // value == three and the witness search ran out of budget
};

// Decides ct via the two characterizations: gamma=1 -> undefined; some
// minimum dominating set not stable -> 1; some dominating set of size
// gamma+1 with two induced edges -> 2; otherwise 3. Witnesses are replayed
// and checked before returning.
ContractionNumber contraction_number(const Graph& g);
ContractionNumber contraction_number(const Graph& g, WorkBudget& budget);

struct KecResult {
    bool yes = false;
    std::vector<Edge> witness;
};

// Can at most k contractions decrease gamma? k must be 1, 2 or 3.
KecResult decide_kec(const Graph& g, int k);

struct CtBruteResult {
    int k = 0;
    std::vector<Edge> witness;
};

// Independent oracle: exhaustively tries contraction sequences of length
// 1..kmax, recomputing gamma each time; duplicate intermediate graphs are
// pruned by exact labeled-graph hashing. Desk scale only.
std::optional<CtBruteResult> ct_bruteforce(const Graph& g, int kmax);
std::optional<CtBruteResult> ct_bruteforce(const Graph& g, int kmax, WorkBudget& budget);

// gamma(g\e) <= gamma(g) - 1 ?
bool edge_contraction_decreases_gamma(const Graph& g, Edge e);

struct SelfReductionStep {
    Edge edge;
    bool decreased;
    int n_after;
    int ell_after;
};

struct SelfReductionResult {
    bool yes = false;
    std::vector<SelfReductionStep> trace;
};

// Decides gamma(g) <= ell through the per-edge decision alone: repeatedly
// contract an edge, decrementing ell exactly when the contraction decreases
// gamma, until a single vertex remains.
SelfReductionResult solve_domination_via_ec_oracle(const Graph& g, int ell);

// Applies a witness sequence, validating each edge; returns the final graph.
Graph replay_contractions(const Graph& g, const std::vector<Edge>& witness);

} // namespace gb

#endif
