#ifndef GB_RECOGNITION_HPP
#define GB_RECOGNITION_HPP

#include <optional>
#include <vector>

#include "gb/budget.hpp"
#include "gb/graph.hpp"

namespace gb {

struct PtFreeResult {
    enum class Status { pt_free, has_induced_path, budget_exceeded };
    Status status = Status::pt_free;
    std::vector<int> path;  // a violating induced path when found

    bool is_free() const { return status == Status::pt_free; }
};

// Induced-P_t detection by DFS extension of induced paths. Recognition is a
// validation aid, so the search carries a work budget; t is capped at 12.
PtFreeResult is_pt_free(const Graph& g, int t);
PtFreeResult is_pt_free(const Graph& g, int t, WorkBudget& budget);

// No two edges at distance >= 2 from each other.
bool is_2k2_free(const Graph& g);

bool is_bipartite(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// {C3,...,Cl}-free, decided as girth > l (a shortest cycle is induced).
bool is_cl_free_up_to(const Graph& g, int l);

struct ClassReport {
    bool bipartite = false;
    std::optional<int> girth;  // nullopt = infinite
    int longest_induced_path_order = 0;
    bool is_2k2_free = false;
};

// Full report; throws budget_exceeded if the induced-path scan cannot finish.
ClassReport class_report(const Graph& g);

} // namespace gb

#endif
