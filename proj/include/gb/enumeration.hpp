#ifndef GB_ENUMERATION_HPP
#define GB_ENUMERATION_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "gb/graph.hpp"

namespace gb {

// Exact isomorphism test: color-refinement seeded backtracking. Desk scale
// (n up to ~30).
bool are_isomorphic(const Graph& a, const Graph& b);

// Connected graph on n vertices, packed into the upper triangle of a 64-bit
// word (n <= 11). bit index for u<v: v*(v-1)/2 + u.
struct PackedGraph {
    std::uint8_t n = 0;
    std::uint64_t bits = 0;
};

Graph unpack_graph(const PackedGraph& pg);
PackedGraph pack_graph(const Graph& g);

// All connected graphs on exactly n vertices, one per isomorphism class,
// generated by vertex augmentation. Memoized; generation for n=9 takes a
// few seconds. n <= 9 supported (10 would be ~12M classes).
const std::vector<PackedGraph>& connected_graphs(int n);

// Connected random graph: random spanning tree plus each remaining pair
// independently with probability edge_prob.
Graph random_connected_graph(int n, double edge_prob, std::mt19937_64& rng);

} // namespace gb

#endif
