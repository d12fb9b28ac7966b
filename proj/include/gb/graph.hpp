#ifndef GB_GRAPH_HPP
#define GB_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gb/bitset.hpp"

namespace gb {

// Normalized undirected edge, u < v.
struct Edge {
    int u, v;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const { return u < o.u || (u == o.u && v < o.v); }
};

using VertexSet = Bitset;

// Simple undirected graph over vertex ids 0..n-1. No self-loops, no parallel
// edges. Values are treated as immutable once built; every operation below
// is a pure function returning a new graph. Optional per-vertex labels carry
// gadget provenance through the reduction builders.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}
    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (const Edge& e : edges) add_edge(e.u, e.v);
    }

    int vertex_count() const { return n_; }
    int edge_count() const {
        int s = 0;
        for (const auto& row : adj_) s += row.count();
        return s / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    void add_edge(int u, int v);

    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    Bitset closed_neighbors(int v) const {
        Bitset b = neighbors(v);
        b.set(v);
        return b;
    }
    int degree(int v) const { return neighbors(v).count(); }

    // All edges, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    const std::string& label(int v) const;
    // First vertex carrying the given label, or -1.
    int vertex_by_label(const std::string& label) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    void check_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

// Result of an operation that renumbers vertices. old_to_new[v] gives the id
// of v in the new graph (-1 if v was dropped).
struct MappedGraph {
    Graph graph;
    std::vector<int> old_to_new;
};

// Contracts edge e: endpoints merge into one vertex adjacent to the union of
// their neighborhoods, loops and parallels dropped. The merged vertex lands
// at position min(u,v); ids above max(u,v) shift down by one.
MappedGraph contract_edge(const Graph& g, Edge e);

// Replaces edge uv by the path u - s1 - ... - sk - v. New vertices get ids
// n..n+k-1 in path order, s1 adjacent to u (u < v after normalization).
Graph subdivide_edge(const Graph& g, Edge e, int k);

// 3-subdivides every edge, in sorted edge order. Original ids are preserved
// as a prefix; edge j (in sorted order) owns new ids n+3j, n+3j+1, n+3j+2.
Graph subdivide_all_edges_3(const Graph& g);

// BFS distance; nullopt when unreachable.
std::optional<int> distance(const Graph& g, int u, int v);

bool are_true_twins(const Graph& g, int u, int v);   // N[u] == N[v]
bool are_false_twins(const Graph& g, int u, int v);  // N(u) == N(v)

MappedGraph induced_subgraph(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
VertexSet neighborhood(const Graph& g, int u, bool closed);

// Applies old_to_new to an edge; endpoints must both survive and stay distinct.
Edge map_edge(const std::vector<int>& old_to_new, Edge e);

// Canonical edge-list text format: "n m" header, then one "u v" line per
// edge, 0-based ids, '#' comment lines ignored. The parser rejects
// self-loops, duplicates and out-of-range ids with line-numbered errors.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);
void write_edge_list(const Graph& g, std::ostream& out);
void write_labels(const Graph& g, std::ostream& out);

// Common fixtures.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

} // namespace gb

#endif
