#include "gb/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "gb/errors.hpp"

namespace gb {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0.." +
                                    std::to_string(n_ - 1) + "]");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw std::invalid_argument("label vector length must equal vertex count");
    labels_ = std::move(labels);
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    static const std::string empty;
    return has_labels() ? labels_[v] : empty;
}

int Graph::vertex_by_label(const std::string& label) const {
    for (int v = 0; v < n_ && has_labels(); ++v)
        if (labels_[v] == label) return v;
    return -1;
}

MappedGraph contract_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v))
        throw std::invalid_argument("contract_edge: (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") is not an edge");
    const int n = g.vertex_count();
    // merged vertex sits at e.u; e.v disappears; ids above e.v shift down
    std::vector<int> old_to_new(n);
    for (int v = 0; v < n; ++v) old_to_new[v] = v < e.v ? v : (v == e.v ? e.u : v - 1);

    Graph h(n - 1);
    for (int u = 0; u < n; ++u) {
        g.neighbors(u).for_each([&](int v) {
            if (u >= v) return;
            int a = old_to_new[u], b = old_to_new[v];
            if (a != b) h.add_edge(a, b);
        });
    }
    if (g.has_labels()) {
        std::vector<std::string> labels(n - 1);
        for (int v = 0; v < n; ++v) {
            if (v == e.v) continue;
            labels[old_to_new[v]] = g.label(v);
        }
        labels[e.u] = g.label(e.u) + "+" + g.label(e.v);
        h.set_labels(std::move(labels));
    }
    return {std::move(h), std::move(old_to_new)};
}

Graph subdivide_edge(const Graph& g, Edge e, int k) {
    if (k < 1) throw std::invalid_argument("subdivide_edge: k must be >= 1");
    if (!g.has_edge(e.u, e.v))
        throw std::invalid_argument("subdivide_edge: (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") is not an edge");
    const int n = g.vertex_count();
    Graph h(n + k);
    for (const Edge& f : g.edges())
        if (!(f == e)) h.add_edge(f.u, f.v);
    h.add_edge(e.u, n);
    for (int i = 1; i < k; ++i) h.add_edge(n + i - 1, n + i);
    h.add_edge(n + k - 1, e.v);
    if (g.has_labels()) {
        std::vector<std::string> labels = g.labels();
        for (int i = 1; i <= k; ++i)
            labels.push_back("e" + std::to_string(i) + "[" + std::to_string(e.u) + "-" +
                             std::to_string(e.v) + "]");
        h.set_labels(std::move(labels));
    }
    return h;
}

Graph subdivide_all_edges_3(const Graph& g) {
    const int n = g.vertex_count();
    const std::vector<Edge> es = g.edges();
    Graph h(n + 3 * static_cast<int>(es.size()));
    for (std::size_t j = 0; j < es.size(); ++j) {
        const int base = n + 3 * static_cast<int>(j);
        h.add_edge(es[j].u, base);
        h.add_edge(base, base + 1);
        h.add_edge(base + 1, base + 2);
        h.add_edge(base + 2, es[j].v);
    }
    if (g.has_labels()) {
        std::vector<std::string> labels = g.labels();
        for (const Edge& e : es)
            for (int i = 1; i <= 3; ++i)
                labels.push_back("e" + std::to_string(i) + "[" + std::to_string(e.u) + "-" +
                                 std::to_string(e.v) + "]");
        h.set_labels(std::move(labels));
    }
    return h;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return 0;
    std::vector<int> dist(g.vertex_count(), -1);
    dist[u] = 0;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        int found = -1;
        g.neighbors(x).for_each([&](int y) {
            if (dist[y] == -1) {
                dist[y] = dist[x] + 1;
                if (y == v) found = dist[y];
                q.push(y);
            }
        });
        if (found != -1) return found;
    }
    return std::nullopt;
}

bool are_true_twins(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("twin test requires distinct vertices");
    return g.closed_neighbors(u) == g.closed_neighbors(v);
}

bool are_false_twins(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("twin test requires distinct vertices");
    return g.neighbors(u) == g.neighbors(v);
}

MappedGraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.capacity() != g.vertex_count())
        throw std::invalid_argument("vertex set capacity does not match graph");
    const int n = g.vertex_count();
    std::vector<int> old_to_new(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (s.test(v)) old_to_new[v] = m++;
    Graph h(m);
    for (int u = 0; u < n; ++u) {
        if (!s.test(u)) continue;
        g.neighbors(u).for_each([&](int v) {
            if (u < v && s.test(v)) h.add_edge(old_to_new[u], old_to_new[v]);
        });
    }
    if (g.has_labels()) {
        std::vector<std::string> labels(m);
        for (int v = 0; v < n; ++v)
            if (s.test(v)) labels[old_to_new[v]] = g.label(v);
        h.set_labels(std::move(labels));
    }
    return {std::move(h), std::move(old_to_new)};
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    Bitset seen(n);
    seen.set(0);
    std::vector<int> stack{0};
    int cnt = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        g.neighbors(x).for_each([&](int y) {
            if (!seen.test(y)) {
                seen.set(y);
                ++cnt;
                stack.push_back(y);
            }
        });
    }
    return cnt == n;
}

VertexSet neighborhood(const Graph& g, int u, bool closed) {
    return closed ? g.closed_neighbors(u) : g.neighbors(u);
}

Edge map_edge(const std::vector<int>& old_to_new, Edge e) {
    int a = old_to_new.at(e.u), b = old_to_new.at(e.v);
    if (a < 0 || b < 0 || a == b)
        throw std::invalid_argument("map_edge: edge does not survive the mapping");
    return Edge(a, b);
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw input_error("edge list line " + std::to_string(line) + ": " + what);
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    long seen_edges = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        auto first = sv.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || sv[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) parse_fail(lineno, "expected header 'n m'");
            std::string rest;
            if (ls >> rest) parse_fail(lineno, "trailing tokens after header");
            g = Graph(static_cast<int>(n));
            continue;
        }
        long u, v;
        if (!(ls >> u >> v)) parse_fail(lineno, "expected edge 'u v'");
        std::string rest;
        if (ls >> rest) parse_fail(lineno, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(lineno, "vertex id out of range [0.." + std::to_string(n - 1) + "]");
        if (u == v) parse_fail(lineno, "self-loop");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) parse_fail(lineno, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen_edges;
    }
    if (n < 0) throw input_error("edge list: missing 'n m' header");
    if (seen_edges != m)
        throw input_error("edge list: header declares " + std::to_string(m) + " edges, found " +
                          std::to_string(seen_edges));
    return g;
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    const auto es = g.edges();
    out << g.vertex_count() << " " << es.size() << "\n";
    for (const Edge& e : es) out << e.u << " " << e.v << "\n";
}

void write_labels(const Graph& g, std::ostream& out) {
    for (int v = 0; v < g.vertex_count(); ++v) out << v << " " << g.label(v) << "\n";
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

} // namespace gb
