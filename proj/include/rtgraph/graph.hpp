#ifndef RTGRAPH_GRAPH_HPP
#define RTGRAPH_GRAPH_HPP

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rtgraph/errors.hpp"

namespace rtg {

// Unordered vertex pair, normalized to (min, max). Vertex ids are 1-based.
using Edge = std::pair<int, int>;

using DegreeSequence = std::vector<int>;

// Simple undirected graph: no self-loops, no duplicate edges. The edge list
// is kept sorted, so equal graphs serialize identically.
//
// Text format ("edge-list"):
//   first data line:  "n m"
//   then m lines:     "u v"   (1-based vertex ids, whitespace-separated)
// Lines whose first non-space character is '#' are comments.
class Graph {
public:
    static Graph from_edge_list(int n, const std::vector<Edge>& pairs) {
        if (n < 1) throw ParameterTooSmallError("graph needs at least one vertex");
        std::vector<Edge> es;
        es.reserve(pairs.size());
        for (const auto& [a, b] : pairs) {
            if (a < 1 || a > n || b < 1 || b > n) {
                throw OutOfRangeError("edge endpoint outside 1.." + std::to_string(n));
            }
            if (a == b) throw SelfLoopError("self-loop at vertex " + std::to_string(a));
            es.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(es.begin(), es.end());
        const auto dup = std::adjacent_find(es.begin(), es.end());
        if (dup != es.end()) {
            throw DuplicateEdgeError("duplicate edge (" + std::to_string(dup->first) + "," +
                                     std::to_string(dup->second) + ")");
        }
        Graph g;
        g.n_ = n;
        g.edges_ = std::move(es);
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<std::string>& vertex_labels() const { return labels_; }
    void set_vertex_labels(std::vector<std::string> labels) {
        if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_)) {
            throw InvalidParamsError("label count must match vertex count");
        }
        labels_ = std::move(labels);
    }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        Edge e{std::min(u, v), std::max(u, v)};
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    // index 0 unused; neighbors of vertex v at [v]
    std::vector<std::vector<int>> adjacency_lists() const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_) + 1);
        for (const auto& [u, v] : edges_) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        return adj;
    }

    DegreeSequence degree_sequence() const {
        DegreeSequence deg(static_cast<std::size_t>(n_), 0);
        for (const auto& [u, v] : edges_) {
            ++deg[static_cast<std::size_t>(u - 1)];
            ++deg[static_cast<std::size_t>(v - 1)];
        }
        return deg;
    }

    // The common degree r, or nullopt if the graph is not regular.
    std::optional<int> is_regular() const {
        const auto deg = degree_sequence();
        if (deg.empty()) return std::nullopt;
        for (int d : deg) {
            if (d != deg[0]) return std::nullopt;
        }
        return deg[0];
    }

    // Breadth-first reachability from vertex 1. Decided combinatorially,
    // never spectrally.
    bool is_connected() const {
        if (n_ <= 1) return true;
        const auto adj = adjacency_lists();
        std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
        std::queue<int> q;
        q.push(1);
        seen[1] = 1;
        int reached = 1;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    ++reached;
                    q.push(v);
                }
            }
        }
        return reached == n_;
    }

    void serialize(std::ostream& os) const {
        os << n_ << " " << edges_.size() << "\n";
        for (const auto& [u, v] : edges_) os << u << " " << v << "\n";
    }

    std::string to_edge_list_string() const {
        std::ostringstream os;
        serialize(os);
        return os.str();
    }

    static Graph parse(std::istream& is) {
        std::vector<long> tokens;
        std::string line;
        while (std::getline(is, line)) {
            const auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            std::istringstream ls(line);
            long x;
            while (ls >> x) tokens.push_back(x);
            if (!ls.eof()) throw ParseError("non-numeric token in line: '" + line + "'");
        }
        if (tokens.size() < 2) throw ParseError("missing 'n m' header");
        const long n = tokens[0], m = tokens[1];
        if (n < 1) throw ParseError("vertex count must be positive");
        if (m < 0 || tokens.size() != static_cast<std::size_t>(2 + 2 * m)) {
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string((tokens.size() - 2) / 2));
        }
        std::vector<Edge> es;
        es.reserve(static_cast<std::size_t>(m));
        for (long i = 0; i < m; ++i) {
            es.emplace_back(static_cast<int>(tokens[2 + 2 * i]),
                            static_cast<int>(tokens[3 + 2 * i]));
        }
        return from_edge_list(static_cast<int>(n), es);
    }

    static Graph parse_string(const std::string& text) {
        std::istringstream is(text);
        return parse(is);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

// --- named families ---

inline Graph complete_graph(int n) {
    if (n < 2) throw ParameterTooSmallError("complete graph needs n >= 2");
    std::vector<Edge> es;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) es.emplace_back(u, v);
    return Graph::from_edge_list(n, es);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw ParameterTooSmallError("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int u = 1; u < n; ++u) es.emplace_back(u, u + 1);
    es.emplace_back(1, n);
    return Graph::from_edge_list(n, es);
}

// Parts {1..a} and {a+1..a+b}.
inline Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw ParameterTooSmallError("bipartite parts need a,b >= 1");
    std::vector<Edge> es;
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v) es.emplace_back(u, v);
    return Graph::from_edge_list(a + b, es);
}

// Outer cycle 1..5, inner pentagram 6..10, spokes i -> i+5.
inline Graph petersen_graph() {
    std::vector<Edge> es;
    for (int j = 0; j < 5; ++j) {
        es.emplace_back(1 + j, 1 + (j + 1) % 5);
        es.emplace_back(6 + j, 6 + (j + 2) % 5);
        es.emplace_back(1 + j, 6 + j);
    }
    return Graph::from_edge_list(10, es);
}

// d-dimensional hypercube on 2^d vertices; vertex v corresponds to the bit
// pattern v-1.
inline Graph hypercube_graph(int d) {
    if (d < 1) throw ParameterTooSmallError("hypercube needs d >= 1");
    if (d > 20) throw InvalidParamsError("hypercube dimension too large");
    const int n = 1 << d;
    std::vector<Edge> es;
    for (int x = 0; x < n; ++x) {
        for (int bit = 0; bit < d; ++bit) {
            const int y = x ^ (1 << bit);
            if (x < y) es.emplace_back(x + 1, y + 1);
        }
    }
    return Graph::from_edge_list(n, es);
}

// --- structural predicates used by the verification suites ---

inline bool is_complete(const Graph& g) {
    const long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

// Part sizes (a, b) if g is a complete bipartite graph, nullopt otherwise.
// The 2-coloring of a connected bipartite graph is unique, so this detects
// any isomorph, not just the canonical labeling.
inline std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
    if (!g.is_connected() || g.vertex_count() < 2) return std::nullopt;
    const int n = g.vertex_count();
    const auto adj = g.adjacency_lists();
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    std::queue<int> q;
    q.push(1);
    color[1] = 0;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (color[static_cast<std::size_t>(v)] == -1) {
                color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                q.push(v);
            } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                return std::nullopt; // odd cycle
            }
        }
    }
    long a = std::count(color.begin() + 1, color.end(), 0);
    long b = n - a;
    if (g.edge_count() != a * b) return std::nullopt;
    return std::make_pair(static_cast<int>(a), static_cast<int>(b));
}

} // namespace rtg

#endif
