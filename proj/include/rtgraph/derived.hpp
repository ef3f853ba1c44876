#ifndef RTGRAPH_DERIVED_HPP
#define RTGRAPH_DERIVED_HPP

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rtgraph/graph.hpp"
#include "rtgraph/matrix.hpp"

namespace rtg {

// 1-based inclusive range of vertex ids; empty when last < first.
struct VertexRange {
    int first = 1;
    int last = 0;
    int size() const { return last < first ? 0 : last - first + 1; }
    bool empty() const { return last < first; }
};

enum class DerivedKind { r_graph, rt_graph };

// A graph produced by one of the triangle operators, together with the
// vertex partition that fixes its block ordering: edge-vertices I(G) first,
// then the original vertices V(G), then W1, then W2 (W ranges empty for the
// edge-only operator).
struct DerivedGraph {
    Graph graph;
    DerivedKind kind = DerivedKind::r_graph;
    VertexRange edge_vertices;     // I(G), one vertex per original edge
    VertexRange original_vertices; // V(G)
    VertexRange w1, w2;

    void serialize(std::ostream& os) const {
        os << "# derived: " << (kind == DerivedKind::r_graph ? "r" : "rt") << "\n";
        os << "# partition: I=" << edge_vertices.first << ".." << edge_vertices.last
           << " V=" << original_vertices.first << ".." << original_vertices.last;
        if (!w1.empty()) {
            os << " W1=" << w1.first << ".." << w1.last
               << " W2=" << w2.first << ".." << w2.last;
        }
        os << "\n";
        graph.serialize(os);
    }

    std::string to_edge_list_string() const {
        std::ostringstream os;
        serialize(os);
        return os.str();
    }
};

// R(G): one new vertex per edge, joined to both endpoints of that edge
// (each edge of G becomes a triangle). Vertex layout: edge-vertices 1..m,
// originals m+1..m+n.
inline DerivedGraph r_graph(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Edge> es;
    es.reserve(3 * static_cast<std::size_t>(m));
    const auto& edges = g.edges();
    for (int j = 0; j < m; ++j) {
        const auto& [u, v] = edges[static_cast<std::size_t>(j)];
        es.emplace_back(m + u, m + v);
        es.emplace_back(j + 1, m + u);
        es.emplace_back(j + 1, m + v);
    }
    DerivedGraph out;
    out.graph = Graph::from_edge_list(n + m, es);
    out.kind = DerivedKind::r_graph;
    out.edge_vertices = {1, m};
    out.original_vertices = {m + 1, m + n};
    return out;
}

// RT(G): R(G) plus one new edge (w1_i, w2_i) per original vertex, with both
// ends joined to that vertex (each vertex of G becomes a triangle as well).
// Vertex layout: edge-vertices 1..m, originals m+1..m+n, W1 m+n+1..m+2n,
// W2 m+2n+1..m+3n. Total 3n+m vertices and 3n+3m edges.
inline DerivedGraph rt_graph(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Edge> es;
    es.reserve(3 * static_cast<std::size_t>(m) + 3 * static_cast<std::size_t>(n));
    const auto& edges = g.edges();
    for (int j = 0; j < m; ++j) {
        const auto& [u, v] = edges[static_cast<std::size_t>(j)];
        es.emplace_back(m + u, m + v);
        es.emplace_back(j + 1, m + u);
        es.emplace_back(j + 1, m + v);
    }
    for (int i = 1; i <= n; ++i) {
        es.emplace_back(m + i, m + n + i);
        es.emplace_back(m + i, m + 2 * n + i);
        es.emplace_back(m + n + i, m + 2 * n + i);
    }
    DerivedGraph out;
    out.graph = Graph::from_edge_list(3 * n + m, es);
    out.kind = DerivedKind::rt_graph;
    out.edge_vertices = {1, m};
    out.original_vertices = {m + 1, m + n};
    out.w1 = {m + n + 1, m + 2 * n};
    out.w2 = {m + 2 * n + 1, m + 3 * n};
    return out;
}

// Line graph: vertices are the edges of g in canonical order, adjacent iff
// the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    const int m = g.edge_count();
    if (m == 0) throw ParameterTooSmallError("line graph of an edgeless graph is empty");
    const auto& edges = g.edges();
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const auto& a = edges[static_cast<std::size_t>(i)];
            const auto& b = edges[static_cast<std::size_t>(j)];
            if (a.first == b.first || a.first == b.second ||
                a.second == b.first || a.second == b.second) {
                es.emplace_back(i + 1, j + 1);
            }
        }
    }
    return Graph::from_edge_list(m, es);
}

// Vertex-edge incidence matrix B, n x m, columns in canonical edge order.
inline Matrix incidence_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const auto m = static_cast<std::size_t>(g.edge_count());
    Matrix b(n, m);
    const auto& edges = g.edges();
    for (std::size_t j = 0; j < m; ++j) {
        b(static_cast<std::size_t>(edges[j].first) - 1, j) = Rational(1);
        b(static_cast<std::size_t>(edges[j].second) - 1, j) = Rational(1);
    }
    return b;
}

} // namespace rtg

#endif
