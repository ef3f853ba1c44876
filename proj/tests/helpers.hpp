#ifndef RTGRAPH_TESTS_HELPERS_HPP
#define RTGRAPH_TESTS_HELPERS_HPP

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rtgraph/graph.hpp"
#include "rtgraph/matrix.hpp"
#include "rtgraph/rational.hpp"

namespace rtg_test {

// Random spanning tree plus Bernoulli extra edges: always connected,
// deterministic under a seeded engine.
inline rtg::Graph random_connected_graph(std::mt19937& rng, int n_max) {
    const int n = std::uniform_int_distribution<int>(2, n_max)(rng);
    std::set<rtg::Edge> picked;
    for (int v = 2; v <= n; ++v) {
        const int u = std::uniform_int_distribution<int>(1, v - 1)(rng);
        picked.insert({u, v});
    }
    std::bernoulli_distribution extra(0.35);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (!picked.count({u, v}) && extra(rng)) picked.insert({u, v});
        }
    }
    return rtg::Graph::from_edge_list(n, {picked.begin(), picked.end()});
}

inline rtg::Rational random_rational(std::mt19937& rng, int num_mag = 9, int den_max = 9) {
    const long num = std::uniform_int_distribution<long>(-num_mag, num_mag)(rng);
    const long den = std::uniform_int_distribution<long>(1, den_max)(rng);
    return rtg::Rational(num, den);
}

inline rtg::Matrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                     int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> d(lo, hi);
    rtg::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rtg::Rational(d(rng));
    return m;
}

inline rtg::Matrix random_rational_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    rtg::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, 5, 4);
    return m;
}

// Complete multipartite recognizer: every non-adjacent pair must have identical
// neighborhoods (non-adjacency is then an equivalence whose classes are the parts).
inline bool is_complete_multipartite(const rtg::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
    for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (adj[u][v]) continue;
            for (int w = 1; w <= n; ++w)
                if (w != u && w != v && adj[u][w] != adj[v][w]) return false;
        }
    }
    return true;
}

struct NamedGraph {
    std::string id;
    rtg::Graph graph;
};

// The regular verification corpus used across the identity suites.
inline std::vector<NamedGraph> regular_corpus() {
    return {{"K2", rtg::complete_graph(2)},
            {"K3", rtg::complete_graph(3)},
            {"C4", rtg::cycle_graph(4)},
            {"C5", rtg::cycle_graph(5)},
            {"K4", rtg::complete_graph(4)},
            {"K33", rtg::complete_bipartite_graph(3, 3)},
            {"petersen", rtg::petersen_graph()},
            {"Q3", rtg::hypercube_graph(3)}};
}

} // namespace rtg_test

#endif
