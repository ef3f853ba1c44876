#ifndef RTGRAPH_SPECTRA_HPP
#define RTGRAPH_SPECTRA_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "rtgraph/errors.hpp"
#include "rtgraph/graph.hpp"
#include "rtgraph/matrix.hpp"
#include "rtgraph/polynomial.hpp"

namespace rtg {

// Sorted eigenvalue list of a symmetric matrix plus the count of entries
// classified as zero. Numeric only; the exact engines never touch this.
struct Spectrum {
    std::vector<double> values; // ascending
    int zero_count = 0;
};

// Resistance distances r_ij as an n x n symmetric rational matrix with zero
// diagonal.
using ResistanceMatrix = Matrix;

inline Matrix adjacency_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    Matrix a(n, n);
    for (const auto& [u, v] : g.edges()) {
        a(static_cast<std::size_t>(u) - 1, static_cast<std::size_t>(v) - 1) = Rational(1);
        a(static_cast<std::size_t>(v) - 1, static_cast<std::size_t>(u) - 1) = Rational(1);
    }
    return a;
}

inline Matrix degree_matrix(const Graph& g) {
    const auto deg = g.degree_sequence();
    Matrix d(deg.size(), deg.size());
    for (std::size_t i = 0; i < deg.size(); ++i) d(i, i) = Rational(deg[i]);
    return d;
}

// L(G) = D(G) - A(G)
inline Matrix laplacian_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    Matrix l(n, n);
    const auto deg = g.degree_sequence();
    for (std::size_t i = 0; i < n; ++i) l(i, i) = Rational(deg[i]);
    for (const auto& [u, v] : g.edges()) {
        l(static_cast<std::size_t>(u) - 1, static_cast<std::size_t>(v) - 1) = Rational(-1);
        l(static_cast<std::size_t>(v) - 1, static_cast<std::size_t>(u) - 1) = Rational(-1);
    }
    return l;
}

inline Polynomial laplacian_char_poly(const Graph& g) {
    return laplacian_matrix(g).char_poly("mu");
}

inline Polynomial adjacency_char_poly(const Graph& g) {
    return adjacency_matrix(g).char_poly("lambda");
}

// Eigenvalues of the symmetric Laplacian. tol < 0 selects the default
// zero-classification threshold 1e-9 * n.
inline Spectrum laplacian_spectrum_numeric(const Graph& g, double tol = -1.0) {
    const int n = g.vertex_count();
    if (tol < 0) tol = 1e-9 * n;
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    const auto deg = g.degree_sequence();
    for (int i = 0; i < n; ++i) l(i, i) = deg[static_cast<std::size_t>(i)];
    for (const auto& [u, v] : g.edges()) {
        l(u - 1, v - 1) = -1.0;
        l(v - 1, u - 1) = -1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, Eigen::EigenvaluesOnly);
    Spectrum s;
    s.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(s.values.begin(), s.values.end());
    for (double v : s.values) {
        if (std::abs(v) <= tol) ++s.zero_count;
    }
    return s;
}

namespace detail {

inline void require_connected(const Graph& g, const char* what) {
    if (!g.is_connected()) throw DisconnectedError(std::string(what) + " requires a connected graph");
}

inline void require_at_least_two(const Graph& g, const char* what) {
    if (g.vertex_count() < 2) throw TooSmallError(std::string(what) + " requires n >= 2");
}

} // namespace detail

// Kf(G) = n * sum of 1/mu_i over the non-zero Laplacian eigenvalues.
// Floating-point route; the connectivity gate is combinatorial.
inline double kirchhoff_via_spectrum(const Graph& g, double tol = -1.0) {
    detail::require_at_least_two(g, "kirchhoff_via_spectrum");
    detail::require_connected(g, "kirchhoff_via_spectrum");
    const Spectrum s = laplacian_spectrum_numeric(g, tol);
    double sum = 0.0;
    for (std::size_t i = static_cast<std::size_t>(s.zero_count); i < s.values.size(); ++i) {
        sum += 1.0 / s.values[i];
    }
    return g.vertex_count() * sum;
}

// Kf(G)/n = -a_{n-2}/a_{n-1}, where a_{n-1} and a_{n-2} are the coefficients
// of mu and mu^2 in the exact monic Laplacian characteristic polynomial
// (a_{n-2} = 1 when n = 2).
inline Rational kirchhoff_via_coefficients(const Graph& g) {
    detail::require_at_least_two(g, "kirchhoff_via_coefficients");
    detail::require_connected(g, "kirchhoff_via_coefficients");
    const int n = g.vertex_count();
    const Polynomial phi = laplacian_char_poly(g);
    const Rational a_n1 = phi.coefficient(1);
    const Rational a_n2 = (n == 2) ? Rational(1) : phi.coefficient(2);
    if (a_n1.is_zero()) throw DisconnectedError("vanishing mu-coefficient");
    return Rational(n) * (-(a_n2 / a_n1));
}

// Exact resistance distances via the generalized-inverse route:
// g = (L + J/n)^{-1}, r_ij = g_ii + g_jj - 2 g_ij.
inline ResistanceMatrix resistance_distance_matrix(const Graph& g) {
    detail::require_connected(g, "resistance_distance_matrix");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    Matrix m = laplacian_matrix(g) + Rational(1, g.vertex_count()) * Matrix::ones(n, n);
    const Matrix inv = m.inverse();
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            r(i, j) = inv(i, i) + inv(j, j) - Rational(2) * inv(i, j);
            r(j, i) = r(i, j);
        }
    }
    return r;
}

// Kf(G) as the sum of resistance distances over unordered vertex pairs.
inline Rational kirchhoff_via_resistance(const Graph& g) {
    const ResistanceMatrix r = resistance_distance_matrix(g);
    Rational kf(0);
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = i + 1; j < r.cols(); ++j) kf += r(i, j);
    return kf;
}

// Kf(G) >= -1 + (n-1) * sum of 1/deg(v), with equality exactly for complete
// and complete bipartite graphs.
inline Rational zhou_trinajstic_lower_bound(const Graph& g) {
    detail::require_at_least_two(g, "zhou_trinajstic_lower_bound");
    detail::require_connected(g, "zhou_trinajstic_lower_bound");
    Rational sum(0);
    for (int d : g.degree_sequence()) sum += Rational(1, d);
    return Rational(-1) + Rational(g.vertex_count() - 1) * sum;
}

} // namespace rtg

#endif
