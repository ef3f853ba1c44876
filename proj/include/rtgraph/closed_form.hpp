#ifndef RTGRAPH_CLOSED_FORM_HPP
#define RTGRAPH_CLOSED_FORM_HPP

#include <optional>
#include <vector>

#include "rtgraph/errors.hpp"
#include "rtgraph/graph.hpp"
#include "rtgraph/polynomial.hpp"
#include "rtgraph/rational.hpp"
#include "rtgraph/spectra.hpp"

namespace rtg {

// Parameters of an r-regular graph on n vertices; kf is filled on demand by
// callers that need the Kirchhoff index of the base graph.
struct RegularGraphParams {
    int n = 0;
    int r = 0;
    int m = 0; // = n*r/2
    std::optional<Rational> kf;
};

inline RegularGraphParams regular_params(const Graph& g) {
    const auto r = g.is_regular();
    if (!r) throw NotRegularError("graph is not regular");
    return RegularGraphParams{g.vertex_count(), *r, g.edge_count(), std::nullopt};
}

enum class PolyForm { adjacency, laplacian };

namespace detail {

inline void validate_regular_params(int n, int r) {
    if (n < 2) throw InvalidParamsError("need n >= 2");
    if (r < 1) throw InvalidParamsError("need r >= 1");
    if (r > n - 1) throw InvalidParamsError("r-regular simple graph needs r <= n-1");
    if ((static_cast<long>(n) * r) % 2 != 0) throw InvalidParamsError("n*r must be even");
}

// (mu-1)(mu-3)
inline Polynomial q_factor() {
    return Polynomial{Rational(3), Rational(-4), Rational(1)};
}

// Numerator of the Laplacian-side substitution over (mu-1)(mu-3):
// mu^3 - (r+5) mu^2 + (r+6) mu.
inline Polynomial p_factor_laplacian(int r) {
    return Polynomial{Rational(0), Rational(r + 6), Rational(-(r + 5)), Rational(1)};
}

// Numerator of the adjacency-side substitution over (mu-1)(mu-3):
// -(mu-2)^2(mu-1) + r(2mu-3)(mu-1) + 2(mu-2)
//   = -mu^3 + (2r+5) mu^2 - (5r+6) mu + 3r.
inline Polynomial p_factor_adjacency(int r) {
    return Polynomial{Rational(3 * r), Rational(-(5 * r + 6)), Rational(2 * r + 5), Rational(-1)};
}

// (c * mu + d)^e as a polynomial
inline Polynomial linear_power(long c, long d, int e) {
    return Polynomial{Rational(d), Rational(c)}.pow(e);
}

} // namespace detail

// The degree-(3n+m) characteristic polynomial of RT(G) assembled from the
// characteristic polynomial of the r-regular base graph G, without ever
// forming RT(G) itself.
//
// With phi(G) = sum_k a_k x^k substituted at x = P(mu)/Q(mu), the rational
// substitution is homogenized to sum_k a_k P^k Q^(n-k); everything stays an
// integer-coefficient polynomial, and the m < n case ends in an explicit
// exact division by (mu-2)^(n-m) that fails loudly if the identity is
// violated.
inline Polynomial rt_charpoly_closed_form(const Graph& g, PolyForm form) {
    const RegularGraphParams p = regular_params(g);
    const int n = p.n, m = p.m, r = p.r;

    const Polynomial phi =
        form == PolyForm::laplacian ? laplacian_char_poly(g) : adjacency_char_poly(g);
    const Polynomial pf = form == PolyForm::laplacian ? detail::p_factor_laplacian(r)
                                                      : detail::p_factor_adjacency(r);
    const Polynomial qf = detail::q_factor();

    // running powers: P^k ascending, Q^(n-k) via a precomputed table
    std::vector<Polynomial> q_pow(static_cast<std::size_t>(n) + 1);
    q_pow[0] = Polynomial::constant(Rational(1));
    for (int k = 1; k <= n; ++k) q_pow[static_cast<std::size_t>(k)] = q_pow[static_cast<std::size_t>(k - 1)] * qf;

    Polynomial acc;
    Polynomial p_pow = Polynomial::constant(Rational(1));
    for (int k = 0; k <= n; ++k) {
        const Rational a_k = phi.coefficient(k);
        if (!a_k.is_zero()) acc += a_k * (p_pow * q_pow[static_cast<std::size_t>(n - k)]);
        if (k < n) p_pow = p_pow * pf;
    }

    acc = acc * detail::linear_power(1, -3, n); // (mu-3)^n
    if (form == PolyForm::adjacency && n % 2 == 1) acc = Rational(-1) * acc;

    if (m >= n) {
        acc = acc * detail::linear_power(1, -2, m - n);
    } else {
        acc = acc.divide_exact(detail::linear_power(1, -2, n - m));
    }
    acc.set_symbol("mu");
    return acc;
}

// Evaluates the factored right-hand side for phi(RT(G); mu) directly as a
// product of scalars, using the rational substitution itself. mu = 1 and
// mu = 3 are poles of the substituted argument, and mu = 2 is a pole of the
// prefactor when m < n, even though the assembled polynomial is entire.
inline Rational rt_charpoly_eval_at(const Graph& g, const Rational& mu, PolyForm form) {
    const RegularGraphParams p = regular_params(g);
    const int n = p.n, m = p.m, r = p.r;

    if (mu == Rational(1) || mu == Rational(3)) {
        throw ForbiddenEvaluationPointError("substituted argument has a pole at mu = " + mu.to_string());
    }
    if (m < n && mu == Rational(2)) {
        throw ForbiddenEvaluationPointError("prefactor (mu-2)^(m-n) has a pole at mu = 2");
    }

    const Rational mu1 = mu - Rational(1);
    const Rational mu2 = mu - Rational(2);
    const Rational mu3 = mu - Rational(3);

    if (form == PolyForm::laplacian) {
        const Rational arg = mu2 * mu2 / mu3 - Rational(r) * mu / mu3 -
                             Rational(2) * mu2 / (mu1 * mu3);
        return laplacian_char_poly(g).eval(arg) * pow(mu1, n) * pow(mu3, 2L * n) * pow(mu2, m - n);
    }
    const Rational arg = mu2 * mu2 / (Rational(3) - mu) + Rational(r) * (Rational(2) * mu - Rational(3)) / mu3 +
                         Rational(2) * mu2 / (mu1 * mu3);
    return adjacency_char_poly(g).eval(arg) * pow(mu1, n) * pow(mu2, m - n) * pow(mu3, n) *
           pow(Rational(3) - mu, n);
}

// Kf(RT(G)) for a connected r-regular graph G on n vertices with Kirchhoff
// index kf_g:
//   (r+6)^2/6 * Kf(G) + (r+5)n/2 + (r+6)(5n-4)n/6 + (r-2)(r+6)n^2/8.
inline Rational kf_rt_formula(int n, int r, const Rational& kf_g) {
    detail::validate_regular_params(n, r);
    const mpz_class N(n), R(r);
    return Rational((R + 6) * (R + 6), 6) * kf_g +
           Rational((R + 5) * N, 2) +
           Rational((R + 6) * (5 * N - 4) * N, 6) +
           Rational((R - 2) * (R + 6) * N * N, 8);
}

// Lower bound for Kf(RT(G)) in terms of n and r alone; coincides with
// kf_rt_formula exactly when G is complete or balanced complete bipartite.
inline Rational kf_rt_lower_bound(int n, int r) {
    detail::validate_regular_params(n, r);
    const mpz_class N(n), R(r);
    return Rational((R + 6) * (R + 6) * (N * N - N - R), 6 * R) +
           Rational((R + 5) * N, 2) +
           Rational((R + 6) * (5 * N - 4) * N, 6) +
           Rational((R - 2) * (R + 6) * N * N, 8);
}

enum class SpecialFamily { complete, cycle, complete_bipartite_nn };

// The specialized Kf(RT(.)) expressions for the named families, evaluated
// exactly. `n` is the family parameter: K_n, C_n, or K_{n,n}.
inline Rational kf_rt_special(SpecialFamily family, int n) {
    switch (family) {
    case SpecialFamily::complete: {
        if (n < 2) throw InvalidParamsError("complete family needs n >= 2");
        const mpz_class N(n), R(n - 1);
        return Rational((R + 6) * (R + 6) * (N - 1), 6) +
               Rational((R + 5) * N, 2) +
               Rational((R + 6) * (5 * N - 4) * N, 6) +
               Rational((R - 2) * (R + 6) * N * N, 8);
    }
    case SpecialFamily::cycle: {
        if (n < 3) throw InvalidParamsError("cycle family needs n >= 3");
        const mpz_class N(n), R(2);
        return Rational((R + 6) * (R + 6) * (N * N * N - N), 72) +
               Rational((R + 5) * N, 2) +
               Rational((R + 6) * (5 * N - 4) * N, 6) +
               Rational((R - 2) * (R + 6) * N * N, 8);
    }
    case SpecialFamily::complete_bipartite_nn: {
        if (n < 1) throw InvalidParamsError("bipartite family needs n >= 1");
        const mpz_class N(n), R(n); // K_{n,n} is n-regular on 2n vertices
        return Rational((R + 6) * (R + 6) * (4 * N - 3), 6) +
               Rational((R + 5) * N, 1) +
               Rational((R + 6) * (10 * N - 4) * N, 3) +
               Rational((R - 2) * (R + 6) * N * N, 2);
    }
    }
    throw InvalidParamsError("unknown special family");
}

} // namespace rtg

#endif
