#ifndef RTGRAPH_VERIFY_HPP
#define RTGRAPH_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>

#include "rtgraph/closed_form.hpp"
#include "rtgraph/derived.hpp"
#include "rtgraph/errors.hpp"
#include "rtgraph/graph.hpp"
#include "rtgraph/report.hpp"
#include "rtgraph/spectra.hpp"

namespace rtg {

// The suite names double as the CLI's --suite values.
enum class Suite { thm31, thm44, cor46, all };

inline const char* to_string(Suite s) {
    switch (s) {
    case Suite::thm31: return "thm31";
    case Suite::thm44: return "thm44";
    case Suite::cor46: return "cor46";
    case Suite::all: return "all";
    }
    return "all";
}

inline Suite parse_suite(const std::string& s) {
    if (s == "thm31") return Suite::thm31;
    if (s == "thm44") return Suite::thm44;
    if (s == "cor46") return Suite::cor46;
    if (s == "all") return Suite::all;
    throw ParseError("unknown suite '" + s + "' (expected thm31, thm44, cor46 or all)");
}

namespace detail {

inline double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

inline std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

inline std::string format_residual(double x) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << x;
    return os.str();
}

inline void require_verifiable(const Graph& g) {
    require_at_least_two(g, "verification");
    require_connected(g, "verification");
    regular_params(g); // throws NotRegularError otherwise
}

} // namespace detail

// Factored characteristic polynomial of the rt-derived graph against a direct
// exact computation, in both factored forms and at spot evaluation points.
inline VerificationReport verify_thm31(const Graph& g, const std::string& graph_id) {
    detail::require_verifiable(g);
    VerificationReport rep{graph_id, {}};

    auto t0 = std::chrono::steady_clock::now();
    const Polynomial closed = rt_charpoly_closed_form(g, PolyForm::laplacian);
    const Graph rt = rt_graph(g).graph;
    const Polynomial direct = laplacian_char_poly(rt);
    {
        Check c;
        c.name = "thm31.factored-vs-direct";
        c.lhs = polynomial_to_json(closed).dump();
        c.rhs = polynomial_to_json(direct).dump();
        c.status = closed == direct ? CheckStatus::pass : CheckStatus::fail;
        c.timing_ms = detail::ms_since(t0);
        rep.checks.push_back(std::move(c));
    }

    t0 = std::chrono::steady_clock::now();
    const Polynomial via_adjacency = rt_charpoly_closed_form(g, PolyForm::adjacency);
    {
        Check c;
        c.name = "thm31.adjacency-form-vs-laplacian-form";
        c.lhs = polynomial_to_json(via_adjacency).dump();
        c.rhs = polynomial_to_json(closed).dump();
        c.status = via_adjacency == closed ? CheckStatus::pass : CheckStatus::fail;
        c.timing_ms = detail::ms_since(t0);
        rep.checks.push_back(std::move(c));
    }

    const Matrix l_rt = laplacian_matrix(rt);
    const Rational points[] = {Rational(4), Rational(7, 2), Rational(-1, 3)};
    for (const Rational& mu : points) {
        t0 = std::chrono::steady_clock::now();
        Matrix shifted = mu * Matrix::identity(l_rt.rows()) - l_rt;
        const Rational det = shifted.determinant();
        const Rational e_lap = rt_charpoly_eval_at(g, mu, PolyForm::laplacian);
        const Rational e_adj = rt_charpoly_eval_at(g, mu, PolyForm::adjacency);
        Check c;
        c.name = "thm31.eval(mu=" + mu.to_string() + ")";
        c.lhs = e_lap.to_string();
        c.rhs = det.to_string();
        c.status = (e_lap == det && e_adj == det) ? CheckStatus::pass : CheckStatus::fail;
        if (e_adj != e_lap) c.note = "adjacency-form evaluation gave " + e_adj.to_string();
        c.timing_ms = detail::ms_since(t0);
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

// Closed-form Kirchhoff index of the rt-derived graph against the exact
// resistance-distance route, plus a floating spectrum cross-check.
inline VerificationReport verify_thm44(const Graph& g, const std::string& graph_id,
                                       double tol = -1.0) {
    detail::require_verifiable(g);
    VerificationReport rep{graph_id, {}};
    const RegularGraphParams p = regular_params(g);

    auto t0 = std::chrono::steady_clock::now();
    const Rational kf_base_coeff = kirchhoff_via_coefficients(g);
    const Rational kf_base_res = kirchhoff_via_resistance(g);
    {
        Check c;
        c.name = "thm44.base-kf.coefficients-vs-resistance";
        c.lhs = kf_base_coeff.to_string();
        c.rhs = kf_base_res.to_string();
        c.status = kf_base_coeff == kf_base_res ? CheckStatus::pass : CheckStatus::fail;
        c.timing_ms = detail::ms_since(t0);
        rep.checks.push_back(std::move(c));
    }

    t0 = std::chrono::steady_clock::now();
    const Rational formula = kf_rt_formula(p.n, p.r, kf_base_coeff);
    const Graph rt = rt_graph(g).graph;
    const Rational resistance = kirchhoff_via_resistance(rt);
    {
        Check c;
        c.name = "thm44.formula-vs-resistance";
        c.lhs = formula.to_string();
        c.rhs = resistance.to_string();
        c.status = formula == resistance ? CheckStatus::pass : CheckStatus::fail;
        c.timing_ms = detail::ms_since(t0);
        rep.checks.push_back(std::move(c));
    }

    t0 = std::chrono::steady_clock::now();
    const double numeric = kirchhoff_via_spectrum(rt, tol);
    const double exact = formula.to_double();
    const double residual = std::abs(numeric - exact) / std::max(1.0, std::abs(exact));
    {
        Check c;
        c.name = "thm44.spectrum-residual";
        c.lhs = detail::format_double(numeric);
        c.rhs = formula.to_string();
        c.residual = detail::format_residual(residual);
        c.status = residual <= 1e-8 ? CheckStatus::pass : CheckStatus::fail;
        c.timing_ms = detail::ms_since(t0);
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

// Lower bound on the Kirchhoff index of the rt-derived graph, including the
// equality characterization (complete or balanced complete bipartite base).
inline VerificationReport verify_cor46(const Graph& g, const std::string& graph_id) {
    detail::require_verifiable(g);
    VerificationReport rep{graph_id, {}};
    const RegularGraphParams p = regular_params(g);

    auto t0 = std::chrono::steady_clock::now();
    const Rational value = kf_rt_formula(p.n, p.r, kirchhoff_via_coefficients(g));
    const Rational bound = kf_rt_lower_bound(p.n, p.r);
    const bool equal = bound == value;
    {
        Check c;
        c.name = "cor46.lower-bound";
        c.lhs = bound.to_string();
        c.rhs = value.to_string();
        c.status = bound <= value ? CheckStatus::pass : CheckStatus::fail;
        c.note = equal ? "equality" : "strict inequality";
        c.timing_ms = detail::ms_since(t0);
        rep.checks.push_back(std::move(c));
    }

    t0 = std::chrono::steady_clock::now();
    const bool complete = is_complete(g);
    const auto parts = complete_bipartite_parts(g);
    const bool balanced_bipartite = parts && parts->first == parts->second;
    const bool expect_equal = complete || balanced_bipartite;
    {
        Check c;
        c.name = "cor46.tightness-characterization";
        c.lhs = equal ? "equality" : "strict inequality";
        c.rhs = expect_equal ? "equality" : "strict inequality";
        c.status = equal == expect_equal ? CheckStatus::pass : CheckStatus::fail;
        if (complete) c.note = "base graph is complete";
        else if (balanced_bipartite) c.note = "base graph is balanced complete bipartite";
        c.timing_ms = detail::ms_since(t0);
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

inline VerificationReport verify_suite(const Graph& g, const std::string& graph_id, Suite suite,
                                       double tol = -1.0) {
    switch (suite) {
    case Suite::thm31: return verify_thm31(g, graph_id);
    case Suite::thm44: return verify_thm44(g, graph_id, tol);
    case Suite::cor46: return verify_cor46(g, graph_id);
    case Suite::all: break;
    }
    VerificationReport rep = verify_thm31(g, graph_id);
    VerificationReport r44 = verify_thm44(g, graph_id, tol);
    VerificationReport r46 = verify_cor46(g, graph_id);
    rep.checks.insert(rep.checks.end(), std::make_move_iterator(r44.checks.begin()),
                      std::make_move_iterator(r44.checks.end()));
    rep.checks.insert(rep.checks.end(), std::make_move_iterator(r46.checks.begin()),
                      std::make_move_iterator(r46.checks.end()));
    return rep;
}

} // namespace rtg

#endif
