// rtgraph: generate graphs, build r/rt/line derived graphs, compute Kirchhoff
// indices by independent methods, and verify the closed-form identities.
//
// Exit codes: 0 pass, 1 identity failure, 2 usage/parse, 3 disconnected,
// 4 not regular.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rtgraph/rtgraph.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitNotRegular = 4;

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const rtg::DisconnectedError*>(&e)) return kExitDisconnected;
    if (dynamic_cast<const rtg::NotRegularError*>(&e)) return kExitNotRegular;
    return kExitUsage;
}

[[noreturn]] void fail(const std::exception& e) {
    std::cerr << "rtgraph: error: " << e.what() << "\n";
    std::exit(exit_code_for(e));
}

rtg::Graph read_graph(const std::string& path) {
    if (path.empty() || path == "-") return rtg::Graph::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw rtg::ParseError("cannot open input file '" + path + "'");
    return rtg::Graph::parse(in);
}

// family-spec: "complete N" | "cycle N" | "complete-bipartite A B" |
// "petersen" | "hypercube D"
rtg::Graph graph_from_family(const std::string& family, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k) {
            throw rtg::InvalidParamsError("family '" + family + "' takes " + std::to_string(k) +
                                          " integer parameter(s), got " +
                                          std::to_string(params.size()));
        }
    };
    if (family == "complete") { want(1); return rtg::complete_graph(params[0]); }
    if (family == "cycle") { want(1); return rtg::cycle_graph(params[0]); }
    if (family == "complete-bipartite") {
        want(2);
        return rtg::complete_bipartite_graph(params[0], params[1]);
    }
    if (family == "petersen") { want(0); return rtg::petersen_graph(); }
    if (family == "hypercube") { want(1); return rtg::hypercube_graph(params[0]); }
    throw rtg::InvalidParamsError(
        "unknown family '" + family +
        "' (expected complete, cycle, complete-bipartite, petersen or hypercube)");
}

rtg::Graph graph_from_spec_string(const std::string& spec) {
    std::istringstream is(spec);
    std::string family;
    if (!(is >> family)) throw rtg::InvalidParamsError("empty family spec");
    std::vector<int> params;
    int x;
    while (is >> x) params.push_back(x);
    if (!is.eof()) throw rtg::InvalidParamsError("bad family spec '" + spec + "'");
    return graph_from_family(family, params);
}

std::string format_float(double x) {
    std::ostringstream os;
    os << std::setprecision(15) << x;
    return os.str();
}

struct VerifyJob {
    std::string graph_id;
    rtg::Graph graph;
};

int run_verify(const std::vector<VerifyJob>& jobs, rtg::Suite suite, int n_jobs, double tol) {
    // Enforce preconditions up front so the exit code is deterministic and
    // does not depend on worker scheduling.
    for (const auto& job : jobs) rtg::detail::require_verifiable(job.graph);

    std::vector<rtg::VerificationReport> reports(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                reports[i] = rtg::verify_suite(jobs[i].graph, jobs[i].graph_id, suite, tol);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int workers = std::max(1, std::min<int>(n_jobs, static_cast<int>(jobs.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }

    bool all_passed = true;
    nlohmann::json out = nlohmann::json::array();
    for (const auto& rep : reports) {
        out.push_back(rep.to_json());
        std::size_t passed = 0;
        for (const auto& c : rep.checks) {
            if (c.status == rtg::CheckStatus::pass) ++passed;
            if (c.status == rtg::CheckStatus::fail) {
                std::cerr << rep.graph_id << ": FAIL " << c.name << " (lhs=" << c.lhs
                          << ", rhs=" << c.rhs << ")\n";
            }
        }
        std::cerr << rep.graph_id << ": " << passed << "/" << rep.checks.size()
                  << " checks passed\n";
        all_passed = all_passed && rep.all_passed();
    }
    if (jobs.size() == 1) {
        std::cout << out[0].dump(2) << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    std::cerr << (all_passed ? "PASS" : "FAIL") << "\n";
    return all_passed ? kExitPass : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"derived-graph characteristic polynomials and Kirchhoff indices"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    // gen
    std::string gen_family;
    std::vector<int> gen_params;
    auto* gen = app.add_subcommand("gen", "emit a named graph family as an edge list");
    gen->add_option("family", gen_family,
                    "complete | cycle | complete-bipartite | petersen | hypercube")
        ->required();
    gen->add_option("params", gen_params, "integer family parameters");

    // derive
    std::string derive_op;
    std::string derive_input = "-";
    auto* derive = app.add_subcommand("derive", "emit a derived graph as an edge list");
    derive->add_option("operator", derive_op, "r | rt | line")
        ->required()
        ->check(CLI::IsMember({"r", "rt", "line"}));
    derive->add_option("input", derive_input, "edge-list file ('-' = standard input)");

    // kirchhoff
    std::string kirchhoff_method;
    std::string kirchhoff_input = "-";
    bool use_float = false;
    double tol = -1.0;
    auto* kirchhoff = app.add_subcommand("kirchhoff", "compute a Kirchhoff index");
    kirchhoff
        ->add_option("--method", kirchhoff_method,
                     "spectrum | coefficients | resistance | closed-form-rt")
        ->required()
        ->check(CLI::IsMember({"spectrum", "coefficients", "resistance", "closed-form-rt"}));
    kirchhoff->add_option("input", kirchhoff_input, "edge-list file ('-' = standard input)");
    kirchhoff->add_flag("--float", use_float, "print a 15-significant-digit decimal");
    kirchhoff->add_option("--tol", tol, "numeric zero-classification override (spectrum method)");

    // verify
    std::vector<std::string> verify_inputs;
    std::vector<std::string> verify_gen;
    std::string verify_suite_name;
    int verify_jobs = 1;
    double verify_tol = -1.0;
    auto* verify = app.add_subcommand("verify", "run identity suites, report JSON");
    verify->add_option("inputs", verify_inputs, "edge-list files ('-' = standard input)");
    verify->add_option("--gen", verify_gen, "family spec, e.g. \"complete 4\" (repeatable)");
    verify->add_option("--suite", verify_suite_name, "thm31 | thm44 | cor46 | all")
        ->required()
        ->check(CLI::IsMember({"thm31", "thm44", "cor46", "all"}));
    verify->add_option("--jobs", verify_jobs, "worker threads for batch verification")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tol", verify_tol, "numeric zero-classification override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitPass;
    }

    try {
        if (*gen) {
            graph_from_family(gen_family, gen_params).serialize(std::cout);
            return kExitPass;
        }
        if (*derive) {
            const rtg::Graph g = read_graph(derive_input);
            if (derive_op == "r") {
                rtg::r_graph(g).serialize(std::cout);
            } else if (derive_op == "rt") {
                rtg::rt_graph(g).serialize(std::cout);
            } else {
                rtg::line_graph(g).serialize(std::cout);
            }
            return kExitPass;
        }
        if (*kirchhoff) {
            const rtg::Graph g = read_graph(kirchhoff_input);
            if (kirchhoff_method == "spectrum") {
                std::cout << format_float(rtg::kirchhoff_via_spectrum(g, tol)) << "\n";
                return kExitPass;
            }
            rtg::Rational kf;
            if (kirchhoff_method == "coefficients") {
                kf = rtg::kirchhoff_via_coefficients(g);
            } else if (kirchhoff_method == "resistance") {
                kf = rtg::kirchhoff_via_resistance(g);
            } else { // closed-form-rt: Kf of the rt-derived graph of the input
                const rtg::RegularGraphParams p = rtg::regular_params(g);
                kf = rtg::kf_rt_formula(p.n, p.r, rtg::kirchhoff_via_coefficients(g));
            }
            std::cout << (use_float ? format_float(kf.to_double()) : kf.to_string()) << "\n";
            return kExitPass;
        }
        // verify
        std::vector<VerifyJob> jobs;
        for (const auto& path : verify_inputs) {
            jobs.push_back({path == "-" ? "stdin" : path, read_graph(path)});
        }
        for (const auto& spec : verify_gen) {
            jobs.push_back({spec, graph_from_spec_string(spec)});
        }
        if (jobs.empty()) jobs.push_back({"stdin", read_graph("-")});
        return run_verify(jobs, rtg::parse_suite(verify_suite_name), verify_jobs, verify_tol);
    } catch (const std::exception& e) {
        fail(e);
    }
}
