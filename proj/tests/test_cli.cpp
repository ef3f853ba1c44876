#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rtgraph/derived.hpp"
#include "rtgraph/graph.hpp"

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Runs the installed CLI through the shell with captured stdin/stdout/stderr.
CmdResult run_cli(const std::string& args, const std::string& input = "") {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const std::string tag = "rtgraph_cli_" + std::to_string(++counter);
    const auto in_path = dir / (tag + ".in");
    const auto out_path = dir / (tag + ".out");
    const auto err_path = dir / (tag + ".err");
    std::ofstream(in_path) << input;

    const std::string cmd = std::string(RTGRAPH_CLI_PATH) + " " + args + " < " +
                            in_path.string() + " > " + out_path.string() + " 2> " +
                            err_path.string();
    const int raw = std::system(cmd.c_str());
    CmdResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::filesystem::remove(in_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return r;
}

std::string rt_k2_text() {
    return rtg::rt_graph(rtg::complete_graph(2)).graph.to_edge_list_string();
}

} // namespace

TEST_CASE("cli gen") {
    const CmdResult k3 = run_cli("gen complete 3");
    REQUIRE(k3.code == 0);
    REQUIRE(k3.out == "3 3\n1 2\n1 3\n2 3\n");

    const CmdResult c4 = run_cli("gen cycle 4");
    REQUIRE(c4.code == 0);
    REQUIRE(rtg::Graph::parse_string(c4.out) == rtg::cycle_graph(4));

    REQUIRE(run_cli("gen complete 1").code == 2);
    REQUIRE(run_cli("gen frobnicator 3").code == 2);
    REQUIRE(run_cli("gen complete").code == 2);
    REQUIRE(run_cli("gen petersen").code == 0);
}

TEST_CASE("cli derive") {
    const std::string k2 = rtg::complete_graph(2).to_edge_list_string();

    const CmdResult rt = run_cli("derive rt", k2);
    REQUIRE(rt.code == 0);
    REQUIRE(rt.out.find("# derived: rt") != std::string::npos);
    const rtg::Graph rt_parsed = rtg::Graph::parse_string(rt.out);
    REQUIRE(rt_parsed.vertex_count() == 7);
    REQUIRE(rt_parsed.edge_count() == 9);

    const CmdResult r = run_cli("derive r", k2);
    REQUIRE(r.code == 0);
    REQUIRE(rtg::Graph::parse_string(r.out) == rtg::complete_graph(3));

    // l(C_5) is a 5-cycle again, though its vertices are numbered by edge index;
    // connected + 2-regular + 5 vertices pins the structure without fixing labels.
    const CmdResult line = run_cli("derive line", rtg::cycle_graph(5).to_edge_list_string());
    REQUIRE(line.code == 0);
    const rtg::Graph line_parsed = rtg::Graph::parse_string(line.out);
    REQUIRE(line_parsed.vertex_count() == 5);
    REQUIRE(line_parsed.edge_count() == 5);
    REQUIRE(line_parsed.is_regular() == std::optional<int>(2));
    REQUIRE(line_parsed.is_connected());

    REQUIRE(run_cli("derive rt", "garbage\n").code == 2);
    REQUIRE(run_cli("derive squish", k2).code == 2);
}

TEST_CASE("cli kirchhoff methods and printing") {
    REQUIRE(run_cli("kirchhoff --method resistance", rt_k2_text()).out == "74/3\n");
    REQUIRE(run_cli("kirchhoff --method coefficients", rt_k2_text()).out == "74/3\n");
    REQUIRE(run_cli("kirchhoff --method closed-form-rt",
                    rtg::cycle_graph(3).to_edge_list_string())
                .out == "455/6\n");

    // --float prints a 15-significant-digit decimal
    const CmdResult f = run_cli("kirchhoff --method resistance --float", rt_k2_text());
    REQUIRE(f.code == 0);
    REQUIRE(std::abs(std::stod(f.out) - 74.0 / 3.0) < 1e-12);
    const CmdResult s = run_cli("kirchhoff --method spectrum", rt_k2_text());
    REQUIRE(s.code == 0);
    REQUIRE(std::abs(std::stod(s.out) - 74.0 / 3.0) < 1e-6);

    // star: exact methods agree with each other
    const std::string star = rtg::complete_bipartite_graph(1, 3).to_edge_list_string();
    const CmdResult via_coeff = run_cli("kirchhoff --method coefficients", star);
    const CmdResult via_res = run_cli("kirchhoff --method resistance", star);
    REQUIRE(via_coeff.code == 0);
    REQUIRE(via_coeff.out == via_res.out);

    REQUIRE(run_cli("kirchhoff --method resistance", "4 2\n1 2\n3 4\n").code == 3);
    REQUIRE(run_cli("kirchhoff --method closed-form-rt", star).code == 4);
    REQUIRE(run_cli("kirchhoff --method guesswork", rt_k2_text()).code == 2);
    REQUIRE(run_cli("kirchhoff --method resistance", "not a graph\n").code == 2);
}

TEST_CASE("cli verify single graph") {
    const CmdResult ok = run_cli("verify --suite all", rtg::complete_graph(2).to_edge_list_string());
    REQUIRE(ok.code == 0);
    const nlohmann::json j = nlohmann::json::parse(ok.out);
    REQUIRE(j.is_object());
    REQUIRE(j.at("schema") == 1);
    REQUIRE(j.at("all_passed") == true);
    REQUIRE(j.at("checks").size() == 10);
    REQUIRE(ok.err.find("PASS") != std::string::npos);

    const CmdResult pet = run_cli("verify --suite cor46 --gen petersen");
    REQUIRE(pet.code == 0);
    const nlohmann::json jp = nlohmann::json::parse(pet.out);
    REQUIRE(jp.at("checks").at(0).at("note") == "strict inequality");

    REQUIRE(run_cli("verify --suite thm44",
                    rtg::complete_bipartite_graph(1, 3).to_edge_list_string())
                .code == 4);
    REQUIRE(run_cli("verify --suite all", "4 2\n1 2\n3 4\n").code == 3);
    REQUIRE(run_cli("verify --suite thm99", "2 1\n1 2\n").code == 2);
}

TEST_CASE("cli verify batch mode") {
    const CmdResult batch =
        run_cli("verify --suite thm31 --gen \"complete 3\" --gen \"cycle 4\" --jobs 2");
    REQUIRE(batch.code == 0);
    const nlohmann::json j = nlohmann::json::parse(batch.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    REQUIRE(j.at(0).at("graph_id") == "complete 3");
    REQUIRE(j.at(1).at("graph_id") == "cycle 4");
    for (const auto& rep : j) REQUIRE(rep.at("all_passed") == true);
}

TEST_CASE("cli round trip: derive rt then measure equals closed form") {
    for (const std::string spec :
         {std::string("complete 4"), std::string("cycle 5"), std::string("complete-bipartite 2 2"),
          std::string("hypercube 2")}) {
        const CmdResult base = run_cli("gen " + spec);
        REQUIRE(base.code == 0);
        const CmdResult rt = run_cli("derive rt", base.out);
        REQUIRE(rt.code == 0);
        const CmdResult measured = run_cli("kirchhoff --method resistance", rt.out);
        const CmdResult closed = run_cli("kirchhoff --method closed-form-rt", base.out);
        REQUIRE(measured.code == 0);
        REQUIRE(closed.code == 0);
        REQUIRE(measured.out == closed.out);
    }
}
