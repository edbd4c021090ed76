// Command-line front-end: solve / oracle / decompose / gen-hard / check-nmwts.
// Machine-readable JSON goes to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 parse/usage error, 2 precondition violation,
// 3 oracle budget exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bbpmcs/bc_tree.hpp"
#include "bbpmcs/graph.hpp"
#include "bbpmcs/io.hpp"
#include "bbpmcs/oracle.hpp"
#include "bbpmcs/reduction.hpp"
#include "bbpmcs/solver.hpp"
#include "bbpmcs/sp_tree.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;

std::int64_t default_budget() {
    if (const char* env = std::getenv("BBPMCS_ORACLE_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (...) {
            std::cerr << "warning: ignoring invalid BBPMCS_ORACLE_BUDGET\n";
        }
    }
    return bbpmcs::kDefaultOracleBudget;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bbpmcs::ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw bbpmcs::ParseError("cannot write file: " + path);
    out << content;
}

int run_solve(const std::string& g_path, const std::string& h_path, bool no_fast_path, bool trace,
              bool no_memo) {
    bbpmcs::Graph g = bbpmcs::parse_graph_file(g_path);
    bbpmcs::Graph h = bbpmcs::parse_graph_file(h_path);
    bbpmcs::SolveOptions opts;
    opts.fast_path = !no_fast_path;
    opts.trace = trace;
    opts.use_memo = !no_memo;
    auto t0 = std::chrono::steady_clock::now();
    bbpmcs::SolveResult r = bbpmcs::bbp_mcs(g, h, opts);
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    ordered_json out;
    out["bbp_mcs"] = r.size;
    out["outerplanar_fast_path"] = r.outerplanar_fast_path;
    out["millis"] = ms;
    std::cout << out.dump() << "\n";
    return 0;
}

int run_oracle(const std::string& g_path, const std::string& h_path, bool bbp,
               std::int64_t budget) {
    bbpmcs::Graph g = bbpmcs::parse_graph_file(g_path);
    bbpmcs::Graph h = bbpmcs::parse_graph_file(h_path);
    bbpmcs::OracleResult r =
        bbp ? bbpmcs::bbp_mcs_brute(g, h, budget) : bbpmcs::mcs_brute(g, h, budget);
    ordered_json out;
    if (r.budget_exceeded) {
        out["status"] = "budget-exceeded";
        std::cout << out.dump() << "\n";
        return kExitBudget;
    }
    out["size"] = r.size;
    std::cout << out.dump() << "\n";
    return 0;
}

int run_decompose(const std::string& g_path, const std::string& dot_path) {
    bbpmcs::Graph g = bbpmcs::parse_graph_file(g_path);
    if (!bbpmcs::is_connected(g))
        throw bbpmcs::PreconditionError("decompose requires a connected graph");
    ordered_json out;
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    bool sp = bbpmcs::is_series_parallel(g);
    out["series_parallel"] = sp;
    out["outerplanar"] = sp ? bbpmcs::is_outerplanar(g) : false;
    out["biconnected"] = bbpmcs::is_biconnected(g);
    std::string dot;
    if (g.vertex_count() >= 2) {
        bbpmcs::BcTree bc = bbpmcs::build_bc_tree(g);
        ordered_json blocks = ordered_json::array(), bridges = ordered_json::array(),
                     cuts = ordered_json::array(), sp_trees = ordered_json::array();
        for (int v = 0; v < g.vertex_count(); ++v)
            if (bc.is_cutvertex(v)) cuts.push_back(v);
        for (int b : bc.block_node_ids()) blocks.push_back(bc.nodes[b].block_vertices);
        for (int b : bc.bridge_node_ids())
            bridges.push_back({bc.nodes[b].bridge.first, bc.nodes[b].bridge.second});
        dot = bbpmcs::bc_tree_dot(bc, g);
        if (sp) {
            for (int b : bc.block_node_ids()) {
                std::vector<int> vmap;
                bbpmcs::Graph local = bbpmcs::block_skeleton(bc.nodes[b], vmap);
                bbpmcs::SpTree t = bbpmcs::build_sp_tree(local);
                bbpmcs::remap_vertices(t, vmap);
                ordered_json ts;
                ts["block"] = bc.nodes[b].block_vertices;
                ts["s_nodes"] = t.s_node_ids().size();
                ts["p_nodes"] = t.p_node_ids().size();
                sp_trees.push_back(ts);
                dot += bbpmcs::sp_tree_dot(t);
            }
        }
        out["cutvertices"] = cuts;
        out["blocks"] = blocks;
        out["bridges"] = bridges;
        out["sp_trees"] = sp_trees;
    } else {
        out["cutvertices"] = ordered_json::array();
        out["blocks"] = ordered_json::array();
        out["bridges"] = ordered_json::array();
        out["sp_trees"] = ordered_json::array();
    }
    if (!dot_path.empty()) write_file(dot_path, dot);
    std::cout << out.dump() << "\n";
    return 0;
}

int run_gen_hard(const std::string& inst_path, bool verify, const std::string& out_dir,
                 std::int64_t cap) {
    bbpmcs::NmwtsInstance inst = bbpmcs::NmwtsInstance::from_json_text(read_file(inst_path));
    inst.validate();
    bbpmcs::HardInstance hi = bbpmcs::build_instance(inst, cap);
    std::string prefix = out_dir.empty() ? "" : out_dir + "/";
    write_file(prefix + "G.txt", bbpmcs::to_edge_list(hi.g));
    write_file(prefix + "H.txt", bbpmcs::to_edge_list(hi.h));
    ordered_json roles;
    roles["g"] = ordered_json(std::map<std::string, int>(hi.roles_g.begin(), hi.roles_g.end()));
    roles["h"] = ordered_json(std::map<std::string, int>(hi.roles_h.begin(), hi.roles_h.end()));
    write_file(prefix + "roles.json", roles.dump(2) + "\n");
    ordered_json out;
    out["g_vertices"] = hi.g.vertex_count();
    out["h_vertices"] = hi.h.vertex_count();
    out["scaled_by_3"] = hi.scaled_by_3;
    out["files"] = {prefix + "G.txt", prefix + "H.txt", prefix + "roles.json"};
    if (verify) {
        bbpmcs::VerifyReport rep = bbpmcs::verify_instance(hi, inst);
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            if (!c.detail.empty()) jc["detail"] = c.detail;
            checks.push_back(jc);
        }
        out["verify"] = checks;
        out["verify_ok"] = rep.all_pass();
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_check_nmwts(const std::string& inst_path) {
    bbpmcs::NmwtsInstance inst = bbpmcs::NmwtsInstance::from_json_text(read_file(inst_path));
    inst.validate();
    ordered_json out;
    out["matching_exists"] = bbpmcs::nmwts_brute(inst);
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-and-bridge preserving MCS for series-parallel graphs"};
    app.require_subcommand(1);

    std::string g_path, h_path, dot_path, inst_path, out_dir;
    bool bbp = false, verify = false, no_fast_path = false, trace = false, no_memo = false;
    std::int64_t budget = default_budget();
    std::int64_t cap = 1'000'000;

    auto* solve = app.add_subcommand("solve", "BBP-MCS size of two series-parallel graphs");
    solve->add_option("G", g_path, "first graph file")->required();
    solve->add_option("H", h_path, "second graph file")->required();
    solve->add_flag("--no-fast-path", no_fast_path, "disable the outerplanar shortcut");
    solve->add_flag("--trace", trace, "log one line per memo-table write to stderr");
    solve->add_flag("--no-memo", no_memo, "disable memoization (debugging)");

    auto* oracle = app.add_subcommand("oracle", "brute-force (BBP-)MCS reference");
    oracle->add_option("G", g_path, "first graph file")->required();
    oracle->add_option("H", h_path, "second graph file")->required();
    oracle->add_flag("--bbp", bbp, "restrict to block-and-bridge preserving mappings");
    oracle->add_option("--budget", budget, "search node budget");

    auto* decompose = app.add_subcommand("decompose", "block/cut/SP-tree summary");
    decompose->add_option("G", g_path, "graph file")->required();
    decompose->add_option("--dot", dot_path, "write BC-tree and SP-tree DOT text here");

    auto* gen = app.add_subcommand("gen-hard", "generate the NP-hardness gadget instance");
    gen->add_option("instance", inst_path, "NMwTS instance JSON")->required();
    gen->add_flag("--verify", verify, "run the structural lemma checks");
    gen->add_option("--out-dir", out_dir, "output directory (default: current)");
    gen->add_option("--cap", cap, "refuse generation above this vertex count");

    auto* chk = app.add_subcommand("check-nmwts", "brute-force the NMwTS instance");
    chk->add_option("instance", inst_path, "NMwTS instance JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (solve->parsed()) return run_solve(g_path, h_path, no_fast_path, trace, no_memo);
        if (oracle->parsed()) return run_oracle(g_path, h_path, bbp, budget);
        if (decompose->parsed()) return run_decompose(g_path, dot_path);
        if (gen->parsed()) return run_gen_hard(inst_path, verify, out_dir, cap);
        if (chk->parsed()) return run_check_nmwts(inst_path);
    } catch (const bbpmcs::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const bbpmcs::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitParse;
}
