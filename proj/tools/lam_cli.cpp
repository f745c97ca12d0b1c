// Command-line surface: generation, constructions, verification, exact
// solving, magic squares, and the theorem suite.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "lam/io.hpp"
#include "lam/magic.hpp"
#include "lam/solver.hpp"
#include "lam/theorem_suite.hpp"

namespace {

using lam::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lam::Error("parse", "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw lam::Error("parse", path + ": " + e.what());
    }
    return j;
}

void write_text(const std::optional<std::string>& path, const std::string& text) {
    if (path) {
        std::ofstream out(*path);
        if (!out) throw lam::Error("parse", "cannot write " + *path);
        out << text;
    } else {
        std::cout << text;
    }
}

lam::Graph graph_from_file(const std::string& path) {
    return lam::graph_from_json(read_json_file(path));
}

// Labeling files may embed their graph: {"graph": {...}, "labels": [...]}.
std::pair<lam::Graph, lam::EdgeLabeling> base_from_file(const std::string& path) {
    json j = read_json_file(path);
    if (!j.contains("graph")) throw lam::Error("parse", path + ": needs \"graph\"");
    lam::Graph g = lam::graph_from_json(j["graph"]);
    lam::EdgeLabeling f = lam::labeling_from_json(g, j);
    return {std::move(g), std::move(f)};
}

json labeling_file_json(const lam::Graph& g, const lam::EdgeLabeling& f) {
    json j = lam::labeling_to_json(g, f);
    j["graph"] = lam::graph_to_json(g);
    return j;
}

lam::FamilySpec parse_family(const std::string& name, std::optional<int> n,
                             std::optional<int> m) {
    using lam::Family;
    auto need = [&](std::optional<int> v, const char* flag) {
        if (!v) throw lam::Error("usage", std::string("family needs --") + flag);
        return *v;
    };
    if (name == "cycle") return {Family::cycle, {need(n, "n")}};
    if (name == "complete") return {Family::complete, {need(n, "n")}};
    if (name == "complete_bipartite")
        return {Family::complete_bipartite, {need(m, "m"), need(n, "n")}};
    if (name == "null") return {Family::null_graph, {need(n, "n")}};
    if (name == "wheel") return {Family::wheel, {need(n, "n")}};
    if (name == "mobius_ladder") return {Family::mobius_ladder, {need(n, "n")}};
    if (name == "g_mn") return {Family::g_mn, {need(m, "m"), need(n, "n")}};
    throw lam::Error("usage", "unknown family " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local antimagic labeling toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named-family graph");
    std::string family;
    std::optional<int> gen_n, gen_m;
    std::optional<std::string> gen_out, gen_dot;
    gen->add_option("--family", family, "cycle|complete|complete_bipartite|null|wheel|mobius_ladder|g_mn")
        ->required();
    gen->add_option("--n", gen_n);
    gen->add_option("--m", gen_m);
    gen->add_option("--out", gen_out, "JSON output path (default stdout)");
    gen->add_option("--dot", gen_dot, "also write DOT to this path");

    // magic
    auto* magic = app.add_subcommand("magic", "print a magic square or shifted block");
    int magic_n = 3;
    std::optional<int> block_i;
    long long block_q = 0;
    magic->add_option("--n", magic_n)->required();
    magic->add_option("--block", block_i, "print the shifted block for label i");
    magic->add_option("--q", block_q, "label range for --block (default i)");

    // label
    auto* label = app.add_subcommand("label", "run a named construction");
    label->require_subcommand(1);
    auto* lc = label->add_subcommand("cycle", "three-color cycle labeling");
    int lc_n = 3;
    std::optional<std::string> lc_out;
    lc->add_option("--n", lc_n)->required();
    lc->add_option("--out", lc_out);
    auto* ll = label->add_subcommand("lex", "magic-square block labeling of G[O_n]");
    std::string ll_base;
    int ll_n = 3;
    bool ll_matrix = false;
    std::optional<std::string> ll_out;
    ll->add_option("--base", ll_base, "graph+labeling JSON")->required();
    ll->add_option("--n", ll_n)->required();
    ll->add_flag("--emit-matrix", ll_matrix, "emit the labeling matrix text");
    ll->add_option("--out", ll_out);
    auto* lb = label->add_subcommand("bipartite", "Euler-tour labeling, even-regular bipartite");
    std::string lb_graph;
    std::optional<int> lb_start;
    std::optional<std::string> lb_out;
    lb->add_option("--graph", lb_graph)->required();
    lb->add_option("--start-edge", lb_start);
    lb->add_option("--out", lb_out);
    auto* lt = label->add_subcommand("tripartite", "Euler-tour labeling, tripartite hub instance");
    std::string lt_graph, lt_parts;
    std::optional<std::string> lt_out;
    lt->add_option("--graph", lt_graph)->required();
    lt->add_option("--parts", lt_parts, "{\"w\":i,\"V2\":[...],\"V3\":[...]}")->required();
    lt->add_option("--out", lt_out);

    // verify
    auto* ver = app.add_subcommand("verify", "verify a labeling");
    std::string ver_graph, ver_labeling;
    ver->add_option("--graph", ver_graph)->required();
    ver->add_option("--labeling", ver_labeling)->required();

    // solve
    auto* solve = app.add_subcommand("solve", "exact chi_la on a small graph");
    std::string solve_graph;
    std::uint64_t solve_budget = 100'000'000;
    bool solve_oracle = false;
    std::optional<std::string> solve_out;
    solve->add_option("--graph", solve_graph)->required();
    solve->add_option("--budget", solve_budget, "node budget");
    solve->add_flag("--oracle", solve_oracle, "force the naive enumeration oracle");
    solve->add_option("--out", solve_out);

    // theorems
    auto* thm = app.add_subcommand("theorems", "replay the desk-scale theorem suite");
    std::string thm_filter;
    thm->add_option("--filter", thm_filter, "substring filter on case ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            lam::Graph g = lam::generate(parse_family(family, gen_n, gen_m));
            write_text(gen_out, lam::graph_to_json(g).dump(2) + "\n");
            if (gen_dot) write_text(gen_dot, lam::graph_to_dot(g));
            return kExitOk;
        }
        if (*magic) {
            lam::MagicSquare s = lam::magic_square(magic_n);
            auto grid = block_i
                            ? lam::shifted_block(s, *block_i,
                                                 block_q ? block_q : *block_i)
                            : s.entries;
            for (const auto& row : grid) {
                for (size_t j = 0; j < row.size(); ++j)
                    std::cout << (j ? " " : "") << row[j];
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (*lc) {
            lam::Graph g = lam::cycle(lc_n);
            write_text(lc_out, labeling_file_json(g, lam::cycle_labeling(lc_n)).dump(2) + "\n");
            return kExitOk;
        }
        if (*ll) {
            auto [g, f] = base_from_file(ll_base);
            lam::EdgeLabeling out = lam::lex_labeling(g, f, ll_n);
            lam::Graph prod = lam::lex_product(g, lam::null_graph(ll_n));
            if (ll_matrix) {
                write_text(ll_out, lam::matrix_to_text(lam::to_matrix(prod, out)));
            } else {
                write_text(ll_out, labeling_file_json(prod, out).dump(2) + "\n");
            }
            return kExitOk;
        }
        if (*lb) {
            lam::Graph g = graph_from_file(lb_graph);
            lam::EdgeLabeling f = lam::bipartite_regular_labeling(g, lb_start);
            write_text(lb_out, labeling_file_json(g, f).dump(2) + "\n");
            return kExitOk;
        }
        if (*lt) {
            lam::Graph g = graph_from_file(lt_graph);
            lam::TripartiteParts parts = lam::parts_from_json(read_json_file(lt_parts));
            lam::TripartiteStructure s = lam::validate_tripartite(g, parts);
            lam::EdgeLabeling f = lam::tripartite_labeling(s);
            write_text(lt_out, labeling_file_json(g, f).dump(2) + "\n");
            return kExitOk;
        }
        if (*ver) {
            lam::Graph g = graph_from_file(ver_graph);
            lam::EdgeLabeling f = lam::labeling_from_json(g, read_json_file(ver_labeling));
            lam::VerificationReport rep = lam::verify(g, f);
            json j{{"bijection", rep.is_bijection},
                   {"proper", rep.is_proper},
                   {"colors", rep.colors},
                   {"color_count", rep.color_count}};
            json viols = json::array();
            for (auto [u, v] : rep.violations) viols.push_back({u, v});
            j["violations"] = viols;
            std::cout << j.dump(2) << "\n";
            return rep.is_proper ? kExitOk : kExitCheckFailed;
        }
        if (*solve) {
            lam::Graph g = graph_from_file(solve_graph);
            lam::SolveResult r = solve_oracle ? lam::chi_la_naive(g)
                                              : lam::chi_la_exact(g, solve_budget);
            json j;
            j["nodes_explored"] = r.nodes_explored;
            switch (r.status) {
                case lam::SolveStatus::exact: j["status"] = "exact"; break;
                case lam::SolveStatus::budget_exceeded: j["status"] = "budget_exceeded"; break;
                case lam::SolveStatus::undefined_no_labeling:
                    j["status"] = "undefined_no_labeling";
                    break;
            }
            if (r.chi_la) j["chi_la"] = *r.chi_la;
            if (r.upper_bound) j["upper_bound"] = *r.upper_bound;
            if (r.witness) j["witness"] = lam::labeling_to_json(g, *r.witness);
            write_text(solve_out, j.dump(2) + "\n");
            return r.status == lam::SolveStatus::exact ? kExitOk : kExitCheckFailed;
        }
        if (*thm) {
            int failed = 0, ran = 0;
            for (const auto& c : lam::theorem_suite()) {
                if (!thm_filter.empty() && c.id.find(thm_filter) == std::string::npos)
                    continue;
                ++ran;
                lam::CaseResult res = c.run();
                std::cout << (res.pass ? "PASS " : "FAIL ") << c.id;
                if (!res.detail.empty()) std::cout << " — " << res.detail;
                std::cout << "\n";
                if (!res.pass) ++failed;
            }
            std::cout << ran - failed << "/" << ran << " cases passed\n";
            return failed == 0 ? kExitOk : kExitCheckFailed;
        }
    } catch (const lam::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        bool usage = e.kind() == "usage" || e.kind() == "parse" || e.kind() == "invalid-spec";
        return usage ? kExitUsage : kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
