// Command-line front end: exact LLT polynomials, cumulants, melting
// lollipops, and the tree / Schroder path / parking function bijections.
//
// Exit codes: 0 all checks hold, 1 a verification failed, 2 usage or input
// error, 3 a built-in identity check failed (exact division left a remainder,
// a round trip broke); code 3 always comes with a witness dump on stderr.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lltlab/cumulant.hpp"
#include "lltlab/errors.hpp"
#include "lltlab/json_io.hpp"
#include "lltlab/lltgraph.hpp"
#include "lltlab/shapes.hpp"
#include "lltlab/sympoly.hpp"
#include "lltlab/theorem.hpp"
#include "lltlab/treebij.hpp"

using namespace lltlab;

namespace {

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        nlohmann::json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void emit(const ojson& j) { std::cout << j.dump() << "\n"; }

void print_report_human(const VerificationReport& r) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.2f", r.millis);
    std::cout << (r.holds ? "PASS " : "FAIL ") << r.claim << "  " << r.params << "  (" << ms
              << " ms)\n";
    for (const auto& n : r.notes) std::cout << "  " << n << "\n";
    if (!r.holds && r.witness) {
        std::cout << "  lhs:        " << r.witness->lhs.to_string() << "\n";
        std::cout << "  rhs:        " << r.witness->rhs.to_string() << "\n";
        std::cout << "  difference: " << r.witness->difference.to_string() << "\n";
    }
}

int finish_reports(const std::vector<VerificationReport>& reports, bool json) {
    bool all = true;
    if (json) {
        ojson arr = ojson::array();
        for (const auto& r : reports) {
            arr.push_back(report_to_json(r));
            all = all && r.holds;
        }
        emit(arr);
    } else {
        for (const auto& r : reports) {
            print_report_human(r);
            all = all && r.holds;
        }
        std::cout << (all ? "all checks hold" : "SOME CHECKS FAILED") << " (" << reports.size()
                  << (reports.size() == 1 ? " report)\n" : " reports)\n");
    }
    return all ? 0 : 1;
}

unsigned long env_seed() {
    const char* s = std::getenv("LLT_LAB_SEED");
    if (!s) return 1;
    try {
        return std::stoul(s);
    } catch (...) {
        throw ParseError("LLT_LAB_SEED must be an unsigned integer");
    }
}

std::vector<MeltingLollipop> lollipop_range(int max_total) {
    std::vector<MeltingLollipop> out;
    for (int l = 0; l <= max_total - 1; ++l)
        for (int m = 1; l + m <= max_total; ++m)
            for (int k = 0; k <= m - 1; ++k) out.emplace_back(l, m, k);
    return out;
}

LLTGraph random_unicellular_graph(std::mt19937_64& rng, int max_cells) {
    int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_cells));
    std::vector<int> contents{0};
    for (int i = 1; i < m; ++i) {
        unsigned r = rng() % 5;  // 0,1: stay level; 2,3: rise one; 4: jump two
        contents.push_back(contents.back() + (r < 2 ? 0 : r < 4 ? 1 : 2));
    }
    return shapes_to_graph(unicellular_sequence(contents));
}

LLTGraph disjoint_union(const LLTGraph& a, const LLTGraph& b) {
    auto shifted = [&](std::vector<std::pair<int, int>> v,
                       const std::vector<std::pair<int, int>>& w) {
        for (auto [x, y] : w) v.emplace_back(x + a.n, y + a.n);
        return v;
    };
    return LLTGraph(a.n + b.n, shifted(a.e1, b.e1), shifted(a.e2, b.e2), shifted(a.ed, b.ed));
}

// Disconnected graphs on up to max_vertices vertices: every two-piece
// disjoint union of connected melting-lollipop graphs (including the single
// vertex), plus the lollipops that are natively disconnected because the
// whole clique boundary melted away.
std::vector<LLTGraph> disconnected_corpus(int max_vertices) {
    std::vector<LLTGraph> pieces;
    for (int l = 0; l + 1 <= max_vertices; ++l)
        for (int m = 1; l + m <= max_vertices; ++m)
            for (int k = 0; k <= m - 1; ++k) {
                LLTGraph g = melting_lollipop_graph(MeltingLollipop(l, m, k));
                if (is_connected(underlying_simple_graph(g))) pieces.push_back(g);
            }
    std::vector<LLTGraph> out;
    std::set<std::string> seen;
    auto add = [&](const LLTGraph& g) {
        if (seen.insert(g.key()).second) out.push_back(g);
    };
    for (const auto& a : pieces)
        for (const auto& b : pieces)
            if (a.n + b.n <= max_vertices) add(disjoint_union(a, b));
    for (int l = 1; l + 1 <= max_vertices; ++l)
        for (int m = 1; l + m <= max_vertices; ++m) {
            LLTGraph g = melting_lollipop_graph(MeltingLollipop(l, m, m - 1));
            if (!is_connected(underlying_simple_graph(g))) add(g);
        }
    return out;
}

VerificationReport recursive_agreement(const LLTGraph& g, int num_vars) {
    auto t0 = std::chrono::steady_clock::now();
    std::string params = "graph=" + g.key() + " n=" + std::to_string(num_vars);
    SymPoly a = cumulant_of_graph(g, num_vars);
    SymPoly b = cumulant_of_graph_recursive(g, num_vars);
    VerificationReport r =
        a == b ? VerificationReport::pass("cumulant_recursive_agreement", params)
               : VerificationReport::fail("cumulant_recursive_agreement", params, a, b);
    r.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// The composite bijection suite: round trips, image characterization with
// Catalan cardinalities, injectivity of the parking chain, and the frozen
// worked examples.
std::vector<VerificationReport> bijection_suite(int max_size) {
    std::vector<VerificationReport> out;

    {
        auto t0 = std::chrono::steady_clock::now();
        long long paths = 0;
        for (int m = 0; m <= max_size; ++m)
            schroder_paths(m, [&](const SchroderPath& p) {
                ++paths;
                schroder_to_strips(p);  // asserts its own round trip
                if (graph_to_schroder(schroder_to_graph(p)) != p)
                    throw InternalCheckFailed("graph_to_schroder: round trip failed on " +
                                              p.to_string());
            });
        auto r = VerificationReport::pass("verify_strip_round_trips",
                                          "max_size=" + std::to_string(max_size));
        r.notes.push_back(std::to_string(paths) + " paths");
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
        out.push_back(std::move(r));
    }

    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::vector<std::string> notes;
        for (int m = 1; m <= max_size + 1; ++m) {
            std::set<std::string> image, conditioned;
            long long trees = 0;
            plane_trees(m, [&](const PlaneTree& t) {
                ++trees;
                SchroderPath p = tree_to_schroder(t);
                if (!image.insert(p.to_string()).second) ok = false;
                if (schroder_to_dyck(dyck_to_schroder(schroder_to_dyck(p))) !=
                    schroder_to_dyck(p))
                    ok = false;
            });
            schroder_paths(m, [&](const SchroderPath& p) {
                if (satisfies_tree_image_conditions(p)) conditioned.insert(p.to_string());
            });
            if (image != conditioned || static_cast<long long>(image.size()) != trees) ok = false;
            notes.push_back("m=" + std::to_string(m) + ": " + std::to_string(image.size()) +
                            " image paths");
        }
        VerificationReport r(VerificationReport::pass("verify_tree_path_image",
                                                      "max_size=" + std::to_string(max_size)));
        r.holds = ok;
        r.notes = std::move(notes);
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
        out.push_back(std::move(r));
    }

    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::vector<std::string> notes;
        for (int m = 1; m <= max_size; ++m) {
            std::set<ParkingFunction> image;
            long long trees = 0;
            spanning_trees(complete_graph(m), [&](const LabeledTree& t) {
                ++trees;
                if (!image.insert(tree_to_parking(t)).second) ok = false;
            });
            if (static_cast<long long>(image.size()) != trees) ok = false;
            notes.push_back("m=" + std::to_string(m) + ": " + std::to_string(image.size()) +
                            " parking functions from " + std::to_string(trees) + " trees");
        }
        VerificationReport r(VerificationReport::pass("verify_tree_parking_injective",
                                                      "max_size=" + std::to_string(max_size)));
        r.holds = ok;
        r.notes = std::move(notes);
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
        out.push_back(std::move(r));
    }

    {
        auto t0 = std::chrono::steady_clock::now();
        LabeledTree t(6, {{1, 3}, {1, 5}, {1, 6}, {2, 5}, {4, 5}});
        Drawing d = canonical_drawing(t);
        NuResult nr = nu(d.tree);
        std::vector<int> diag;
        for (int v : nr.cell_vertex) diag.push_back(d.label[v]);
        bool ok = nr.seq.to_string() == "[(1,1,1)/(1),(1,1),(1),(1,1)/(1)]" &&
                  tree_to_schroder(d.tree).to_string() == "ndnnedneee" &&
                  schroder_to_dyck(tree_to_schroder(d.tree)).to_string() == "nnneenneee" &&
                  diag == std::vector<int>{1, 3, 5, 6, 2, 4} &&
                  tree_to_parking(t).to_string() == "(3,1,3,1,1)";
        VerificationReport r(
            VerificationReport::pass("verify_worked_example", "six-vertex labeled tree"));
        r.holds = ok;
        r.notes.push_back("nu=" + nr.seq.to_string());
        r.notes.push_back("path=" + tree_to_schroder(d.tree).to_string());
        r.notes.push_back("parking=" + tree_to_parking(t).to_string());
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
        out.push_back(std::move(r));
    }

    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact LLT polynomials, cumulants, and bijections of melting lollipops"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ----- llt {shapes,graph} ---------------------------------------------
    auto* llt = app.add_subcommand("llt", "LLT polynomial of a shape sequence or an LLT graph");
    llt->require_subcommand(1);

    std::string shapes_arg;
    int shapes_vars = -1;
    auto* llt_shapes = llt->add_subcommand("shapes", "From a shape sequence, e.g. \"[(3,2)/(1),(1,1)]\"");
    llt_shapes->add_option("seq", shapes_arg, "shape sequence literal")->required();
    llt_shapes->add_option("--vars", shapes_vars, "number of variables (default: cell count)");
    llt_shapes->callback([&] {
        ShapeSequence seq = parse_shape_sequence(shapes_arg);
        int n = shapes_vars >= 0 ? shapes_vars : seq.total_cells();
        emit(sympoly_to_json(llt_of_shapes(seq, n)));
    });

    std::string graph_file;
    int graph_vars = -1;
    auto* llt_graph = llt->add_subcommand("graph", "From an LLT graph JSON file");
    llt_graph->add_option("graph.json", graph_file, "graph file")->required();
    llt_graph->add_option("--vars", graph_vars, "number of variables (default: vertex count)");
    llt_graph->callback([&] {
        LLTGraph g = graph_from_json(read_json_file(graph_file));
        int n = graph_vars >= 0 ? graph_vars : g.n;
        emit(sympoly_to_json(llt_of_graph(g, n)));
    });

    // ----- cumulant ---------------------------------------------------------
    std::string cum_file;
    int cum_vars = -1;
    bool cum_recursive = false;
    auto* cum = app.add_subcommand("cumulant", "LLT cumulant of an LLT graph");
    cum->add_option("graph.json", cum_file, "graph file")->required();
    cum->add_option("--vars", cum_vars, "number of variables (default: vertex count)");
    cum->add_flag("--recursive", cum_recursive, "solve the moment relation instead of the closed form");
    cum->callback([&] {
        LLTGraph g = graph_from_json(read_json_file(cum_file));
        int n = cum_vars >= 0 ? cum_vars : g.n;
        emit(sympoly_to_json(cum_recursive ? cumulant_of_graph_recursive(g, n)
                                           : cumulant_of_graph(g, n)));
    });

    // ----- lollipop ----------------------------------------------------------
    int lp_l = 0, lp_m = 1, lp_k = 0, lp_vars = -1;
    bool lp_graph = false, lp_verify = false, lp_schur = false, lp_json = false;
    auto* lp = app.add_subcommand("lollipop", "Melting lollipop: cumulant (default), graph, verification, or Schur expansion");
    lp->add_option("--l", lp_l, "path length")->required();
    lp->add_option("--m", lp_m, "clique size")->required();
    lp->add_option("--k", lp_k, "melted edges")->required();
    lp->add_option("--vars", lp_vars, "number of variables (default: l+m)");
    lp->add_flag("--graph", lp_graph, "print the LLT graph");
    lp->add_flag("--verify", lp_verify, "check cumulant = sum over spanning trees");
    lp->add_flag("--schur", lp_schur, "print the cumulant in the Schur basis");
    lp->add_flag("--json", lp_json, "JSON report output with --verify");
    lp->callback([&] {
        MeltingLollipop p(lp_l, lp_m, lp_k);
        int n = lp_vars >= 0 ? lp_vars : lp_l + lp_m;
        if (static_cast<int>(lp_graph) + lp_verify + lp_schur > 1)
            throw CLI::ValidationError("lollipop", "--graph, --verify, --schur are exclusive");
        if (lp_graph) {
            emit(graph_to_json(melting_lollipop_graph(p)));
        } else if (lp_verify) {
            exit_code = finish_reports({verify_theorem_1_2(p, n)}, lp_json);
        } else if (lp_schur) {
            TermMap sch = to_schur_basis(cumulant_of_graph(melting_lollipop_graph(p), n));
            ojson j;
            j["num_vars"] = n;
            j["basis"] = "schur";
            ojson terms = ojson::array();
            for (const auto& [lam, c] : sch) {
                ojson t;
                t["partition"] = lam.parts();
                t["q_coeffs"] = qpoly_to_json(c);
                terms.push_back(std::move(t));
            }
            j["terms"] = std::move(terms);
            emit(j);
        } else {
            emit(sympoly_to_json(cumulant_of_graph(melting_lollipop_graph(p), n)));
        }
    });

    // ----- trees / nu / mu / parking ----------------------------------------
    std::string trees_file;
    auto* trees_cmd = app.add_subcommand("trees", "Spanning trees of a graph's underlying simple graph");
    trees_cmd->add_option("graph.json", trees_file, "graph file")->required();
    trees_cmd->callback([&] {
        LLTGraph g = graph_from_json(read_json_file(trees_file));
        ojson arr = ojson::array();
        spanning_trees(underlying_simple_graph(g),
                       [&](const LabeledTree& t) { arr.push_back(tree_to_json(t)); });
        emit(arr);
    });

    std::string nu_file;
    auto* nu_cmd = app.add_subcommand("nu", "Vertical-strip sequence of a labeled tree");
    nu_cmd->add_option("tree.json", nu_file, "tree file, [[u,v],...]")->required();
    nu_cmd->callback([&] {
        Drawing d = canonical_drawing(tree_from_json(read_json_file(nu_file)));
        NuResult nr = nu(d.tree);
        ojson j = shapes_to_json(nr.seq);
        ojson diag = ojson::array();
        for (int v : nr.cell_vertex) diag.push_back(d.label[v]);
        j["diagonal_labels"] = std::move(diag);
        emit(j);
    });

    std::string mu_arg;
    auto* mu_cmd = app.add_subcommand("mu", "Vertical-strip sequence of a Schroder path");
    mu_cmd->add_option("path", mu_arg, "step string over {n,e,d}, e.g. ndnee")->required();
    mu_cmd->callback([&] { emit(shapes_to_json(schroder_to_strips(SchroderPath(mu_arg)))); });

    int parking_m = 0;
    auto* park_cmd = app.add_subcommand("parking", "All parking functions on m cars");
    park_cmd->add_option("--m", parking_m, "number of cars")->required();
    park_cmd->callback([&] {
        ojson arr = ojson::array();
        parking_functions(parking_m,
                          [&](const ParkingFunction& f) { arr.push_back(parking_to_json(f)); });
        emit(arr);
    });

    // ----- verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Run one verifier family");
    verify->require_subcommand(1);

    {
        static int l = -1, m = -1, k = -1, vars = -1, max_total = -1;
        static bool json = false;
        auto* c = verify->add_subcommand("theorem", "cumulant of a melting lollipop = sum of LLT polynomials over spanning trees");
        c->add_option("--l", l);
        c->add_option("--m", m);
        c->add_option("--k", k);
        c->add_option("--vars", vars, "number of variables (default: l+m)");
        c->add_option("--max-total", max_total, "check every (l,m,k) with l+m <= N");
        c->add_flag("--json", json);
        c->callback([&] {
            std::vector<VerificationReport> reports;
            if (max_total > 0) {
                for (const auto& p : lollipop_range(max_total))
                    reports.push_back(verify_theorem_1_2(p, vars >= 0 ? vars : p.l + p.m));
            } else {
                if (l < 0 || m < 0 || k < 0)
                    throw CLI::ValidationError("verify theorem", "need --l --m --k or --max-total");
                MeltingLollipop p(l, m, k);
                reports.push_back(verify_theorem_1_2(p, vars >= 0 ? vars : l + m));
            }
            exit_code = finish_reports(reports, json);
        });
    }

    {
        static int m = -1, vars = -1, max_m = -1;
        static bool json = false;
        auto* c = verify->add_subcommand("corollary", "cumulant of the complete graph = tree sum = parking-function sum");
        c->add_option("--m", m);
        c->add_option("--vars", vars, "number of variables (default: m)");
        c->add_option("--max-m", max_m, "check every complete graph up to K_m");
        c->add_flag("--json", json);
        c->callback([&] {
            std::vector<VerificationReport> reports;
            if (max_m > 0)
                for (int i = 1; i <= max_m; ++i)
                    reports.push_back(verify_corollary_1_3(i, vars >= 0 ? vars : i));
            else if (m > 0)
                reports.push_back(verify_corollary_1_3(m, vars >= 0 ? vars : m));
            else
                throw CLI::ValidationError("verify corollary", "need --m or --max-m");
            exit_code = finish_reports(reports, json);
        });
    }

    {
        static std::string file;
        static int l = -1, m = -1, k = -1, vars = -1, max_total = -1, random_count = 0,
                   random_size = 5;
        static unsigned long seed = 0;
        static bool json = false;
        auto* c = verify->add_subcommand("moebius", "moment-cumulant relation, plus closed-form vs recursive agreement");
        c->add_option("graph.json", file, "graph file");
        c->add_option("--l", l);
        c->add_option("--m", m);
        c->add_option("--k", k);
        c->add_option("--vars", vars, "number of variables (default: vertex count)");
        c->add_option("--max-total", max_total, "check every melting lollipop with l+m <= N");
        c->add_option("--random", random_count, "add R seeded-random unicellular graphs");
        c->add_option("--random-size", random_size, "max cells of random graphs");
        c->add_option("--seed", seed, "RNG seed (default: LLT_LAB_SEED or 1)");
        c->add_flag("--json", json);
        c->callback([&] {
            std::vector<LLTGraph> graphs;
            if (!file.empty()) graphs.push_back(graph_from_json(read_json_file(file)));
            if (l >= 0 && m >= 0 && k >= 0)
                graphs.push_back(melting_lollipop_graph(MeltingLollipop(l, m, k)));
            if (max_total > 0)
                for (const auto& p : lollipop_range(max_total))
                    graphs.push_back(melting_lollipop_graph(p));
            if (random_count > 0) {
                std::mt19937_64 rng(seed ? seed : env_seed());
                for (int i = 0; i < random_count; ++i)
                    graphs.push_back(random_unicellular_graph(rng, random_size));
            }
            if (graphs.empty())
                throw CLI::ValidationError(
                    "verify moebius", "need a graph file, --l --m --k, --max-total, or --random");
            std::vector<VerificationReport> reports;
            for (const LLTGraph& g : graphs) {
                int n = vars >= 0 ? vars : g.n;
                reports.push_back(verify_moebius_consistency(g, n));
                reports.push_back(recursive_agreement(g, n));
            }
            exit_code = finish_reports(reports, json);
        });
    }

    {
        static int l = -1, m = -1, k = -1, vars = -1, max_total = -1;
        static bool json = false;
        auto* c = verify->add_subcommand("forest-identity", "shifted LLT of a lollipop = forest sum of shifted strip products");
        c->add_option("--l", l);
        c->add_option("--m", m);
        c->add_option("--k", k);
        c->add_option("--vars", vars, "number of variables (default: l+m)");
        c->add_option("--max-total", max_total, "check every (l,m,k) with l+m <= N");
        c->add_flag("--json", json);
        c->callback([&] {
            std::vector<VerificationReport> reports;
            if (max_total > 0) {
                for (const auto& p : lollipop_range(max_total))
                    reports.push_back(verify_forest_identity(p, vars >= 0 ? vars : p.l + p.m));
            } else {
                if (l < 0 || m < 0 || k < 0)
                    throw CLI::ValidationError("verify forest-identity",
                                               "need --l --m --k or --max-total");
                MeltingLollipop p(l, m, k);
                reports.push_back(verify_forest_identity(p, vars >= 0 ? vars : l + m));
            }
            exit_code = finish_reports(reports, json);
        });
    }

    {
        static std::string file;
        static int vars = -1, max_vertices = -1;
        static bool json = false;
        auto* c = verify->add_subcommand("vanishing", "cumulant of a disconnected graph is zero");
        c->add_option("graph.json", file, "graph file");
        c->add_option("--vars", vars, "number of variables (default: vertex count)");
        c->add_option("--max-vertices", max_vertices,
                      "check the whole disconnected corpus up to this many vertices");
        c->add_flag("--json", json);
        c->callback([&] {
            std::vector<LLTGraph> graphs;
            if (!file.empty()) graphs.push_back(graph_from_json(read_json_file(file)));
            if (max_vertices > 0)
                for (auto& g : disconnected_corpus(max_vertices)) graphs.push_back(std::move(g));
            if (graphs.empty())
                throw CLI::ValidationError("verify vanishing",
                                           "need a graph file or --max-vertices");
            std::vector<VerificationReport> reports;
            for (const LLTGraph& g : graphs)
                reports.push_back(verify_disconnected_vanishing(g, vars >= 0 ? vars : g.n));
            exit_code = finish_reports(reports, json);
        });
    }

    {
        static int l = -1, m = -1, k = -1, vars = -1, max_total = -1;
        static bool json = false;
        auto* c = verify->add_subcommand("schur", "cumulant of a melting lollipop is Schur-positive");
        c->add_option("--l", l);
        c->add_option("--m", m);
        c->add_option("--k", k);
        c->add_option("--vars", vars, "number of variables (default: l+m)");
        c->add_option("--max-total", max_total, "check every (l,m,k) with l+m <= N");
        c->add_flag("--json", json);
        c->callback([&] {
            std::vector<VerificationReport> reports;
            if (max_total > 0) {
                for (const auto& p : lollipop_range(max_total))
                    reports.push_back(verify_schur_positivity(melting_lollipop_graph(p),
                                                              vars >= 0 ? vars : p.l + p.m));
            } else {
                if (l < 0 || m < 0 || k < 0)
                    throw CLI::ValidationError("verify schur", "need --l --m --k or --max-total");
                MeltingLollipop p(l, m, k);
                reports.push_back(
                    verify_schur_positivity(melting_lollipop_graph(p), vars >= 0 ? vars : l + m));
            }
            exit_code = finish_reports(reports, json);
        });
    }

    {
        static int max_trees = 6, max_paths = 5;
        static bool json = false;
        auto* c = verify->add_subcommand(
            "cross-representation", "llt_of_shapes agrees with llt_of_graph over shapes_to_graph");
        c->add_option("--max-trees", max_trees, "largest labeled-tree vertex count");
        c->add_option("--max-paths", max_paths, "largest Schroder path size");
        c->add_flag("--json", json);
        c->callback([&] {
            auto t0 = std::chrono::steady_clock::now();
            long long checked = 0;
            bool ok = true;
            auto compare = [&](const ShapeSequence& seq) {
                ++checked;
                int n = seq.total_cells();
                if (llt_of_shapes(seq, n) != llt_of_graph(shapes_to_graph(seq), n)) ok = false;
            };
            for (int m = 1; m <= max_trees; ++m)
                plane_trees(m, [&](const PlaneTree& t) { compare(nu(t).seq); });
            for (int m = 1; m <= max_paths; ++m)
                schroder_paths(m, [&](const SchroderPath& p) { compare(schroder_to_strips(p)); });
            compare(parse_shape_sequence("[(3,2)/(1),(1,1)]"));
            VerificationReport r(VerificationReport::pass(
                "verify_cross_representation", "max_trees=" + std::to_string(max_trees) +
                                                   " max_paths=" + std::to_string(max_paths)));
            r.holds = ok;
            r.notes.push_back(std::to_string(checked) + " shape sequences");
            r.millis =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            exit_code = finish_reports({r}, json);
        });
    }

    {
        static std::string which = "all";
        static int vars = -1, ambients = 20;
        static unsigned long seed = 0;
        static bool json = false;
        auto* c = verify->add_subcommand("lemma-3-2", "local edge relations, standalone and in random ambients");
        c->add_option("--case", which, "1a|1b|1c|2-i|2-ii|3|all");
        c->add_option("--vars", vars,
                      "number of colors (default: 3 standalone, then 5 with ambients)");
        c->add_option("--ambients", ambients, "random ambient graphs per case");
        c->add_option("--seed", seed, "RNG seed (default: LLT_LAB_SEED or 1)");
        c->add_flag("--json", json);
        c->callback([&] {
            std::vector<std::pair<std::string, Lemma32Case>> all = {
                {"1a", Lemma32Case::c1a},     {"1b", Lemma32Case::c1b},
                {"1c", Lemma32Case::c1c},     {"2-i", Lemma32Case::c2_type1},
                {"2-ii", Lemma32Case::c2_type2}, {"3", Lemma32Case::c3}};
            std::vector<VerificationReport> reports;
            unsigned long s = seed ? seed : env_seed();
            bool matched = false;
            for (const auto& [name, cs] : all)
                if (which == "all" || which == name) {
                    matched = true;
                    if (vars >= 0) {
                        reports.push_back(check_lemma_3_2(cs, vars, s, ambients));
                    } else {
                        reports.push_back(check_lemma_3_2(cs, 3, s, 0));
                        reports.push_back(check_lemma_3_2(cs, 5, s, ambients));
                    }
                }
            if (!matched) throw CLI::ValidationError("verify lemma-3-2", "unknown case " + which);
            exit_code = finish_reports(reports, json);
        });
    }

    {
        static std::string path, which;
        static int pos = -1, vars = -1, max_size = 5;
        static bool json = false;
        auto* c = verify->add_subcommand("lemma-4-5", "local path relations at admissible positions");
        c->add_option("--path", path, "single Schroder path");
        c->add_option("--pos", pos, "step index of the factor");
        c->add_option("--case", which, "A|B");
        c->add_option("--vars", vars, "number of variables (default: path size)");
        c->add_option("--max-size", max_size, "sweep all paths and positions up to this size");
        c->add_flag("--json", json);
        c->callback([&] {
            std::vector<VerificationReport> reports;
            if (!path.empty()) {
                if (pos < 0 || (which != "A" && which != "B"))
                    throw CLI::ValidationError("verify lemma-4-5",
                                               "--path needs --pos and --case A|B");
                SchroderPath p(path);
                reports.push_back(check_lemma_4_5(which == "A" ? Lemma45Case::A : Lemma45Case::B,
                                                  p, pos, vars >= 0 ? vars : p.size()));
            } else {
                for (int m = 1; m <= max_size; ++m)
                    schroder_paths(m, [&](const SchroderPath& p) {
                        int n = vars >= 0 ? vars : m;
                        for (int i = 0; i + 1 < static_cast<int>(p.steps.size()); ++i)
                            for (Lemma45Case cs : {Lemma45Case::A, Lemma45Case::B}) {
                                try {
                                    reports.push_back(check_lemma_4_5(cs, p, i, n));
                                } catch (const PatternMismatch&) {
                                }
                            }
                    });
            }
            exit_code = finish_reports(reports, json);
        });
    }

    {
        static int max_size = 6;
        static bool json = false;
        auto* c = verify->add_subcommand("bijections", "round trips, image law, injectivity, worked examples");
        c->add_option("--max-size", max_size, "largest path / tree size");
        c->add_flag("--json", json);
        c->callback([&] { exit_code = finish_reports(bijection_suite(max_size), json); });
    }

    // ----- sweep ---------------------------------------------------------------
    {
        static int max_total = 4, jobs = 0;
        static bool json = false;
        auto* c = app.add_subcommand("sweep", "theorem + forest + moebius + Schur checks over all (l,m,k)");
        c->add_option("--max-total", max_total, "largest l+m")->required();
        c->add_option("--jobs", jobs, "worker threads (default: hardware)");
        c->add_flag("--json", json);
        c->callback([&] { exit_code = finish_reports(sweep(max_total, jobs), json); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const NotDivisible& e) {
        std::cerr << "internal identity violation: " << e.what() << "\n";
        return 3;
    } catch (const InternalCheckFailed& e) {
        std::cerr << "internal identity violation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
