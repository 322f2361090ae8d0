// Acceptance gate: ten exact checks, one PASS/FAIL line each, exit 0 only if
// every check holds.  Optional arguments select a subset by number.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lltlab/cumulant.hpp"
#include "lltlab/errors.hpp"
#include "lltlab/lltgraph.hpp"
#include "lltlab/shapes.hpp"
#include "lltlab/simple_graph.hpp"
#include "lltlab/sympoly.hpp"
#include "lltlab/theorem.hpp"
#include "lltlab/treebij.hpp"

using namespace lltlab;

namespace {

unsigned long seed_from_env() {
    const char* s = std::getenv("LLT_LAB_SEED");
    return s ? std::strtoul(s, nullptr, 10) : 1ul;
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
        unsigned r = rng() % 5;
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

bool criterion_1(std::string& detail) {
    long cases = 0, failures = 0;
    for (const auto& p : lollipop_range(7)) {
        ++cases;
        if (!verify_theorem_1_2(p, p.l + p.m).holds) ++failures;
    }
    detail = "theorem on " + std::to_string(cases) + " melting lollipops with l+m <= 7, n = l+m";
    return failures == 0;
}

bool criterion_2(std::string& detail) {
    const long expected[] = {1, 1, 3, 16, 125, 1296};
    bool ok = true;
    for (int m = 1; m <= 6; ++m) {
        VerificationReport r = verify_corollary_1_3(m, m);
        ok = ok && r.holds;
        mpz_class trees = spanning_tree_count(complete_graph(m));
        ok = ok && trees == mpz_class(expected[m - 1]);
    }
    detail = "cumulant of K_m = tree sum = parking sum, m = 1..6, counts 1,1,3,16,125,1296";
    return ok;
}

bool criterion_3(std::string& detail) {
    long cases = 0;
    bool ok = true;
    auto check = [&](const LLTGraph& g) {
        ++cases;
        try {
            if (cumulant_of_graph(g, g.n) != cumulant_of_graph_recursive(g, g.n)) ok = false;
        } catch (const NotDivisible&) {
            ok = false;
        }
    };
    for (const auto& p : lollipop_range(5)) check(melting_lollipop_graph(p));
    std::mt19937_64 rng(seed_from_env());
    for (int i = 0; i < 50; ++i) check(random_unicellular_graph(rng, 5));
    detail = "closed form = recursive cumulant, exact division, on " + std::to_string(cases) +
             " graphs (lollipops l+m <= 5 plus 50 seeded unicellular)";
    return ok;
}

bool criterion_4(std::string& detail) {
    std::vector<LLTGraph> corpus = disconnected_corpus(5);
    bool ok = !corpus.empty();
    for (const auto& g : corpus) ok = ok && verify_disconnected_vanishing(g, g.n).holds;
    detail = "cumulant vanishes on all " + std::to_string(corpus.size()) +
             " disconnected corpus graphs with <= 5 vertices";
    return ok;
}

bool criterion_5(std::string& detail) {
    long cases = 0;
    bool ok = true;
    for (const auto& p : lollipop_range(6)) {
        ++cases;
        ok = ok && verify_schur_positivity(melting_lollipop_graph(p), p.l + p.m).holds;
    }
    detail = "Schur expansion of the cumulant is in Z>=0[q] on " + std::to_string(cases) +
             " melting lollipops with l+m <= 6";
    return ok;
}

bool criterion_6(std::string& detail) {
    long cases = 0;
    bool ok = true;
    for (const auto& p : lollipop_range(6)) {
        ++cases;
        ok = ok && verify_forest_identity(p, p.l + p.m).holds;
    }
    detail = "forest identity under q -> q+1 on " + std::to_string(cases) +
             " melting lollipops with l+m <= 6";
    return ok;
}

bool criterion_7(std::string& detail) {
    bool ok = true;
    unsigned long seed = seed_from_env();
    for (Lemma32Case c : {Lemma32Case::c1a, Lemma32Case::c1b, Lemma32Case::c1c,
                          Lemma32Case::c2_type1, Lemma32Case::c2_type2, Lemma32Case::c3}) {
        ok = ok && check_lemma_3_2(c, 3, seed, 0).holds;         // standalone, n = 3 vertices
        ok = ok && check_lemma_3_2(c, 5, seed, 20).holds;        // 20 ambients, n = 5 vertices
    }
    detail = "local edge relations 1a,1b,1c,2-i,2-ii,3, standalone and in 20 seeded ambients";
    return ok;
}

bool criterion_8(std::string& detail) {
    const long expected[] = {1, 3, 11, 45, 197};
    bool ok = true;
    long checks = 0;
    for (int m = 1; m <= 5; ++m) {
        long paths = 0;
        schroder_paths(m, [&](const SchroderPath& p) {
            ++paths;
            for (int i = 0; i + 1 < static_cast<int>(p.steps.size()); ++i)
                for (Lemma45Case c : {Lemma45Case::A, Lemma45Case::B}) {
                    try {
                        VerificationReport r = check_lemma_4_5(c, p, i, m);
                        ++checks;
                        ok = ok && r.holds;
                    } catch (const PatternMismatch&) {
                    }
                }
        });
        ok = ok && paths == expected[m - 1];
    }
    detail = "local path relations A and B at " + std::to_string(checks) +
             " admissible positions over paths of size <= 5 (counts 1,3,11,45,197)";
    return ok;
}

bool criterion_9(std::string& detail) {
    bool ok = true;
    long paths = 0;
    for (int m = 1; m <= 6; ++m)
        schroder_paths(m, [&](const SchroderPath& p) {
            ++paths;
            try {
                schroder_to_strips(p);  // asserts shapes_to_graph round trip
                if (graph_to_schroder(schroder_to_graph(p)) != p) ok = false;
            } catch (const Error&) {
                ok = false;
            }
        });

    const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int m = 1; m <= 7; ++m) {
        std::set<std::string> image, conditioned;
        plane_trees(m, [&](const PlaneTree& t) { image.insert(tree_to_schroder(t).steps); });
        schroder_paths(m, [&](const SchroderPath& p) {
            if (satisfies_tree_image_conditions(p)) conditioned.insert(p.steps);
        });
        ok = ok && image == conditioned &&
             static_cast<long>(image.size()) == catalan[m - 1];
    }

    const long cayley[] = {1, 1, 3, 16, 125, 1296};
    for (int m = 1; m <= 6; ++m) {
        std::set<ParkingFunction> parked;
        long trees = 0;
        spanning_trees(complete_graph(m), [&](const LabeledTree& t) {
            ++trees;
            parked.insert(tree_to_parking(t));
        });
        ok = ok && trees == cayley[m - 1] && static_cast<long>(parked.size()) == trees;
    }

    LabeledTree t(6, {{1, 3}, {1, 5}, {1, 6}, {2, 5}, {4, 5}});
    Drawing d = canonical_drawing(t);
    NuResult nr = nu(d.tree);
    std::vector<int> diag;
    for (int v : nr.cell_vertex) diag.push_back(d.label[v]);
    ok = ok && nr.seq.to_string() == "[(1,1,1)/(1),(1,1),(1),(1,1)/(1)]";
    ok = ok && tree_to_schroder(d.tree).to_string() == "ndnnedneee";
    ok = ok && schroder_to_dyck(tree_to_schroder(d.tree)).to_string() == "nnneenneee";
    ok = ok && diag == std::vector<int>{1, 3, 5, 6, 2, 4};
    ok = ok && tree_to_parking(t).to_string() == "(3,1,3,1,1)";

    detail = "round trips on " + std::to_string(paths) +
             " paths <= 6, image law with Catalan counts to m = 7, parking chain injective to "
             "m = 6, worked six-vertex example";
    return ok;
}

bool criterion_10(std::string& detail) {
    bool ok = true;
    long cases = 0;
    auto compare = [&](const ShapeSequence& seq) {
        ++cases;
        int n = seq.total_cells();
        if (llt_of_shapes(seq, n) != llt_of_graph(shapes_to_graph(seq), n)) ok = false;
    };
    for (int m = 1; m <= 6; ++m) plane_trees(m, [&](const PlaneTree& t) { compare(nu(t).seq); });
    for (int m = 1; m <= 5; ++m)
        schroder_paths(m, [&](const SchroderPath& p) { compare(schroder_to_strips(p)); });
    compare(parse_shape_sequence("[(3,2)/(1),(1,1)]"));
    detail = "tableau route = coloring route on " + std::to_string(cases) +
             " shape sequences (tree strips <= 6, path strips <= 5, two-shape example)";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    using Criterion = std::function<bool(std::string&)>;
    std::vector<Criterion> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                       criterion_5, criterion_6, criterion_7, criterion_8,
                                       criterion_9, criterion_10};
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        int id = std::atoi(argv[i]);
        if (id < 1 || id > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "unknown criterion %s (valid: 1..%zu)\n", argv[i],
                         criteria.size());
            return 2;
        }
        selected.insert(id);
    }

    int failures = 0;
    for (int id = 1; id <= static_cast<int>(criteria.size()); ++id) {
        if (!selected.empty() && !selected.count(id)) continue;
        std::string detail;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = criteria[id - 1](detail);
        } catch (const Error& e) {
            detail += std::string(detail.empty() ? "" : "; ") + "threw: " + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%2d] %s  %s (%.2f s)\n", id, ok ? "PASS" : "FAIL", detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("ACCEPTANCE FAILED: %d criteria\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE PASSED\n");
    return 0;
}
