#include "lltlab/treebij.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lltlab/errors.hpp"
#include "lltlab/lltgraph.hpp"
#include "lltlab/shapes.hpp"
#include "lltlab/simple_graph.hpp"

using namespace lltlab;

namespace {

// Catalan numbers by the convolution recurrence.
std::vector<long> catalan(int up_to) {
    std::vector<long> c = {1};
    for (int n = 1; n <= up_to; ++n) {
        long s = 0;
        for (int i = 0; i < n; ++i) s += c[i] * c[n - 1 - i];
        c.push_back(s);
    }
    return c;
}

// Little Schroder numbers by lattice DP: ways from (x,y) to (m,m), staying
// weakly above the diagonal, d forbidden from the diagonal.
long schroder_count(int m) {
    std::map<std::pair<int, int>, long> memo;
    auto go = [&](auto&& self, int x, int y) -> long {
        if (x == m && y == m) return 1;
        auto it = memo.find({x, y});
        if (it != memo.end()) return it->second;
        long s = 0;
        if (y < m) s += self(self, x, y + 1);
        if (x < y) s += self(self, x + 1, y);
        if (x < y && x < m && y < m) s += self(self, x + 1, y + 1);
        return memo[{x, y}] = s;
    };
    return go(go, 0, 0);
}

// Independent parking check: car i drives to f(i) and rolls forward.
bool parks(const std::vector<int>& f) {
    int m = static_cast<int>(f.size());
    std::vector<bool> taken(m + 1, false);
    for (int i = 0; i < m; ++i) {
        int s = f[i];
        while (s <= m && taken[s]) ++s;
        if (s > m) return false;
        taken[s] = true;
    }
    return true;
}

const std::vector<std::pair<int, int>> kWorkedTreeEdges = {
    {1, 3}, {1, 5}, {1, 6}, {2, 5}, {4, 5}};

}  // namespace

TEST(PlaneTree, PreorderValidation) {
    EXPECT_EQ(PlaneTree().size(), 1);
    PlaneTree t({{1, 2}, {}, {}});
    EXPECT_EQ(t.size(), 3);
    EXPECT_EQ(t.depths(), (std::vector<int>{0, 1, 1}));
    EXPECT_THROW(PlaneTree({{2, 1}, {}, {}}), Error);  // children out of preorder
    EXPECT_THROW(PlaneTree({{1}, {1}}), Error);        // id used twice
}

TEST(PlaneTree, EnumerationCountsAreCatalan) {
    std::vector<long> cat = catalan(6);
    for (int m = 1; m <= 7; ++m) {
        long count = 0;
        std::set<std::string> keys;
        plane_trees(m, [&](const PlaneTree& t) {
            ++count;
            EXPECT_EQ(t.size(), m);
            EXPECT_TRUE(keys.insert(t.key()).second);
        });
        EXPECT_EQ(count, cat[m - 1]) << "m=" << m;
    }
}

TEST(LabeledTree, Validation) {
    EXPECT_NO_THROW(LabeledTree(3, {{1, 2}, {2, 3}}));
    EXPECT_THROW(LabeledTree(3, {{1, 2}}), Error);                  // disconnected
    EXPECT_THROW(LabeledTree(3, {{1, 2}, {2, 3}, {1, 3}}), Error);  // cycle
    EXPECT_THROW(LabeledTree(2, {{1, 3}}), Error);                  // label outside
    LabeledTree sub({2, 5, 9}, {{2, 9}, {5, 9}});
    EXPECT_EQ(sub.size(), 3);
    EXPECT_EQ(sub.edges, (std::vector<std::pair<int, int>>{{2, 9}, {5, 9}}));
}

TEST(CanonicalDrawing, RootsAtSmallestLabelChildrenAscending) {
    Drawing d = canonical_drawing(LabeledTree(6, kWorkedTreeEdges));
    EXPECT_EQ(d.label, (std::vector<int>{1, 3, 5, 2, 4, 6}));  // preorder
    EXPECT_EQ(d.tree.children[0], (std::vector<int>{1, 2, 5}));
    EXPECT_EQ(d.tree.children[2], (std::vector<int>{3, 4}));
}

TEST(PathDecomposition, WorkedExample) {
    Drawing d = canonical_drawing(LabeledTree(6, kWorkedTreeEdges));
    auto paths = path_decomposition(d.tree);
    std::vector<std::vector<int>> expect = {{0, 1}, {2, 3}, {4}, {5}};
    EXPECT_EQ(paths, expect);
}

TEST(PathDecomposition, PartitionsEveryTree) {
    plane_trees(5, [&](const PlaneTree& t) {
        auto paths = path_decomposition(t);
        std::set<int> covered;
        for (const auto& w : paths) {
            ASSERT_FALSE(w.empty());
            for (int v : w) EXPECT_TRUE(covered.insert(v).second);
            // Consecutive path vertices are parent and first unused child.
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                const auto& kids = t.children[w[i]];
                EXPECT_NE(std::find(kids.begin(), kids.end(), w[i + 1]), kids.end());
            }
        }
        EXPECT_EQ(static_cast<int>(covered.size()), t.size());
        EXPECT_EQ(paths.front().front(), 0);  // first path starts at the root
    });
}

TEST(Nu, WorkedExample) {
    Drawing d = canonical_drawing(LabeledTree(6, kWorkedTreeEdges));
    NuResult nr = nu(d.tree);
    EXPECT_EQ(nr.seq.to_string(), "[(1,1,1)/(1),(1,1),(1),(1,1)/(1)]");
    EXPECT_EQ(nr.cell_vertex, (std::vector<int>{0, 1, 2, 5, 3, 4}));
    std::vector<int> diagonal_labels;
    for (int v : nr.cell_vertex) diagonal_labels.push_back(d.label[v]);
    EXPECT_EQ(diagonal_labels, (std::vector<int>{1, 3, 5, 6, 2, 4}));
}

TEST(Nu, ColumnStripsWithTallestFirst) {
    plane_trees(6, [&](const PlaneTree& t) {
        NuResult nr = nu(t);
        EXPECT_EQ(nr.seq.total_cells(), t.size());
        int first_height = nr.seq.shapes()[0].outer.length();
        for (int i = 0; i < nr.seq.num_shapes(); ++i) {
            const SkewShape& s = nr.seq.shapes()[i];
            EXPECT_LE(s.outer.part(0), 1);  // single column
            if (i > 0) EXPECT_LT(s.outer.length(), first_height);
        }
    });
}

TEST(SchroderPath, Validation) {
    EXPECT_NO_THROW(SchroderPath("ne"));
    EXPECT_NO_THROW(SchroderPath("nd" "nee"));
    EXPECT_EQ(SchroderPath().size(), 0);
    EXPECT_EQ(SchroderPath("ndnee").size(), 3);
    EXPECT_THROW(SchroderPath("en"), Error);          // dips below
    EXPECT_THROW(SchroderPath("dne"), Error);         // d from the diagonal
    EXPECT_THROW(SchroderPath("nne"), Error);         // does not close
    EXPECT_THROW(SchroderPath("nxe"), ParseError);    // alphabet
    EXPECT_TRUE(SchroderPath("nnee").is_dyck());
    EXPECT_FALSE(SchroderPath("ndnee").is_dyck());
}

TEST(SchroderPath, HeightsReadExitLevels) {
    // h(i) is the y coordinate just before the step that leaves the line x = i-1.
    EXPECT_EQ(SchroderPath("ndnee").heights(), (std::vector<int>{1, 3, 3}));
    EXPECT_EQ(SchroderPath("nnenenennenneeee").heights(),
              (std::vector<int>{2, 3, 4, 6, 8, 8, 8, 8}));
}

TEST(SchroderPaths, CountsMatchLatticeDP) {
    for (int m = 0; m <= 7; ++m) {
        long count = 0;
        std::set<std::string> seen;
        schroder_paths(m, [&](const SchroderPath& p) {
            ++count;
            EXPECT_EQ(p.size(), m);
            EXPECT_TRUE(seen.insert(p.steps).second);
        });
        EXPECT_EQ(count, schroder_count(m)) << "m=" << m;
    }
    EXPECT_EQ(schroder_count(5), 197);  // pin the oracle itself
}

TEST(SchroderGraph, EdgesComeFromBoxesAndExits) {
    schroder_paths(4, [&](const SchroderPath& p) {
        LLTGraph g = schroder_to_graph(p);
        std::vector<int> h = p.heights();
        std::set<std::pair<int, int>> ed_expect, e1_expect;
        int i = 0;
        for (char ch : p.steps) {
            if (ch == 'n') continue;
            ++i;
            for (int j = i + 1; j <= h[i - 1]; ++j) ed_expect.insert({i, j});
            if (ch == 'd') e1_expect.insert({i, h[i - 1] + 1});  // diagonal exits only
        }
        EXPECT_EQ((std::set<std::pair<int, int>>(g.ed.begin(), g.ed.end())), ed_expect);
        EXPECT_EQ((std::set<std::pair<int, int>>(g.e1.begin(), g.e1.end())), e1_expect);
        EXPECT_TRUE(g.e2.empty());
    });
}

TEST(SchroderGraph, RoundTripsThroughGraphs) {
    for (int m = 1; m <= 5; ++m)
        schroder_paths(m, [&](const SchroderPath& p) {
            EXPECT_EQ(graph_to_schroder(schroder_to_graph(p)), p);
        });
}

TEST(SchroderGraph, RejectsNonPathGraphs) {
    EXPECT_THROW(graph_to_schroder(LLTGraph(2, {}, {{1, 2}}, {})), NotAPathGraph);
    // (1,3) boxed without (1,2) breaks row contiguity.
    EXPECT_THROW(graph_to_schroder(LLTGraph(3, {}, {}, {{1, 3}})), NotAPathGraph);
}

TEST(SchroderStrips, WorkedExampleAndRoundTrip) {
    ShapeSequence seq = schroder_to_strips(SchroderPath("ndnnedneee"));
    EXPECT_EQ(seq.to_string(), "[(1,1,1)/(1),(1,1),(1),(1,1)/(1)]");
    for (int m = 1; m <= 5; ++m)
        schroder_paths(m, [&](const SchroderPath& p) {
            ShapeSequence s = schroder_to_strips(p);  // round trip asserted inside
            for (const SkewShape& sh : s.shapes()) {
                for (int part : sh.outer.parts()) EXPECT_EQ(part, 1);  // single columns
                for (int part : sh.inner.parts()) EXPECT_EQ(part, 1);
            }
            EXPECT_EQ(shapes_to_graph(s), schroder_to_graph(p));
        });
}

TEST(TreeToSchroder, LandsInTheImage) {
    Drawing d = canonical_drawing(LabeledTree(6, kWorkedTreeEdges));
    EXPECT_EQ(tree_to_schroder(d.tree).to_string(), "ndnnedneee");
    plane_trees(5, [&](const PlaneTree& t) {
        EXPECT_TRUE(satisfies_tree_image_conditions(tree_to_schroder(t)));
    });
}

TEST(TreeToSchroder, ImageConditions) {
    EXPECT_TRUE(satisfies_tree_image_conditions(SchroderPath("ne")));
    EXPECT_TRUE(satisfies_tree_image_conditions(SchroderPath("ndnee")));
    EXPECT_FALSE(satisfies_tree_image_conditions(SchroderPath("nnee")));      // starts nn
    EXPECT_FALSE(satisfies_tree_image_conditions(SchroderPath("ndnenee")));   // en factor
    EXPECT_FALSE(satisfies_tree_image_conditions(SchroderPath("ndendnee")));  // hits diagonal
}

TEST(DyckReduction, WorkedExampleAndRoundTrips) {
    EXPECT_EQ(schroder_to_dyck(SchroderPath("ndnnedneee")).to_string(), "nnneenneee");
    EXPECT_THROW(schroder_to_dyck(SchroderPath("nnee")), PreconditionViolated);
    EXPECT_THROW(dyck_to_schroder(SchroderPath("ndnee")), PreconditionViolated);
    for (int m = 1; m <= 6; ++m)
        schroder_paths(m, [&](const SchroderPath& p) {
            if (!satisfies_tree_image_conditions(p)) return;
            SchroderPath dy = schroder_to_dyck(p);
            EXPECT_TRUE(dy.is_dyck());
            EXPECT_EQ(dy.size(), m - 1);
            EXPECT_EQ(dyck_to_schroder(dy), p);
        });
}

TEST(Parking, ValidationAndPrinting) {
    EXPECT_NO_THROW(ParkingFunction({3, 1, 3, 1, 1}));
    EXPECT_EQ(ParkingFunction({3, 1, 3, 1, 1}).to_string(), "(3,1,3,1,1)");
    EXPECT_THROW(ParkingFunction({2, 3, 3}), Error);
    EXPECT_THROW(ParkingFunction({0, 1}), Error);
}

TEST(Parking, DyckCorrespondence) {
    EXPECT_EQ(dyck_to_parking(SchroderPath("nnee")), ParkingFunction({1, 1}));
    EXPECT_EQ(dyck_to_parking(SchroderPath("nene")), ParkingFunction({1, 2}));
    EXPECT_THROW(dyck_to_parking(SchroderPath("ndnee")), PreconditionViolated);
    for (int m = 1; m <= 5; ++m)
        schroder_paths(m, [&](const SchroderPath& p) {
            if (!p.is_dyck()) return;
            EXPECT_EQ(parking_to_dyck(dyck_to_parking(p)), p);
        });
}

TEST(Parking, EnumerationMatchesSimulation) {
    for (int m = 0; m <= 4; ++m) {
        std::set<std::vector<int>> got;
        parking_functions(m, [&](const ParkingFunction& f) {
            EXPECT_TRUE(got.insert(f.f).second);
        });
        std::set<std::vector<int>> expect;
        std::vector<int> f(m, 1);
        while (true) {
            if (parks(f)) expect.insert(f);
            int i = 0;
            while (i < m && f[i] == m) f[i++] = 1;
            if (i == m) break;
            ++f[i];
        }
        if (m == 0) expect.insert({});
        EXPECT_EQ(got, expect) << "m=" << m;
    }
}

TEST(Parking, TreeChainWorkedExample) {
    LabeledTree t(6, kWorkedTreeEdges);
    EXPECT_EQ(tree_to_parking(t), ParkingFunction({3, 1, 3, 1, 1}));
    EXPECT_THROW(tree_to_parking(LabeledTree({2, 3}, {{2, 3}})), PreconditionViolated);
}

TEST(SpanningTrees, MatchMatrixTreeCounts) {
    for (const SimpleGraph& g :
         {complete_graph(4), complete_graph(5),
          underlying_simple_graph(melting_lollipop_graph(MeltingLollipop(2, 3, 1))),
          SimpleGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})}) {
        long count = 0;
        std::set<std::vector<std::pair<int, int>>> seen;
        spanning_trees(g, [&](const LabeledTree& t) {
            ++count;
            EXPECT_EQ(t.size(), g.n);
            for (auto [u, v] : t.edges) EXPECT_TRUE(g.has_edge(u, v));
            EXPECT_TRUE(seen.insert(t.edges).second);
        });
        EXPECT_EQ(mpz_class(count), spanning_tree_count(g));
    }
}

TEST(SpanningTrees, DisconnectedYieldsNothing) {
    int count = 0;
    spanning_trees(SimpleGraph(4, {{1, 2}, {3, 4}}), [&](const LabeledTree&) { ++count; });
    EXPECT_EQ(count, 0);
}

TEST(Lemma45, CaseBDirectInstance) {
    VerificationReport r = check_lemma_4_5(Lemma45Case::B, SchroderPath("nndee"), 1, 3);
    EXPECT_TRUE(r.holds);
    // The relation itself: LLT(nndee) = q * LLT(ndnee).
    SymPoly lhs = llt_of_graph(schroder_to_graph(SchroderPath("nndee")), 3);
    SymPoly rhs = llt_of_graph(schroder_to_graph(SchroderPath("ndnee")), 3);
    EXPECT_EQ(lhs, rhs * QPoly::q());
}

TEST(Lemma45, CaseADirectInstance) {
    VerificationReport r = check_lemma_4_5(Lemma45Case::A, SchroderPath("nnenee"), 3, 3);
    EXPECT_TRUE(r.holds);
}

TEST(Lemma45, RejectsInapplicablePositions) {
    EXPECT_THROW(check_lemma_4_5(Lemma45Case::A, SchroderPath("ne"), 0, 2), PatternMismatch);
    EXPECT_THROW(check_lemma_4_5(Lemma45Case::B, SchroderPath("nnee"), 1, 2), PatternMismatch);
}

TEST(Lemma45, SweepSmallSizes) {
    for (int m = 1; m <= 4; ++m)
        schroder_paths(m, [&](const SchroderPath& p) {
            for (int i = 0; i + 1 < static_cast<int>(p.steps.size()); ++i)
                for (Lemma45Case c : {Lemma45Case::A, Lemma45Case::B}) {
                    try {
                        EXPECT_TRUE(check_lemma_4_5(c, p, i, m).holds)
                            << to_string(c) << " " << p.to_string() << " @" << i;
                    } catch (const PatternMismatch&) {
                    }
                }
        });
}
