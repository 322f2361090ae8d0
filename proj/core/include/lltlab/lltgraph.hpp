#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lltlab/report.hpp"
#include "lltlab/simple_graph.hpp"
#include "lltlab/sympoly.hpp"

namespace lltlab {

// Directed graph with three edge kinds on vertices 1..n.  A coloring
// f : V -> [num_vars] is weighted by the product over edges of
//   e1 (u,v): [f(u) > f(v)]
//   e2 (u,v): [f(u) >= f(v)]
//   ed (u,v): q*[f(u) > f(v)] + [f(u) <= f(v)]
// Edge lists are kept sorted; the same ordered pair appears at most once per
// kind.
struct LLTGraph {
    int n = 0;
    std::vector<std::pair<int, int>> e1, e2, ed;

    LLTGraph() = default;
    LLTGraph(int n_, std::vector<std::pair<int, int>> e1_, std::vector<std::pair<int, int>> e2_,
             std::vector<std::pair<int, int>> ed_);

    bool operator==(const LLTGraph& o) const = default;
    // Stable text key (used for memo tables).
    std::string key() const;
};

// Coloring generating function restricted to colors [num_vars], read off in
// the monomial basis: the m_mu coefficient collects exactly the colorings
// whose weight vector equals sorted mu.
SymPoly llt_of_graph(const LLTGraph& g, int num_vars);

struct MeltingLollipop {
    int l = 0, m = 1, k = 0;
    MeltingLollipop(int l_, int m_, int k_);
    std::string to_string() const;
};

// Double-edge graph on [l+m]: a path 1-2-...-(l+1) glued to a complete graph
// on {l+1..l+m} with the k edges from l+1 to the top k clique vertices erased.
LLTGraph melting_lollipop_graph(const MeltingLollipop& p);

// A unicellular shape sequence realizing the lollipop's graph; every call
// verifies itself by a shapes_to_graph round trip.  Declared in shapes.hpp's
// types but implemented next to the lollipop; forward declaration here.
class ShapeSequence;
ShapeSequence melting_lollipop_shapes(const MeltingLollipop& p);

// Restriction to a nonempty sorted vertex subset, relabeled 1..|s| preserving
// order.  Throws EmptySubset.
LLTGraph induced_subgraph(const LLTGraph& g, const std::vector<int>& s);

SimpleGraph underlying_simple_graph(const LLTGraph& g);

enum class Lemma32Case { c1a, c1b, c1c, c2_type1, c2_type2, c3 };
std::string to_string(Lemma32Case c);

// Verifies one local relation of the three-graph lemma, both standalone and
// embedded into `ambient_count` seeded random ambient graphs on num_vars
// vertices whose edges outside the pattern agree on all sides.
VerificationReport check_lemma_3_2(Lemma32Case c, int num_vars, std::uint64_t seed,
                                   int ambient_count);

}  // namespace lltlab
