#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lltlab/lltgraph.hpp"
#include "lltlab/report.hpp"
#include "lltlab/simple_graph.hpp"

namespace lltlab {

struct SetPartition {
    std::vector<std::vector<int>> blocks;  // each sorted; ordered by minimum

    SetPartition(std::vector<std::vector<int>> blocks_, int m);  // must cover [m]

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    std::string to_string() const;  // "{1,3|2}"
};

// All set partitions of [m] (Bell(m) many), by restricted growth strings in
// lexicographic order.
void set_partitions(int m, const std::function<void(const SetPartition&)>& fn);

// kappa(g) = [ sum over set partitions B of (-1)^{|B|-1} (|B|-1)! *
// prod_{B in B} LLT(g restricted to B) ] / (q-1)^{m-1}, where |B| is the
// number of blocks and m = |V(g)|.  The division must be exact; NotDivisible
// signals a broken identity.
SymPoly cumulant_of_graph(const LLTGraph& g, int num_vars);

// Same value, obtained by solving
//   LLT(S) = sum over partitions B of S of (q-1)^{|S|-|B|} prod kappa(B)
// for kappa(S) recursively over vertex subsets.
SymPoly cumulant_of_graph_recursive(const LLTGraph& g, int num_vars);

// Checks LLT(g) = sum over partitions of (q-1)^{m-|B|} prod kappa(blocks),
// with a per-partition ledger in the notes.  On two vertices the notes also
// report the weight-inside-the-product variant so the discrepancy between the
// two readings stays machine-visible.
VerificationReport verify_moebius_consistency(const LLTGraph& g, int num_vars);

// Asserts kappa(g) = 0; requires underlying_simple_graph(g) disconnected
// (PreconditionViolated otherwise).
VerificationReport verify_disconnected_vanishing(const LLTGraph& g, int num_vars);

// All acyclic edge subsets (the empty forest included), by include/exclude
// recursion over lex-sorted edges.
void spanning_forests(const SimpleGraph& g,
                      const std::function<void(const std::vector<std::pair<int, int>>&)>& fn);

// Checks, with N = l+m and G the lollipop graph,
//   shift_q LLT(G) = sum over spanning forests F of q^{N-#F} shift_q LLT(nu(F))
// where #F counts connected components (isolated vertices included) and
// nu(F) is the product over components rooted at their smallest labels.
VerificationReport verify_forest_identity(const MeltingLollipop& p, int num_vars);

}  // namespace lltlab
