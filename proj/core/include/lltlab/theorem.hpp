#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "lltlab/lltgraph.hpp"
#include "lltlab/report.hpp"
#include "lltlab/treebij.hpp"

namespace lltlab {

// Process-wide cache of LLT(nu(t)) keyed by plane-tree shape and variable
// count; nu only depends on the plane structure, so every relabeling of a
// spanning tree shares one entry.
class NuLltCache {
public:
    static NuLltCache& global();
    SymPoly get(const PlaneTree& t, int num_vars);
    // Variant with every coefficient shifted q -> q+1.
    SymPoly get_shifted(const PlaneTree& t, int num_vars);

private:
    std::mutex mu_;
    std::map<std::string, SymPoly> map_, shifted_;
};

// cumulant_of_graph(lollipop graph) versus the sum of llt_of_shapes(nu(T))
// over all spanning trees of the underlying simple graph.  The left side runs
// through graph colorings, the right through tableau fillings, so a pass also
// certifies the cross-representation agreement.
VerificationReport verify_theorem_1_2(const MeltingLollipop& p, int num_vars);

// kappa(K_m) = sum over the m^{m-2} Cayley trees of LLT(nu) = sum over the
// parking functions on m-1 cars of LLT(strips of the parking function's
// path); tree count cross-checked against the matrix-tree determinant.
VerificationReport verify_corollary_1_3(int m, int num_vars);

// Expands cumulant_of_graph(g) in the Schur basis and checks every
// coefficient lies in Z>=0[q].
VerificationReport verify_schur_positivity(const LLTGraph& g, int num_vars);

// Runs verify_theorem_1_2, verify_forest_identity, verify_moebius_consistency
// and verify_schur_positivity for every (l,m,k) with l+m <= max_total,
// 0 <= k <= m-1, with n = l+m variables; reports in parameter order.
// jobs = 0 picks the hardware thread count.
std::vector<VerificationReport> sweep(int max_total, int jobs = 0);

}  // namespace lltlab
