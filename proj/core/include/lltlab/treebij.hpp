#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lltlab/lltgraph.hpp"
#include "lltlab/report.hpp"
#include "lltlab/shapes.hpp"
#include "lltlab/simple_graph.hpp"

namespace lltlab {

// Rooted tree with ordered children lists.  Vertices are 0..size-1 in
// preorder (0 is the root, a subtree occupies a contiguous id range), so
// "left of" coincides with "smaller id" at equal depth.
struct PlaneTree {
    std::vector<std::vector<int>> children;

    PlaneTree() : children(1) {}
    explicit PlaneTree(std::vector<std::vector<int>> children_);  // validates preorder ids

    int size() const { return static_cast<int>(children.size()); }
    std::vector<int> depths() const;  // edge distance from the root
    // Balanced-parentheses serialization, the canonical cache key.
    std::string key() const;
    bool operator==(const PlaneTree& o) const { return children == o.children; }
};

// All plane trees with m vertices, Catalan(m-1) many, in a fixed order.
void plane_trees(int m, const std::function<void(const PlaneTree&)>& fn);

// Tree on an arbitrary sorted label set (canonically [m]).
struct LabeledTree {
    std::vector<int> labels;                 // sorted, distinct
    std::vector<std::pair<int, int>> edges;  // u < v, sorted; exactly a tree

    LabeledTree(std::vector<int> labels_, std::vector<std::pair<int, int>> edges_);
    LabeledTree(int m, std::vector<std::pair<int, int>> edges_);  // labels 1..m

    int size() const { return static_cast<int>(labels.size()); }
    std::string to_string() const;
};

// A plane tree together with the original label of each plane vertex.
struct Drawing {
    PlaneTree tree;
    std::vector<int> label;
};

// Root at the smallest label, children ordered by increasing label.
Drawing canonical_drawing(const LabeledTree& t);

// Maximal left-most paths: the first runs from the root to the left-most
// leaf; each next path starts at the uncovered vertex whose covered parent
// lies on the latest-created path (ties: greater depth, then left-most) and
// descends left-most to a leaf.  The paths partition the vertices.
std::vector<std::vector<int>> path_decomposition(const PlaneTree& t);

struct NuResult {
    ShapeSequence seq;  // one column strip per path
    // cell_vertex[r] = the plane vertex whose cell has rank r+1 in
    // shifted-content order (cell_vertex[0] is always the root).
    std::vector<int> cell_vertex;
};

// Column strip nu^i = (1^{s_i})/(1^{t_i}) per path, where s_i = H - depth of
// the path's head, t_i = s_i - |W_i|, H = 1 + max leaf depth.  The vertex at
// depth d sits in column i at content d - H + 1.
NuResult nu(const PlaneTree& t);

// Lattice path from (0,0) to (m,m) over steps n=(0,1), e=(1,0), d=(1,1),
// weakly above the main diagonal, with no d step starting on the diagonal.
struct SchroderPath {
    std::string steps;

    SchroderPath() = default;  // the empty path, m = 0
    explicit SchroderPath(std::string steps_);

    int size() const;  // m
    bool is_dyck() const { return steps.find('d') == std::string::npos; }
    // h(i) = height at which the path leaves the line x = i-1, i = 1..m.
    std::vector<int> heights() const;
    bool operator==(const SchroderPath& o) const { return steps == o.steps; }
    bool operator!=(const SchroderPath& o) const { return !(*this == o); }
    std::string to_string() const { return steps; }
};

// All Schroder paths of size m (little Schroder many), lexicographic in the
// step alphabet d < e < n.
void schroder_paths(int m, const std::function<void(const SchroderPath&)>& fn);

// Vertices [m]; double edge (i,j) for every box strictly under the path
// (i < j <= h(i)), type-I edge (i, h(i)+1) for every diagonal exit; no
// type-II edges.  Boxes are addressed by their top-right corner.
LLTGraph schroder_to_graph(const SchroderPath& p);

// Inverse of schroder_to_graph; NotAPathGraph names the first offending box
// when g is not realizable.
SchroderPath graph_to_schroder(const LLTGraph& g);

// Canonical vertical-strip sequence with shapes_to_graph(result) equal to
// schroder_to_graph(p): contents grow by one across type-I edges and
// non-edges of consecutive vertices, stay level across double edges, and the
// strips are ordered by a topological sort of the window constraints.  The
// round trip is asserted on every call.
ShapeSequence schroder_to_strips(const SchroderPath& p);

// graph_to_schroder(shapes_to_graph(nu(t).seq)).
SchroderPath tree_to_schroder(const PlaneTree& t);

// The image of tree_to_schroder: touches the diagonal only at the endpoints,
// starts "nd" (m = 1: the path "ne"), and has no "en" factor.
bool satisfies_tree_image_conditions(const SchroderPath& p);

// Substitutes every d by "en", then drops the forced leading "ne"; the result
// is a Dyck path of size m-1.  Throws PreconditionViolated unless p satisfies
// the tree-image conditions.
SchroderPath schroder_to_dyck(const SchroderPath& p);

// Inverse: prepend "ne", then greedily rewrite "en" factors to d from the
// left.  Throws PreconditionViolated unless the input is a Dyck path.
SchroderPath dyck_to_schroder(const SchroderPath& d);

struct ParkingFunction {
    std::vector<int> f;  // f[i-1] = preferred column of car i

    ParkingFunction() = default;
    explicit ParkingFunction(std::vector<int> f_);  // validates |f^-1([i])| >= i

    int cars() const { return static_cast<int>(f.size()); }
    bool operator==(const ParkingFunction& o) const { return f == o.f; }
    bool operator<(const ParkingFunction& o) const { return f < o.f; }
    std::string to_string() const;
};

// Car i prefers the column of the i-th north step (labels increase up
// columns); the result is weakly increasing.
ParkingFunction dyck_to_parking(const SchroderPath& d);

// North-step counts per column; left inverse of dyck_to_parking.
SchroderPath parking_to_dyck(const ParkingFunction& f);

// Labeled chain tree -> parking function on size-1 cars: the Dyck path of the
// tree's Schroder path, with its boxes labeled by the diagonal cell labels
// (skipping the root's); car label-1 parks in the box's column.
ParkingFunction tree_to_parking(const LabeledTree& t);

// All parking functions on m cars, (m+1)^{m-1} many, lexicographic.
void parking_functions(int m, const std::function<void(const ParkingFunction&)>& fn);

// All spanning trees, by include/exclude recursion over lex-sorted edges;
// count matches spanning_tree_count.  Disconnected input streams nothing.
void spanning_trees(const SimpleGraph& g, const std::function<void(const LabeledTree&)>& fn);

SimpleGraph complete_graph(int m);

enum class Lemma45Case { A, B };
std::string to_string(Lemma45Case c);

// Local path relations, checked via llt_of_graph on both sides.
//   A at position pos ("ne", start strictly above the diagonal):
//     LLT(S ne T) = (q-1) LLT(S d T) + LLT(S en T)
//   B at position pos ("nd" from (i,j), j > i, whose columns j+1 and j+2 exit
//   by consecutive east steps):  LLT(S nd T) = q LLT(S dn T)
// Throws PatternMismatch when the position does not match the case.
VerificationReport check_lemma_4_5(Lemma45Case c, const SchroderPath& p, int position,
                                   int num_vars);

}  // namespace lltlab
