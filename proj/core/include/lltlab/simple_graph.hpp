#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lltlab {

// Undirected simple graph on vertices 1..n; edges stored sorted, u < v.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    SimpleGraph() = default;
    SimpleGraph(int n_, std::vector<std::pair<int, int>> edges_);

    bool has_edge(int u, int v) const;
};

bool is_connected(const SimpleGraph& g);
// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const SimpleGraph& g);

// Number of spanning trees by the matrix-tree theorem (first row/column of
// the Laplacian removed), evaluated with fraction-free Bareiss elimination.
mpz_class spanning_tree_count(const SimpleGraph& g);

// Exact determinant of an integer matrix (Bareiss).
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m);

}  // namespace lltlab
