#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lltlab/lltgraph.hpp"
#include "lltlab/partition.hpp"
#include "lltlab/sympoly.hpp"

namespace lltlab {

// Skew diagram outer/inner in French convention: row 1 is the bottom row,
// row y holds cells with x in (inner_y, outer_y].  The cell in column x,
// row y has content x - y.
struct SkewShape {
    Partition outer, inner;
    SkewShape() = default;
    SkewShape(Partition outer_, Partition inner_);  // validates inner ⊆ outer
    int cell_count() const;
    bool operator==(const SkewShape& o) const = default;
    std::string to_string() const;  // "(3,2)/(1)"; "(3,2)" when inner empty
};

struct ShapeCell {
    int shape;  // 1-based index into the sequence
    int x, y;   // column, row (1-based)
    int content;           // x - y
    long shifted_content;  // m * content + shape
};

// Sequence of skew shapes; precomputes the cell list in fill order
// (shape, row, column), the shifted-content ranking and the inversion
// window pairs.
class ShapeSequence {
public:
    explicit ShapeSequence(std::vector<SkewShape> shapes);

    int num_shapes() const { return static_cast<int>(shapes_.size()); }
    int total_cells() const { return static_cast<int>(cells_.size()); }
    const std::vector<SkewShape>& shapes() const { return shapes_; }
    // Cells in fill order.
    const std::vector<ShapeCell>& cells() const { return cells_; }
    // cell_by_rank()[r] = fill-order index of the cell with the r-th smallest
    // shifted content (shifted contents are pairwise distinct).
    const std::vector<int>& cell_by_rank() const { return rank_to_cell_; }
    // Pairs (a, b) of fill-order indices with 0 < ctilde(b) - ctilde(a) < m;
    // a filling S has an inversion on (a, b) iff S(a) > S(b).
    const std::vector<std::pair<int, int>>& window_pairs() const { return window_pairs_; }

    bool operator==(const ShapeSequence& o) const { return shapes_ == o.shapes_; }
    std::string to_string() const;  // "[(3,2)/(1),(1,1)]"

private:
    std::vector<SkewShape> shapes_;
    std::vector<ShapeCell> cells_;
    std::vector<int> rank_to_cell_;
    std::vector<std::pair<int, int>> window_pairs_;
};

// Entries indexed by fill order (ShapeSequence::cells()).
using Tableau = std::vector<int>;

// Streams all semistandard fillings with entries in [num_vars] in
// lexicographic order (cells in fill order, entries ascending).  Rows weakly
// increase rightward, columns strictly increase upward, within each shape.
void enumerate_ssyt(const ShapeSequence& seq, int num_vars,
                    const std::function<void(const Tableau&)>& fn);

int inv_count(const ShapeSequence& seq, const Tableau& t);

// Sum over semistandard fillings of q^inv x^weight, m_mu coefficient read at
// weight exactly sorted.
SymPoly llt_of_shapes(const ShapeSequence& seq, int num_vars);

// Vertices are cells in shifted-content order; type-I edges go from each cell
// to the cell directly below it, type-II to the cell directly to its left,
// and double edges join every window pair.
LLTGraph shapes_to_graph(const ShapeSequence& seq);

// One unicellular shape per entry of `contents` (shape i holding a single
// cell of the given content, uniformly shifted so the maximum content is 0).
ShapeSequence unicellular_sequence(const std::vector<int>& contents);

SkewShape parse_skew_shape(const std::string& text);
ShapeSequence parse_shape_sequence(const std::string& text);

}  // namespace lltlab
