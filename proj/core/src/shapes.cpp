#include "lltlab/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "lltlab/errors.hpp"

namespace lltlab {

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (inner.length() > outer.length())
        throw Error("SkewShape: inner partition has more rows than outer");
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i))
            throw Error("SkewShape: inner partition not contained in outer");
}

int SkewShape::cell_count() const { return outer.size() - inner.size(); }

std::string SkewShape::to_string() const {
    std::string s = outer.to_string();
    if (inner.length() > 0) s += "/" + inner.to_string();
    return s;
}

ShapeSequence::ShapeSequence(std::vector<SkewShape> shapes) : shapes_(std::move(shapes)) {
    const int m = num_shapes();
    for (int i = 0; i < m; ++i) {
        const SkewShape& sh = shapes_[i];
        for (int y = 1; y <= sh.outer.length(); ++y) {
            for (int x = sh.inner.part(y - 1) + 1; x <= sh.outer.part(y - 1); ++x) {
                ShapeCell c;
                c.shape = i + 1;
                c.x = x;
                c.y = y;
                c.content = x - y;
                c.shifted_content = static_cast<long>(m) * c.content + c.shape;
                cells_.push_back(c);
            }
        }
    }
    rank_to_cell_.resize(cells_.size());
    for (size_t i = 0; i < cells_.size(); ++i) rank_to_cell_[i] = static_cast<int>(i);
    std::sort(rank_to_cell_.begin(), rank_to_cell_.end(), [&](int a, int b) {
        return cells_[a].shifted_content < cells_[b].shifted_content;
    });
    for (size_t r = 1; r < rank_to_cell_.size(); ++r)
        if (cells_[rank_to_cell_[r]].shifted_content ==
            cells_[rank_to_cell_[r - 1]].shifted_content)
            throw InternalCheckFailed("ShapeSequence: shifted contents collide");
    for (size_t a = 0; a < cells_.size(); ++a) {
        for (size_t b = 0; b < cells_.size(); ++b) {
            long d = cells_[b].shifted_content - cells_[a].shifted_content;
            if (0 < d && d < m) window_pairs_.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
}

std::string ShapeSequence::to_string() const {
    std::string s = "[";
    for (int i = 0; i < num_shapes(); ++i) {
        if (i) s += ",";
        s += shapes_[i].to_string();
    }
    return s + "]";
}

namespace {

// For each cell (fill order) the lower bound sources: index of the cell to
// the left in the same row/shape (weak) and directly below (strict), or -1.
struct FillPlan {
    std::vector<int> left, below;
    // Window partners already filled when this cell is reached; .second tells
    // whether the current cell is the later one in shifted-content order
    // (true: inversion iff earlier > current is wrong; see use).
    std::vector<std::vector<std::pair<int, bool>>> partners;
};

FillPlan make_plan(const ShapeSequence& seq) {
    const auto& cells = seq.cells();
    FillPlan plan;
    plan.left.assign(cells.size(), -1);
    plan.below.assign(cells.size(), -1);
    plan.partners.resize(cells.size());
    std::map<std::tuple<int, int, int>, int> pos;
    for (size_t i = 0; i < cells.size(); ++i)
        pos[{cells[i].shape, cells[i].x, cells[i].y}] = static_cast<int>(i);
    for (size_t i = 0; i < cells.size(); ++i) {
        auto itl = pos.find({cells[i].shape, cells[i].x - 1, cells[i].y});
        if (itl != pos.end()) plan.left[i] = itl->second;
        auto itb = pos.find({cells[i].shape, cells[i].x, cells[i].y - 1});
        if (itb != pos.end()) plan.below[i] = itb->second;
    }
    for (auto [a, b] : seq.window_pairs()) {
        // Attach the pair to whichever cell is filled later.
        if (a > b)
            plan.partners[a].emplace_back(b, false);  // current = earlier ctilde
        else
            plan.partners[b].emplace_back(a, true);   // current = later ctilde
    }
    return plan;
}

}  // namespace

void enumerate_ssyt(const ShapeSequence& seq, int num_vars,
                    const std::function<void(const Tableau&)>& fn) {
    const auto& cells = seq.cells();
    FillPlan plan = make_plan(seq);
    Tableau t(cells.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == cells.size()) {
            fn(t);
            return;
        }
        int lo = 1;
        if (plan.left[i] >= 0) lo = std::max(lo, t[plan.left[i]]);
        if (plan.below[i] >= 0) lo = std::max(lo, t[plan.below[i]] + 1);
        for (int v = lo; v <= num_vars; ++v) {
            t[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

int inv_count(const ShapeSequence& seq, const Tableau& t) {
    if (t.size() != seq.cells().size()) throw Error("inv_count: entry count mismatch");
    int inv = 0;
    for (auto [a, b] : seq.window_pairs())
        if (t[a] > t[b]) ++inv;
    return inv;
}

SymPoly llt_of_shapes(const ShapeSequence& seq, int num_vars) {
    const auto& cells = seq.cells();
    const size_t ncells = cells.size();
    FillPlan plan = make_plan(seq);

    std::map<std::vector<int>, std::vector<long long>> acc;
    Tableau t(ncells, 0);
    std::vector<int> weight(num_vars + 1, 0);
    std::vector<int> invstack(ncells + 1, 0);

    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == ncells) {
            std::vector<int> w(weight.begin() + 1, weight.end());
            for (size_t j = 1; j < w.size(); ++j)
                if (w[j] > w[j - 1]) return;
            auto& qc = acc[w];
            size_t e = static_cast<size_t>(invstack[ncells]);
            if (qc.size() <= e) qc.resize(e + 1, 0);
            ++qc[e];
            return;
        }
        int lo = 1;
        if (plan.left[i] >= 0) lo = std::max(lo, t[plan.left[i]]);
        if (plan.below[i] >= 0) lo = std::max(lo, t[plan.below[i]] + 1);
        int remaining = static_cast<int>(ncells - i) - 1;
        for (int v = lo; v <= num_vars; ++v) {
            if (v > 1 && weight[v] + 1 > weight[v - 1] + remaining) continue;
            t[i] = v;
            ++weight[v];
            int inv = invstack[i];
            for (auto [j, current_is_later] : plan.partners[i]) {
                bool inversion = current_is_later ? t[j] > v : v > t[j];
                if (inversion) ++inv;
            }
            invstack[i + 1] = inv;
            rec(i + 1);
            --weight[v];
        }
    };
    rec(0);

    SymPoly out(num_vars);
    for (auto& [w, qc] : acc) {
        std::vector<mpz_class> coeffs(qc.size());
        for (size_t i = 0; i < qc.size(); ++i) coeffs[i] = static_cast<long>(qc[i]);
        out.add_term(Partition::from_weight(w), QPoly::from_coeffs(std::move(coeffs)));
    }
    return out;
}

LLTGraph shapes_to_graph(const ShapeSequence& seq) {
    const auto& cells = seq.cells();
    const int m = seq.num_shapes();
    const auto& order = seq.cell_by_rank();
    std::vector<int> rank_of(cells.size());
    for (size_t r = 0; r < order.size(); ++r) rank_of[order[r]] = static_cast<int>(r) + 1;

    std::map<std::tuple<int, int, int>, int> pos;
    for (size_t i = 0; i < cells.size(); ++i)
        pos[{cells[i].shape, cells[i].x, cells[i].y}] = static_cast<int>(i);

    std::vector<std::pair<int, int>> e1, e2, ed;
    for (size_t i = 0; i < cells.size(); ++i) {
        auto itb = pos.find({cells[i].shape, cells[i].x, cells[i].y - 1});
        if (itb != pos.end()) e1.emplace_back(rank_of[i], rank_of[itb->second]);
        auto itl = pos.find({cells[i].shape, cells[i].x - 1, cells[i].y});
        if (itl != pos.end()) e2.emplace_back(rank_of[i], rank_of[itl->second]);
    }
    for (auto [a, b] : seq.window_pairs()) ed.emplace_back(rank_of[a], rank_of[b]);
    return LLTGraph(static_cast<int>(cells.size()), std::move(e1), std::move(e2), std::move(ed));
}

ShapeSequence unicellular_sequence(const std::vector<int>& contents) {
    if (contents.empty()) throw Error("unicellular_sequence: empty content list");
    int mx = *std::max_element(contents.begin(), contents.end());
    std::vector<SkewShape> shapes;
    shapes.reserve(contents.size());
    for (int c : contents) {
        int cc = c - mx;  // <= 0, so the cell sits in column 1, row 1 - cc
        int s = 1 - cc;
        std::vector<int> outer(s, 1), inner(s - 1, 1);
        shapes.emplace_back(Partition(outer), Partition(inner));
    }
    return ShapeSequence(std::move(shapes));
}

namespace {

Partition parse_partition_at(const std::string& s, size_t& i) {
    if (i >= s.size() || s[i] != '(') throw ParseError("shape: expected '('");
    ++i;
    std::vector<int> parts;
    while (i < s.size() && s[i] != ')') {
        if (s[i] == ',') {
            ++i;
            continue;
        }
        if (!isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("shape: expected digit");
        int v = 0;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        parts.push_back(v);
    }
    if (i >= s.size()) throw ParseError("shape: unterminated '('");
    ++i;  // ')'
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(parts);
}

SkewShape parse_skew_at(const std::string& s, size_t& i) {
    Partition outer = parse_partition_at(s, i);
    Partition inner;
    if (i < s.size() && s[i] == '/') {
        ++i;
        inner = parse_partition_at(s, i);
    }
    return SkewShape(std::move(outer), std::move(inner));
}

std::string strip_spaces(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    return s;
}

}  // namespace

SkewShape parse_skew_shape(const std::string& text) {
    std::string s = strip_spaces(text);
    size_t i = 0;
    SkewShape sh = parse_skew_at(s, i);
    if (i != s.size()) throw ParseError("shape: trailing characters");
    return sh;
}

ShapeSequence parse_shape_sequence(const std::string& text) {
    std::string s = strip_spaces(text);
    size_t i = 0;
    std::vector<SkewShape> shapes;
    if (!s.empty() && s[0] == '[') {
        i = 1;
        while (i < s.size() && s[i] != ']') {
            if (s[i] == ',') {
                ++i;
                continue;
            }
            shapes.push_back(parse_skew_at(s, i));
        }
        if (i >= s.size()) throw ParseError("shape sequence: unterminated '['");
        ++i;
        if (i != s.size()) throw ParseError("shape sequence: trailing characters");
    } else {
        while (i < s.size()) {
            if (s[i] == ',') {
                ++i;
                continue;
            }
            shapes.push_back(parse_skew_at(s, i));
        }
    }
    return ShapeSequence(std::move(shapes));
}

}  // namespace lltlab
