#include "lltlab/treebij.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "lltlab/errors.hpp"

namespace lltlab {

PlaneTree::PlaneTree(std::vector<std::vector<int>> children_) : children(std::move(children_)) {
    const int n = size();
    if (n == 0) throw Error("PlaneTree: empty vertex set");
    int counter = 0;
    std::function<void(int)> visit = [&](int v) {
        if (v != counter) throw Error("PlaneTree: vertices are not numbered in preorder");
        ++counter;
        for (int c : children[v]) {
            if (c < 0 || c >= n) throw Error("PlaneTree: child id out of range");
            visit(c);
        }
    };
    visit(0);
    if (counter != n) throw Error("PlaneTree: unreachable vertices");
}

std::vector<int> PlaneTree::depths() const {
    std::vector<int> d(size(), 0);
    std::function<void(int)> visit = [&](int v) {
        for (int c : children[v]) {
            d[c] = d[v] + 1;
            visit(c);
        }
    };
    visit(0);
    return d;
}

std::string PlaneTree::key() const {
    std::string s;
    std::function<void(int)> visit = [&](int v) {
        s += '(';
        for (int c : children[v]) visit(c);
        s += ')';
    };
    visit(0);
    return s;
}

namespace {

struct PtNode {
    std::vector<PtNode> kids;
};

std::vector<PtNode> gen_trees(int k);

std::vector<std::vector<PtNode>> gen_forests(int k) {
    std::vector<std::vector<PtNode>> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    for (int s = 1; s <= k; ++s)
        for (const PtNode& head : gen_trees(s))
            for (const std::vector<PtNode>& tail : gen_forests(k - s)) {
                std::vector<PtNode> f{head};
                f.insert(f.end(), tail.begin(), tail.end());
                out.push_back(std::move(f));
            }
    return out;
}

std::vector<PtNode> gen_trees(int k) {
    std::vector<PtNode> out;
    for (auto& f : gen_forests(k - 1)) out.push_back(PtNode{std::move(f)});
    return out;
}

void fill_preorder(const PtNode& nd, int& counter, std::vector<std::vector<int>>& ch) {
    int id = counter++;
    for (const PtNode& k : nd.kids) {
        ch[id].push_back(counter);
        fill_preorder(k, counter, ch);
    }
}

}  // namespace

void plane_trees(int m, const std::function<void(const PlaneTree&)>& fn) {
    if (m < 1) throw Error("plane_trees: need at least one vertex");
    for (const PtNode& t : gen_trees(m)) {
        std::vector<std::vector<int>> ch(m);
        int counter = 0;
        fill_preorder(t, counter, ch);
        fn(PlaneTree(std::move(ch)));
    }
}

LabeledTree::LabeledTree(std::vector<int> labels_, std::vector<std::pair<int, int>> edges_)
    : labels(std::move(labels_)), edges(std::move(edges_)) {
    if (labels.empty()) throw Error("LabeledTree: empty label set");
    for (size_t i = 1; i < labels.size(); ++i)
        if (labels[i] <= labels[i - 1]) throw Error("LabeledTree: labels must be sorted, distinct");
    if (edges.size() + 1 != labels.size()) throw Error("LabeledTree: edge count is not m-1");
    std::sort(edges.begin(), edges.end());
    std::map<int, int> idx;
    for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
    std::vector<int> uf(labels.size());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int v) { return uf[v] == v ? v : uf[v] = find(uf[v]); };
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u >= v) throw Error("LabeledTree: edges must have u < v");
        if (i > 0 && edges[i] == edges[i - 1]) throw Error("LabeledTree: duplicate edge");
        auto iu = idx.find(u), iv = idx.find(v);
        if (iu == idx.end() || iv == idx.end()) throw Error("LabeledTree: edge endpoint unknown");
        int a = find(iu->second), b = find(iv->second);
        if (a == b) throw Error("LabeledTree: edges contain a cycle");
        uf[a] = b;
    }
}

LabeledTree::LabeledTree(int m, std::vector<std::pair<int, int>> edges_)
    : LabeledTree(
          [m] {
              std::vector<int> l(m);
              std::iota(l.begin(), l.end(), 1);
              return l;
          }(),
          std::move(edges_)) {}

std::string LabeledTree::to_string() const {
    std::string s = "tree[";
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
    }
    if (edges.empty()) s += std::to_string(labels[0]);
    return s + "]";
}

Drawing canonical_drawing(const LabeledTree& t) {
    std::map<int, std::vector<int>> adj;
    for (int l : t.labels) adj[l];
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& [l, nb] : adj) std::sort(nb.begin(), nb.end());
    Drawing d;
    d.tree.children.assign(t.size(), {});
    d.label.assign(t.size(), 0);
    int counter = 0;
    std::function<int(int, int)> visit = [&](int lbl, int parent) {
        int id = counter++;
        d.label[id] = lbl;
        for (int nb : adj[lbl])
            if (nb != parent) d.tree.children[id].push_back(visit(nb, lbl));
        return id;
    };
    visit(t.labels.front(), -1);
    return d;
}

std::vector<std::vector<int>> path_decomposition(const PlaneTree& t) {
    const int n = t.size();
    std::vector<int> dep = t.depths();
    std::vector<int> parent(n, -1);
    for (int v = 0; v < n; ++v)
        for (int c : t.children[v]) parent[c] = v;

    std::vector<int> path_of(n, -1);
    std::vector<std::vector<int>> paths;
    int covered = 0;
    auto descend = [&](int start) {
        std::vector<int> w;
        int v = start;
        while (true) {
            w.push_back(v);
            path_of[v] = static_cast<int>(paths.size());
            ++covered;
            if (t.children[v].empty()) break;
            v = t.children[v].front();
        }
        paths.push_back(std::move(w));
    };
    descend(0);
    while (covered < n) {
        int best = -1;
        for (int u = 0; u < n; ++u) {
            if (path_of[u] >= 0 || path_of[parent[u]] < 0) continue;
            if (best < 0) {
                best = u;
                continue;
            }
            int ju = path_of[parent[u]], jb = path_of[parent[best]];
            if (ju != jb) {
                if (ju > jb) best = u;
            } else if (dep[u] > dep[best]) {
                best = u;
            }
        }
        descend(best);
    }
    return paths;
}

NuResult nu(const PlaneTree& t) {
    std::vector<std::vector<int>> paths = path_decomposition(t);
    std::vector<int> dep = t.depths();
    const int H = 1 + *std::max_element(dep.begin(), dep.end());

    std::vector<SkewShape> strips;
    std::map<std::pair<int, int>, int> vertex_at;  // (shape, row) -> plane vertex
    for (size_t i = 0; i < paths.size(); ++i) {
        const auto& w = paths[i];
        int s = H - dep[w.front()];
        int tt = s - static_cast<int>(w.size());
        if (s <= 0 || tt < 0) throw InternalCheckFailed("nu: strip bounds broken");
        if (i > 0 && s >= H - dep[paths[0].front()])
            throw InternalCheckFailed("nu: first strip is not strictly tallest");
        strips.emplace_back(Partition(std::vector<int>(s, 1)),
                            Partition(std::vector<int>(tt, 1)));
        for (size_t idx = 0; idx < w.size(); ++idx)
            vertex_at[{static_cast<int>(i) + 1, H - dep[w[idx]]}] = w[idx];
    }
    ShapeSequence seq(std::move(strips));
    std::vector<int> cv(seq.total_cells());
    for (int r = 0; r < seq.total_cells(); ++r) {
        const ShapeCell& c = seq.cells()[seq.cell_by_rank()[r]];
        cv[r] = vertex_at.at({c.shape, c.y});
    }
    if (cv[0] != 0) throw InternalCheckFailed("nu: root cell is not first on the diagonal");
    return NuResult{std::move(seq), std::move(cv)};
}

SchroderPath::SchroderPath(std::string steps_) : steps(std::move(steps_)) {
    int x = 0, y = 0;
    for (char ch : steps) {
        switch (ch) {
            case 'n': ++y; break;
            case 'e':
                ++x;
                if (y < x) throw Error("SchroderPath: dips below the diagonal");
                break;
            case 'd':
                if (y == x) throw Error("SchroderPath: diagonal step starting on the diagonal");
                ++x;
                ++y;
                break;
            default: throw ParseError("SchroderPath: steps must be over {n,e,d}");
        }
    }
    if (x != y) throw Error("SchroderPath: does not end on the diagonal");
}

int SchroderPath::size() const {
    int m = 0;
    for (char ch : steps) m += (ch != 'e');
    return m;
}

std::vector<int> SchroderPath::heights() const {
    std::vector<int> h;
    int y = 0;
    for (char ch : steps) {
        if (ch == 'n') {
            ++y;
        } else {
            h.push_back(y);
            if (ch == 'd') ++y;
        }
    }
    return h;
}

void schroder_paths(int m, const std::function<void(const SchroderPath&)>& fn) {
    std::string s;
    std::function<void(int, int)> rec = [&](int x, int y) {
        if (x == m && y == m) {
            fn(SchroderPath(s));
            return;
        }
        if (x < m && y < m && y > x) {
            s += 'd';
            rec(x + 1, y + 1);
            s.pop_back();
        }
        if (x < m && y >= x + 1) {
            s += 'e';
            rec(x + 1, y);
            s.pop_back();
        }
        if (y < m) {
            s += 'n';
            rec(x, y + 1);
            s.pop_back();
        }
    };
    rec(0, 0);
}

LLTGraph schroder_to_graph(const SchroderPath& p) {
    const int m = p.size();
    std::vector<int> h = p.heights();
    std::vector<std::pair<int, int>> e1, ed;
    int i = 0;
    for (char ch : p.steps) {
        if (ch == 'n') continue;
        ++i;
        for (int j = i + 1; j <= h[i - 1]; ++j) ed.emplace_back(i, j);
        if (ch == 'd') e1.emplace_back(i, h[i - 1] + 1);
    }
    return LLTGraph(m, std::move(e1), {}, std::move(ed));
}

namespace {

std::string box(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

SchroderPath graph_to_schroder(const LLTGraph& g) {
    if (!g.e2.empty())
        throw NotAPathGraph("graph_to_schroder: type-II edge at box " +
                            box(g.e2[0].first, g.e2[0].second));
    const int m = g.n;
    std::vector<std::vector<int>> row(m + 1);
    for (auto [u, v] : g.ed) {
        if (u >= v) throw NotAPathGraph("graph_to_schroder: box " + box(u, v) + " is not above the diagonal");
        row[u].push_back(v);
    }
    std::vector<int> h(m + 1);
    std::vector<char> dexit(m + 1, 0);
    for (int i = 1; i <= m; ++i) {
        std::sort(row[i].begin(), row[i].end());
        h[i] = row[i].empty() ? i : row[i].back();
        int expect = i + 1;
        for (int j : row[i]) {
            if (j != expect)
                throw NotAPathGraph("graph_to_schroder: missing box " + box(i, expect));
            ++expect;
        }
    }
    for (auto [u, v] : g.e1) {
        if (v != h[u] + 1)
            throw NotAPathGraph("graph_to_schroder: type-I edge at box " + box(u, v) +
                                " is not the first box past row " + std::to_string(u));
        if (dexit[u])
            throw NotAPathGraph("graph_to_schroder: two type-I edges leave vertex " +
                                std::to_string(u));
        dexit[u] = 1;
    }
    std::string s;
    int y = 0;
    for (int i = 1; i <= m; ++i) {
        if (h[i] < y)
            throw NotAPathGraph("graph_to_schroder: box rows shrink at box " + box(i, h[i] + 1));
        s.append(h[i] - y, 'n');
        y = h[i];
        if (dexit[i]) {
            s += 'd';
            ++y;
        } else {
            s += 'e';
        }
    }
    if (y != m) throw NotAPathGraph("graph_to_schroder: path does not close at height " +
                                    std::to_string(m));
    SchroderPath p(std::move(s));
    if (!(schroder_to_graph(p) == g))
        throw InternalCheckFailed("graph_to_schroder: round trip failed");
    return p;
}

ShapeSequence schroder_to_strips(const SchroderPath& p) {
    LLTGraph g = schroder_to_graph(p);
    const int m = g.n;
    std::set<std::pair<int, int>> e1(g.e1.begin(), g.e1.end()), ed(g.ed.begin(), g.ed.end());

    // Contents along the diagonal, c[1] = 0.
    std::vector<int> c(m + 1, 0);
    for (int u = 2; u <= m; ++u) {
        int forced = -1;
        auto force = [&](int val, int a) {
            if (val < 0 || val > 1 || (forced >= 0 && forced != val))
                throw NotAPathGraph("schroder_to_strips: contradictory contents at box " +
                                    box(a, u));
            forced = val;
        };
        for (int a = 1; a < u; ++a) {
            int gap = c[u - 1] - c[a];
            if (e1.count({a, u})) {
                force(1 - gap, a);
            } else if (ed.count({a, u})) {
                if (gap >= 2)
                    throw NotAPathGraph("schroder_to_strips: double edge spans a content gap at box " +
                                        box(a, u));
                if (gap == 1) force(0, a);
            } else if (gap == 0) {
                force(1, a);
            }
        }
        c[u] = c[u - 1] + (forced < 0 ? 0 : forced);
    }

    // Columns are the chains of type-I edges.
    std::vector<int> succ(m + 1, 0), pred(m + 1, 0);
    for (auto [a, b] : g.e1) {
        if (succ[a] || pred[b])
            throw NotAPathGraph("schroder_to_strips: branching type-I chain at box " + box(a, b));
        succ[a] = b;
        pred[b] = a;
    }
    std::vector<int> col(m + 1, -1);
    std::vector<std::vector<int>> cols;
    for (int u = 1; u <= m; ++u) {
        if (pred[u]) continue;
        std::vector<int> chain;
        for (int v = u; v; v = succ[v]) {
            col[v] = static_cast<int>(cols.size());
            chain.push_back(v);
        }
        cols.push_back(std::move(chain));
    }

    // Order constraints between columns from the window conditions.
    std::vector<std::set<int>> after(cols.size());
    std::vector<int> indeg(cols.size(), 0);
    auto add_order = [&](int a, int b, int u, int v) {
        if (a == b) throw NotAPathGraph("schroder_to_strips: self-ordered column at box " + box(u, v));
        if (after[a].insert(b).second) ++indeg[b];
    };
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) {
            int gap = c[v] - c[u];
            bool dd = ed.count({u, v}) > 0, tI = e1.count({u, v}) > 0;
            if (gap == 0) {
                if (!dd)
                    throw NotAPathGraph("schroder_to_strips: level pair without a double edge at box " +
                                        box(u, v));
                add_order(col[u], col[v], u, v);
            } else if (gap == 1) {
                if (tI) continue;  // same chain
                if (dd)
                    add_order(col[v], col[u], u, v);
                else
                    add_order(col[u], col[v], u, v);
            } else if (dd || tI) {
                throw InternalCheckFailed("schroder_to_strips: edge across a wide gap");
            }
        }

    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (size_t i = 0; i < cols.size(); ++i)
        if (indeg[i] == 0) ready.push(static_cast<int>(i));
    std::vector<int> order;
    while (!ready.empty()) {
        int a = ready.top();
        ready.pop();
        order.push_back(a);
        for (int b : after[a])
            if (--indeg[b] == 0) ready.push(b);
    }
    if (order.size() != cols.size())
        throw NotAPathGraph("schroder_to_strips: cyclic column ordering");

    int maxc = 0;
    for (int u = 1; u <= m; ++u) maxc = std::max(maxc, c[u]);
    std::vector<SkewShape> strips;
    for (int id : order) {
        int lo = c[cols[id].front()] - maxc, hi = c[cols[id].back()] - maxc;
        strips.emplace_back(Partition(std::vector<int>(1 - lo, 1)),
                            Partition(std::vector<int>(-hi, 1)));
    }
    ShapeSequence seq(std::move(strips));
    if (!(shapes_to_graph(seq) == g))
        throw InternalCheckFailed("schroder_to_strips: round trip failed");
    return seq;
}

SchroderPath tree_to_schroder(const PlaneTree& t) {
    SchroderPath p = graph_to_schroder(shapes_to_graph(nu(t).seq));
    if (!satisfies_tree_image_conditions(p))
        throw InternalCheckFailed("tree_to_schroder: image conditions violated");
    return p;
}

bool satisfies_tree_image_conditions(const SchroderPath& p) {
    const std::string& s = p.steps;
    const int m = p.size();
    if (m == 0) return false;
    if (m == 1) return s == "ne";
    if (s.size() < 2 || s[0] != 'n' || s[1] != 'd') return false;
    if (s.find("en") != std::string::npos) return false;
    int x = 0, y = 0;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == 'n') ++y;
        else if (s[i] == 'e') ++x;
        else { ++x; ++y; }
        if (x == y) return false;
    }
    return true;
}

SchroderPath schroder_to_dyck(const SchroderPath& p) {
    if (!satisfies_tree_image_conditions(p))
        throw PreconditionViolated("schroder_to_dyck: path is not a tree image");
    std::string s;
    for (char ch : p.steps) {
        if (ch == 'd') s += "en";
        else s += ch;
    }
    if (s.size() < 2 || s[0] != 'n' || s[1] != 'e')
        throw InternalCheckFailed("schroder_to_dyck: expansion does not start \"ne\"");
    return SchroderPath(s.substr(2));
}

SchroderPath dyck_to_schroder(const SchroderPath& d) {
    if (!d.is_dyck()) throw PreconditionViolated("dyck_to_schroder: input has diagonal steps");
    std::string s = "ne" + d.steps;
    std::string out;
    for (size_t i = 0; i < s.size();) {
        if (s[i] == 'e' && i + 1 < s.size() && s[i + 1] == 'n') {
            out += 'd';
            i += 2;
        } else {
            out += s[i];
            ++i;
        }
    }
    SchroderPath p(std::move(out));
    if (!satisfies_tree_image_conditions(p) || !(schroder_to_dyck(p) == d))
        throw InternalCheckFailed("dyck_to_schroder: round trip failed");
    return p;
}

ParkingFunction::ParkingFunction(std::vector<int> f_) : f(std::move(f_)) {
    const int m = cars();
    std::vector<int> cnt(m + 2, 0);
    for (int v : f) {
        if (v < 1 || v > m) throw Error("ParkingFunction: preference out of range");
        ++cnt[v];
    }
    int seen = 0;
    for (int i = 1; i <= m; ++i) {
        seen += cnt[i];
        if (seen < i) throw Error("ParkingFunction: |f^-1([" + std::to_string(i) + "])| < " +
                                  std::to_string(i));
    }
}

std::string ParkingFunction::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + ")";
}

ParkingFunction dyck_to_parking(const SchroderPath& d) {
    if (!d.is_dyck()) throw PreconditionViolated("dyck_to_parking: input has diagonal steps");
    std::vector<int> f;
    int x = 0;
    for (char ch : d.steps) {
        if (ch == 'n') f.push_back(x + 1);
        else ++x;
    }
    return ParkingFunction(std::move(f));
}

SchroderPath parking_to_dyck(const ParkingFunction& f) {
    const int m = f.cars();
    std::vector<int> cnt(m + 1, 0);
    for (int v : f.f) ++cnt[v];
    std::string s;
    for (int j = 1; j <= m; ++j) {
        s.append(cnt[j], 'n');
        s += 'e';
    }
    return SchroderPath(std::move(s));
}

ParkingFunction tree_to_parking(const LabeledTree& t) {
    const int m = t.size();
    for (int i = 0; i < m; ++i)
        if (t.labels[i] != i + 1)
            throw PreconditionViolated("tree_to_parking: labels must be exactly 1..m");
    Drawing dr = canonical_drawing(t);
    NuResult nr = nu(dr.tree);
    SchroderPath dy = schroder_to_dyck(tree_to_schroder(dr.tree));
    std::vector<int> ell(m);
    for (int r = 0; r < m; ++r) ell[r] = dr.label[nr.cell_vertex[r]];
    if (ell[0] != 1) throw InternalCheckFailed("tree_to_parking: root label is not first");
    std::vector<int> f(m - 1, 0);
    int x = 0, idx = 1;
    for (char ch : dy.steps) {
        if (ch == 'n') f[ell[idx++] - 2] = x + 1;
        else ++x;
    }
    if (idx != m) throw InternalCheckFailed("tree_to_parking: label count mismatch");
    return ParkingFunction(std::move(f));
}

void parking_functions(int m, const std::function<void(const ParkingFunction&)>& fn) {
    if (m < 0) throw Error("parking_functions: negative car count");
    std::vector<int> f(m), cnt(m + 2, 0);
    // seen[i] = |f^-1([i])| over the filled prefix; feasibility is checked at
    // the leaves, which is cheap at the sizes in scope.
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            int seen = 0;
            for (int j = 1; j <= m; ++j) {
                seen += cnt[j];
                if (seen < j) return;
            }
            fn(ParkingFunction(f));
            return;
        }
        for (int v = 1; v <= m; ++v) {
            f[i] = v;
            ++cnt[v];
            rec(i + 1);
            --cnt[v];
        }
    };
    if (m == 0) {
        fn(ParkingFunction(std::vector<int>{}));
        return;
    }
    rec(0);
}

void spanning_trees(const SimpleGraph& g, const std::function<void(const LabeledTree&)>& fn) {
    const int n = g.n;
    if (n == 0) return;
    const auto& es = g.edges;
    std::vector<std::pair<int, int>> chosen;
    std::function<int(std::vector<int>&, int)> find = [&](std::vector<int>& uf, int v) {
        return uf[v] == v ? v : uf[v] = find(uf, uf[v]);
    };
    std::function<void(size_t, std::vector<int>)> rec = [&](size_t idx, std::vector<int> uf) {
        if (static_cast<int>(chosen.size()) == n - 1) {
            fn(LabeledTree(n, chosen));
            return;
        }
        if (idx == es.size() ||
            chosen.size() + (es.size() - idx) < static_cast<size_t>(n - 1))
            return;
        auto [u, v] = es[idx];
        int a = find(uf, u), b = find(uf, v);
        if (a != b) {
            std::vector<int> uf2 = uf;
            uf2[a] = b;
            chosen.push_back(es[idx]);
            rec(idx + 1, std::move(uf2));
            chosen.pop_back();
        }
        rec(idx + 1, std::move(uf));
    };
    std::vector<int> uf(n + 1);
    std::iota(uf.begin(), uf.end(), 0);
    rec(0, std::move(uf));
}

SimpleGraph complete_graph(int m) {
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) es.emplace_back(u, v);
    return SimpleGraph(m, std::move(es));
}

std::string to_string(Lemma45Case c) { return c == Lemma45Case::A ? "A" : "B"; }

VerificationReport check_lemma_4_5(Lemma45Case c, const SchroderPath& p, int position,
                                   int num_vars) {
    auto t0 = std::chrono::steady_clock::now();
    const std::string& s = p.steps;
    std::string params = "case=" + to_string(c) + " path=" + (s.empty() ? "(empty)" : s) +
                         " pos=" + std::to_string(position) + " n=" + std::to_string(num_vars);
    if (position < 0 || position + 1 >= static_cast<int>(s.size()))
        throw PatternMismatch("check_lemma_4_5: position out of range");
    int x = 0, y = 0;
    for (int i = 0; i < position; ++i) {
        if (s[i] == 'n') ++y;
        else if (s[i] == 'e') ++x;
        else { ++x; ++y; }
    }
    auto llt = [&](const std::string& steps) {
        return llt_of_graph(schroder_to_graph(SchroderPath(steps)), num_vars);
    };

    SymPoly lhs = SymPoly::zero(num_vars), rhs = SymPoly::zero(num_vars);
    if (c == Lemma45Case::A) {
        if (s[position] != 'n' || s[position + 1] != 'e')
            throw PatternMismatch("check_lemma_4_5: expected an \"ne\" factor");
        if (y <= x) throw PatternMismatch("check_lemma_4_5: factor starts on the diagonal");
        std::string sd = s.substr(0, position) + "d" + s.substr(position + 2);
        std::string sen = s;
        std::swap(sen[position], sen[position + 1]);
        lhs = llt(s);
        rhs = llt(sd) * QPoly::qminus1() + llt(sen);
    } else {
        if (s[position] != 'n' || s[position + 1] != 'd')
            throw PatternMismatch("check_lemma_4_5: expected an \"nd\" factor");
        if (y <= x) throw PatternMismatch("check_lemma_4_5: factor starts on the diagonal");
        const int m = p.size();
        int j = y;
        if (j + 1 > m - 1)
            throw PatternMismatch("check_lemma_4_5: no column pair above the factor");
        std::vector<int> cross(m, -1);  // cross[t] = step index taking x from t to t+1
        int xx = 0;
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] != 'n') cross[xx++] = static_cast<int>(i);
        if (s[cross[j]] != 'e' || cross[j + 1] != cross[j] + 1 || s[cross[j + 1]] != 'e')
            throw PatternMismatch(
                "check_lemma_4_5: columns above the factor do not exit by consecutive east steps");
        std::string sw = s;
        sw[position] = 'd';
        sw[position + 1] = 'n';
        lhs = llt(s);
        rhs = llt(sw) * QPoly::q();
    }
    VerificationReport r = lhs == rhs
                               ? VerificationReport::pass("check_lemma_4_5", params)
                               : VerificationReport::fail("check_lemma_4_5", params, lhs, rhs);
    r.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace lltlab
