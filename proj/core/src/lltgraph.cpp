#include "lltlab/lltgraph.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "lltlab/errors.hpp"
#include "lltlab/shapes.hpp"

namespace lltlab {

namespace {

void check_edges(int n, std::vector<std::pair<int, int>>& es, const char* kind) {
    std::sort(es.begin(), es.end());
    for (size_t i = 0; i < es.size(); ++i) {
        auto [u, v] = es[i];
        if (u < 1 || u > n || v < 1 || v > n)
            throw Error(std::string("LLTGraph: ") + kind + " edge endpoint out of range");
        if (u == v) throw Error(std::string("LLTGraph: ") + kind + " self-loop");
        if (i > 0 && es[i] == es[i - 1])
            throw Error(std::string("LLTGraph: duplicate ") + kind + " edge");
    }
}

void append_edges(std::string& s, const std::vector<std::pair<int, int>>& es) {
    for (size_t i = 0; i < es.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(es[i].first) + ">" + std::to_string(es[i].second);
    }
}

}  // namespace

LLTGraph::LLTGraph(int n_, std::vector<std::pair<int, int>> e1_,
                   std::vector<std::pair<int, int>> e2_, std::vector<std::pair<int, int>> ed_)
    : n(n_), e1(std::move(e1_)), e2(std::move(e2_)), ed(std::move(ed_)) {
    if (n < 0) throw Error("LLTGraph: negative vertex count");
    check_edges(n, e1, "type-I");
    check_edges(n, e2, "type-II");
    check_edges(n, ed, "double");
}

std::string LLTGraph::key() const {
    std::string s = "n" + std::to_string(n) + ";1:";
    append_edges(s, e1);
    s += ";2:";
    append_edges(s, e2);
    s += ";d:";
    append_edges(s, ed);
    return s;
}

SymPoly llt_of_graph(const LLTGraph& g, int num_vars) {
    if (num_vars < 1) throw Error("llt_of_graph: need at least one color");
    const int n = g.n;
    if (n == 0) return SymPoly::one(num_vars);

    // Static vertex order: start at the busiest vertex, then repeatedly take
    // the vertex with the most already-placed neighbors, so bound propagation
    // kicks in as early as possible.
    std::vector<std::set<int>> adj(n + 1);
    for (const auto* es : {&g.e1, &g.e2, &g.ed})
        for (auto [u, v] : *es) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    std::vector<int> order;
    std::vector<char> placed(n + 1, 0);
    std::vector<int> placed_deg(n + 1, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 1; v <= n; ++v) {
            if (placed[v]) continue;
            if (best < 0 || placed_deg[v] > placed_deg[best] ||
                (placed_deg[v] == placed_deg[best] && adj[v].size() > adj[best].size()))
                best = v;
        }
        order.push_back(best);
        placed[best] = 1;
        for (int u : adj[best])
            if (!placed[u]) ++placed_deg[u];
    }
    std::vector<int> pos(n + 1, -1);
    for (int p = 0; p < n; ++p) pos[order[p]] = p;

    // Per position: bounds against earlier vertices and double-edge partners.
    struct Cons {
        std::vector<int> lo_gt, lo_ge, hi_lt, hi_le;
        std::vector<std::pair<int, bool>> dbl;  // (earlier vertex u, current is the edge head)
    };
    std::vector<Cons> cons(n);
    for (auto [a, b] : g.e1) {
        if (pos[a] > pos[b])
            cons[pos[a]].lo_gt.push_back(b);
        else
            cons[pos[b]].hi_lt.push_back(a);
    }
    for (auto [a, b] : g.e2) {
        if (pos[a] > pos[b])
            cons[pos[a]].lo_ge.push_back(b);
        else
            cons[pos[b]].hi_le.push_back(a);
    }
    for (auto [a, b] : g.ed) {
        if (pos[a] > pos[b])
            cons[pos[a]].dbl.emplace_back(b, true);
        else
            cons[pos[b]].dbl.emplace_back(a, false);
    }

    std::map<std::vector<int>, std::vector<long long>> acc;
    std::vector<int> f(n + 1, 0);
    std::vector<int> weight(num_vars + 1, 0);

    std::function<void(int, int)> rec = [&](int p, int qexp) {
        if (p == n) {
            std::vector<int> w(weight.begin() + 1, weight.end());
            for (size_t j = 1; j < w.size(); ++j)
                if (w[j] > w[j - 1]) return;
            auto& qc = acc[w];
            if (qc.size() <= static_cast<size_t>(qexp)) qc.resize(qexp + 1, 0);
            ++qc[qexp];
            return;
        }
        const Cons& c = cons[p];
        int v = order[p];
        int lo = 1, hi = num_vars;
        for (int u : c.lo_gt) lo = std::max(lo, f[u] + 1);
        for (int u : c.lo_ge) lo = std::max(lo, f[u]);
        for (int u : c.hi_lt) hi = std::min(hi, f[u] - 1);
        for (int u : c.hi_le) hi = std::min(hi, f[u]);
        int remaining = n - p - 1;
        for (int col = lo; col <= hi; ++col) {
            if (col > 1 && weight[col] + 1 > weight[col - 1] + remaining) continue;
            f[v] = col;
            ++weight[col];
            int e = qexp;
            for (auto [u, head] : c.dbl)
                if (head ? col > f[u] : f[u] > col) ++e;
            rec(p + 1, e);
            --weight[col];
        }
    };
    rec(0, 0);

    SymPoly out(num_vars);
    for (auto& [w, qc] : acc) {
        std::vector<mpz_class> coeffs(qc.size());
        for (size_t i = 0; i < qc.size(); ++i) coeffs[i] = static_cast<long>(qc[i]);
        out.add_term(Partition::from_weight(w), QPoly::from_coeffs(std::move(coeffs)));
    }
    return out;
}

MeltingLollipop::MeltingLollipop(int l_, int m_, int k_) : l(l_), m(m_), k(k_) {
    if (l < 0) throw Error("MeltingLollipop: path length must be nonnegative");
    if (m < 1) throw Error("MeltingLollipop: clique size must be positive");
    if (k < 0 || k > m - 1) throw Error("MeltingLollipop: melting index out of range");
}

std::string MeltingLollipop::to_string() const {
    std::ostringstream os;
    os << "lollipop(l=" << l << ", m=" << m << ", k=" << k << ")";
    return os.str();
}

LLTGraph melting_lollipop_graph(const MeltingLollipop& p) {
    std::vector<std::pair<int, int>> ed;
    for (int i = 1; i <= p.l; ++i) ed.emplace_back(i, i + 1);
    for (int i = p.l + 1; i <= p.l + p.m; ++i)
        for (int j = i + 1; j <= p.l + p.m; ++j) {
            if (i == p.l + 1 && j > p.l + p.m - p.k) continue;
            ed.emplace_back(i, j);
        }
    return LLTGraph(p.l + p.m, {}, {}, std::move(ed));
}

ShapeSequence melting_lollipop_shapes(const MeltingLollipop& p) {
    // One cell per vertex.  Contents, listed by shape index: the clique lives
    // on two consecutive content levels (the k melted vertices one step above
    // the joint and the unmelted rest), the path descends one level per step.
    // Shape indices are arranged so that the shifted-content ranks reproduce
    // the vertex numbering of melting_lollipop_graph exactly.
    std::vector<int> contents;
    contents.push_back(0);                                  // joint l+1
    for (int i = 0; i < p.k; ++i) contents.push_back(1);    // melted clique vertices
    if (p.l >= 1) contents.push_back(-1);                   // path vertex l
    for (int i = 0; i < p.m - p.k - 1; ++i) contents.push_back(0);  // unmelted rest
    for (int j = 2; j <= p.l; ++j) contents.push_back(-j);  // path vertices l-1 .. 1
    ShapeSequence seq = unicellular_sequence(contents);
    if (!(shapes_to_graph(seq) == melting_lollipop_graph(p)))
        throw InternalCheckFailed("melting_lollipop_shapes: realization failed its round trip");
    return seq;
}

LLTGraph induced_subgraph(const LLTGraph& g, const std::vector<int>& s) {
    if (s.empty()) throw EmptySubset("induced_subgraph: empty vertex subset");
    std::vector<int> newid(g.n + 1, 0);
    for (size_t i = 0; i < s.size(); ++i) {
        int v = s[i];
        if (v < 1 || v > g.n) throw Error("induced_subgraph: vertex out of range");
        if (i > 0 && s[i] <= s[i - 1]) throw Error("induced_subgraph: subset must be sorted");
        newid[v] = static_cast<int>(i) + 1;
    }
    auto restrict_edges = [&](const std::vector<std::pair<int, int>>& es) {
        std::vector<std::pair<int, int>> out;
        for (auto [u, v] : es)
            if (newid[u] && newid[v]) out.emplace_back(newid[u], newid[v]);
        return out;
    };
    return LLTGraph(static_cast<int>(s.size()), restrict_edges(g.e1), restrict_edges(g.e2),
                    restrict_edges(g.ed));
}

SimpleGraph underlying_simple_graph(const LLTGraph& g) {
    std::set<std::pair<int, int>> pairs;
    for (const auto* es : {&g.e1, &g.e2, &g.ed})
        for (auto [u, v] : *es) pairs.insert({std::min(u, v), std::max(u, v)});
    return SimpleGraph(g.n, std::vector<std::pair<int, int>>(pairs.begin(), pairs.end()));
}

std::string to_string(Lemma32Case c) {
    switch (c) {
        case Lemma32Case::c1a: return "1a";
        case Lemma32Case::c1b: return "1b";
        case Lemma32Case::c1c: return "1c";
        case Lemma32Case::c2_type1: return "2-typeI";
        case Lemma32Case::c2_type2: return "2-typeII";
        case Lemma32Case::c3: return "3";
    }
    throw Error("to_string(Lemma32Case): bad case");
}

namespace {

// kind 0 = type-I, 1 = type-II, 2 = double; endpoints index pattern vertices.
struct PatternEdge {
    int kind, a, b;
};

struct PatternSide {
    QPoly coeff;
    std::vector<PatternEdge> edges;
};

struct LocalRelation {
    int size = 2;
    std::vector<PatternEdge> lhs;
    std::vector<PatternSide> rhs;  // empty means the left side must vanish
};

LocalRelation relation_for(Lemma32Case c) {
    LocalRelation r;
    switch (c) {
        case Lemma32Case::c1a:
            r.rhs = {{QPoly(1), {{0, 1, 2}}}, {QPoly(1), {{1, 2, 1}}}};
            break;
        case Lemma32Case::c1b:
            r.lhs = {{2, 1, 2}};
            r.rhs = {{QPoly::q(), {{0, 1, 2}}}, {QPoly(1), {{1, 2, 1}}}};
            break;
        case Lemma32Case::c1c:
            r.lhs = {{2, 1, 2}};
            r.rhs = {{QPoly::qminus1(), {{0, 1, 2}}}, {QPoly(1), {}}};
            break;
        case Lemma32Case::c2_type1:
            r.size = 3;
            r.lhs = {{0, 1, 2}, {0, 2, 3}, {0, 1, 3}};
            r.rhs = {{QPoly(1), {{0, 1, 2}, {0, 2, 3}}}};
            break;
        case Lemma32Case::c2_type2:
            r.size = 3;
            r.lhs = {{1, 1, 2}, {1, 2, 3}, {1, 1, 3}};
            r.rhs = {{QPoly(1), {{1, 1, 2}, {1, 2, 3}}}};
            break;
        case Lemma32Case::c3:
            r.size = 3;
            r.lhs = {{0, 1, 2}, {1, 2, 3}, {1, 3, 1}};
            break;
    }
    return r;
}

LLTGraph assemble(int n, std::vector<std::vector<std::pair<int, int>>> ambient,
                  const std::vector<PatternEdge>& pattern, const std::vector<int>& where) {
    for (const auto& e : pattern) ambient[e.kind].emplace_back(where[e.a], where[e.b]);
    return LLTGraph(n, std::move(ambient[0]), std::move(ambient[1]), std::move(ambient[2]));
}

}  // namespace

VerificationReport check_lemma_3_2(Lemma32Case c, int num_vars, std::uint64_t seed,
                                   int ambient_count) {
    auto t0 = std::chrono::steady_clock::now();
    LocalRelation rel = relation_for(c);
    std::string params = "case=" + to_string(c) + " n=" + std::to_string(num_vars) +
                         " seed=" + std::to_string(seed) +
                         " ambients=" + std::to_string(ambient_count);

    std::vector<std::string> notes;
    std::optional<VerificationReport> failure;

    auto finish = [&](VerificationReport r) {
        r.notes = std::move(notes);
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
        return r;
    };
    auto compare = [&](int n, const std::vector<std::vector<std::pair<int, int>>>& ambient,
                       const std::vector<int>& where, const std::string& tag) {
        SymPoly lhs = llt_of_graph(assemble(n, ambient, rel.lhs, where), num_vars);
        SymPoly rhs = SymPoly::zero(num_vars);
        for (const auto& side : rel.rhs)
            rhs += llt_of_graph(assemble(n, ambient, side.edges, where), num_vars) * side.coeff;
        if (lhs == rhs) {
            notes.push_back(tag + ": ok");
            return true;
        }
        failure =
            VerificationReport::fail("check_lemma_3_2", params + " [" + tag + "]", lhs, rhs);
        return false;
    };

    std::vector<int> where(rel.size + 1);
    std::iota(where.begin(), where.end(), 0);
    if (!compare(rel.size, {{}, {}, {}}, where, "standalone")) return finish(*failure);

    int n = std::max(num_vars, rel.size);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < ambient_count; ++t) {
        std::vector<int> verts(n);
        std::iota(verts.begin(), verts.end(), 1);
        std::shuffle(verts.begin(), verts.end(), rng);
        std::vector<char> inside(n + 1, 0);
        for (int i = 0; i < rel.size; ++i) {
            where[i + 1] = verts[i];
            inside[verts[i]] = 1;
        }
        std::vector<std::vector<std::pair<int, int>>> ambient(3);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                if (inside[u] && inside[v]) continue;
                auto r = rng() % 12;
                if (r < 6) continue;
                int kind = static_cast<int>((r - 6) / 2);
                if ((r - 6) % 2 == 0)
                    ambient[kind].emplace_back(u, v);
                else
                    ambient[kind].emplace_back(v, u);
            }
        if (!compare(n, ambient, where, "ambient " + std::to_string(t + 1)))
            return finish(*failure);
    }
    return finish(VerificationReport::pass("check_lemma_3_2", params));
}

}  // namespace lltlab
