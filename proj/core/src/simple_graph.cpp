#include "lltlab/simple_graph.hpp"

#include <algorithm>
#include <functional>

#include "lltlab/errors.hpp"

namespace lltlab {

SimpleGraph::SimpleGraph(int n_, std::vector<std::pair<int, int>> edges_)
    : n(n_), edges(std::move(edges_)) {
    if (n < 0) throw Error("SimpleGraph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n || u == v) throw Error("SimpleGraph: bad edge");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error("SimpleGraph: duplicate edge");
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> components(const SimpleGraph& g) {
    std::vector<int> rep(g.n + 1);
    for (int i = 1; i <= g.n; ++i) rep[i] = i;
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    for (auto [u, v] : g.edges) rep[find(u)] = find(v);
    std::vector<std::vector<int>> comps;
    std::vector<int> where(g.n + 1, -1);
    for (int i = 1; i <= g.n; ++i) {
        int r = find(i);
        if (where[r] < 0) {
            where[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[where[r]].push_back(i);
    }
    return comps;
}

bool is_connected(const SimpleGraph& g) { return components(g).size() <= 1; }

mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

mpz_class spanning_tree_count(const SimpleGraph& g) {
    if (g.n <= 1) return 1;
    std::vector<std::vector<mpz_class>> lap(g.n, std::vector<mpz_class>(g.n, 0));
    for (auto [u, v] : g.edges) {
        lap[u - 1][u - 1] += 1;
        lap[v - 1][v - 1] += 1;
        lap[u - 1][v - 1] -= 1;
        lap[v - 1][u - 1] -= 1;
    }
    std::vector<std::vector<mpz_class>> red(g.n - 1, std::vector<mpz_class>(g.n - 1));
    for (int i = 1; i < g.n; ++i)
        for (int j = 1; j < g.n; ++j) red[i - 1][j - 1] = lap[i][j];
    return det_bareiss(std::move(red));
}

}  // namespace lltlab
