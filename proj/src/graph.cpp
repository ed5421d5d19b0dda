#include "designiso/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace designiso {

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj[u].set(v);
    adj[v].set(u);
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adj) total += row.count();
    return total / 2;
}

Graph line_graph(const Design& d) {
    const int b = static_cast<int>(d.blocks.size());
    Graph g(b);
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j) {
            const Block& x = d.blocks[i];
            const Block& y = d.blocks[j];
            // sorted-merge intersection test
            auto ix = x.begin();
            auto iy = y.begin();
            bool meet = false;
            while (ix != x.end() && iy != y.end()) {
                if (*ix < *iy)
                    ++ix;
                else if (*iy < *ix)
                    ++iy;
                else {
                    meet = true;
                    break;
                }
            }
            if (meet) g.add_edge(i, j);
        }
    return g;
}

std::optional<SrgParams> strongly_regular_check(const Graph& g) {
    if (g.n < 3) throw std::invalid_argument("strongly_regular_check requires n >= 3");
    const std::size_t deg = g.degree(0);
    for (int i = 1; i < g.n; ++i)
        if (g.degree(i) != deg) return std::nullopt;
    if (deg == 0 || deg == static_cast<std::size_t>(g.n - 1)) return std::nullopt;

    std::optional<int> lambda_adj, mu_nonadj;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            int common = static_cast<int>((g.adj[i] & g.adj[j]).count());
            auto& slot = g.adjacent(i, j) ? lambda_adj : mu_nonadj;
            if (!slot)
                slot = common;
            else if (*slot != common)
                return std::nullopt;
        }
    return SrgParams{static_cast<int>(deg), lambda_adj.value_or(0), mu_nonadj.value_or(0)};
}

}  // namespace designiso
