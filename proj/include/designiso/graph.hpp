#pragma once

#include "designiso/design.hpp"

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <optional>

namespace designiso {

/// Undirected simple graph with packed adjacency bitsets.
struct Graph {
    int n{};
    std::vector<boost::dynamic_bitset<>> adj;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(vertices, boost::dynamic_bitset<>(vertices)) {}

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj[u].test(v); }
    std::size_t degree(int u) const { return adj[u].count(); }
    std::size_t edge_count() const;

    bool operator==(const Graph&) const = default;
};

/// Block intersection graph: vertex i = block i (stored order), i ~ j iff the
/// blocks share at least one point.
Graph line_graph(const Design& d);

struct SrgParams {
    int degree;
    int lambda_adj;   // common neighbors of an adjacent pair
    int mu_nonadj;    // common neighbors of a non-adjacent pair
    bool operator==(const SrgParams&) const = default;
};

/// Strongly-regular parameters, or nullopt when the graph is not strongly
/// regular (complete and empty graphs are treated as not applicable).
std::optional<SrgParams> strongly_regular_check(const Graph& g);

}  // namespace designiso
