#pragma once

#include "designiso/graph.hpp"

#include <stdexcept>
#include <string>

namespace designiso {

/// The input graph cannot be (or is refused as) the line graph of a design
/// with the requested parameters.
struct ReconstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The unique v >= k with C(v,t) * lambda = b * C(k,t), by monotone search.
/// Throws ReconstructionError when no integral solution exists.
int solve_v(long long b, int t, int k, int lambda);

/// Rands' bound f(k,t,s) on the order above which the only maximum
/// pairwise-s-intersecting block families are the stars of s-subsets:
/// s < t-1 -> s + C(k,s)(k-s+1)(k-s);  s = t-1 -> s + (k-s) C(k,s)^2.
BigInt rands_f(int k, int t, int s);

/// All maximal cliques of size >= min_size (Bron-Kerbosch with pivoting),
/// each sorted, the list sorted lexicographically.
std::vector<std::vector<int>> max_cliques_at_least(const Graph& g, int min_size);

/// Exactly the maximum cliques of size r, expected to number v (one per point
/// of the underlying design). Heuristic edge-peeling first, exact enumeration
/// as fallback; throws ReconstructionError when the count is not v.
std::vector<std::vector<int>> point_cliques(const Graph& g, int r, int v);

struct ReconstructionResult {
    Design design;
    std::vector<std::vector<int>> cliques;  // clique of recovered point p, in point order
    ValidationReport report;                // validate(design)
    bool line_graph_equal{};                // line_graph(design) == input, identity vertex map
    std::vector<std::string> warnings;

    bool certified() const { return report.ok() && line_graph_equal; }
};

/// Recovers the design whose line graph is `g`: points from maximum cliques,
/// blocks from vertices. Requires b > k^2(k-1); the result is self-certifying.
/// `force_past_gate` is a diagnostic switch that skips the b-gate; the clique
/// phase then reports why small inputs fail (e.g. the SQS(8) cocktail-party
/// graph has 128 maximum cliques, not 8).
ReconstructionResult reconstruct(const Graph& g, int t, int k, int lambda,
                                 bool force_past_gate = false);

}  // namespace designiso
