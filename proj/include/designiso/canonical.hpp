#pragma once

#include "designiso/reconstruct.hpp"

#include <optional>

namespace designiso {

/// Ordered partition of the point set; cell order is significant.
struct Coloring {
    std::vector<std::vector<Point>> cells;

    bool discrete() const;
    std::vector<int> cell_of(int v) const;  // point -> cell index
    bool operator==(const Coloring&) const = default;
};

Coloring unit_coloring(int v);

/// Coarsest stable refinement: cells are split by the multiset, over a point's
/// incident blocks, of the sorted cell indices of the block's other points.
/// Sub-cells of a split cell are ordered by signature. Deterministic.
Coloring refine(const Design& d, Coloring coloring);

struct CanonicalForm {
    Params params;
    std::vector<Point> relabeling;        // old point -> new point
    std::vector<Block> canonical_blocks;  // relabeled, lexicographically sorted
    std::string digest;                   // lowercase-hex SHA-256 of the encoding
};

struct CanonicalStats {
    unsigned long long sequences_explored = 0;  // complete generating sequences
    unsigned long long refine_calls = 0;
    unsigned long long branch_nodes = 0;        // in-cell branching nodes
    unsigned long long leaves = 0;              // complete labelings scored
};

/// The byte encoding whose SHA-256 is the digest: t,v,k,lambda,b as 32-bit
/// big-endian words, then the block list as 16-bit big-endian point indices.
std::vector<unsigned char> canonical_encoding_bytes(const Params& p,
                                                    const std::vector<Block>& blocks);

std::string sha256_hex(const std::vector<unsigned char>& bytes);

/// Isomorphism-invariant canonical form, computed by minimizing the encoding
/// over every generating sequence (all choices of u_1, then all choices of
/// each next generator outside the current closure), individualization plus
/// refinement, and exhaustive in-cell branching with branch-and-bound.
/// Bit-identical output for any thread count.
CanonicalForm canonical_form(const Design& d, int threads = 1, CanonicalStats* stats = nullptr);

/// Witness point bijection d1 -> d2 when the canonical digests match, verified
/// to map blocks onto blocks before returning. Parameter mismatch -> absent.
std::optional<std::vector<Point>> are_isomorphic(const Design& d1, const Design& d2,
                                                 int threads = 1);

/// Independent exact oracle: backtracking over partial point maps with
/// block-compatibility pruning. Shares no code with canonical_form.
std::optional<std::vector<Point>> brute_force_iso(const Design& d1, const Design& d2);

struct LineGraphIsoCertificate {
    bool isomorphic{};
    ReconstructionResult reconstruction1;
    ReconstructionResult reconstruction2;
    std::optional<std::vector<Point>> point_map;  // design1 point -> design2 point
    std::optional<std::vector<int>> vertex_map;   // g1 vertex -> g2 vertex, edge-verified
};

/// The reconstruct-then-canonize pipeline: both graphs are reconstructed,
/// the designs compared canonically, and a vertex bijection induced by the
/// design isomorphism is emitted and verified edge-by-edge.
LineGraphIsoCertificate line_graph_isomorphic(const Graph& g1, const Graph& g2, int t, int k,
                                              int lambda, int threads = 1);

}  // namespace designiso
