#pragma once

#include "designiso/params.hpp"

#include <vector>

namespace designiso {

using Point = int;
using Block = std::vector<Point>;

/// A point set {0..v-1} together with a duplicate-free list of k-element
/// blocks. Each block is stored as a strictly increasing tuple. Block order is
/// significant (line-graph vertices follow it); constructors normalize to
/// lexicographic order, reconstruction keeps vertex order.
struct Design {
    Params params;
    std::vector<Block> blocks;

    bool operator==(const Design&) const = default;
};

/// Sorts points within each block and the blocks lexicographically.
Design normalized(Design d);

/// Full validation: parameter sanity, block shape, duplicate-freeness, exact
/// lambda coverage of every t-subset, and lambda_s cross-checks for s < t
/// (exhaustive when C(v,s) <= 10^6, otherwise sampled with a fixed seed).
ValidationReport validate(const Design& d);

/// Least fixpoint of Y -> Y + points of every block meeting Y in >= t points.
/// Seeds with fewer than t points are legal; the fixpoint may be the seed.
std::vector<Point> closure(const Design& d, const std::vector<Point>& seed);

/// Generators together with the chain of closure fixpoints they produce.
struct ClosureChain {
    std::vector<Point> generators;
    std::vector<std::vector<Point>> fixpoints;  // one per generator; last = all points
};

/// Greedy generating sequence: start from `first`, repeatedly append the
/// smallest point outside the current closure until the closure is the whole
/// point set.
ClosureChain generating_sequence(const Design& d, Point first);

/// Kreher--Rees style necessary condition for a proper t-(w,k,lambda)
/// subdesign inside a t-(v,k,lambda) design: v >= 2w for odd t, v >= 2w+1 for
/// even t, and additionally v >= (k-1)w + 1 when t = 2.
bool kreher_rees_admissible(int v, int w, int t, int k);

/// The substructure of `d` induced on `points` (blocks entirely inside,
/// relabeled by position in the sorted point list).
Design induced_design(const Design& d, const std::vector<Point>& points);

/// True iff `embedding` (sub point -> whole point, injective) maps every block
/// of `sub` onto a block of `whole` and `sub` itself validates.
bool is_subdesign(const Design& sub, const Design& whole, const std::vector<Point>& embedding);

}  // namespace designiso
