#pragma once

#include "designiso/design.hpp"

#include <cstdint>
#include <optional>

namespace designiso {

/// The 2-(7,3,1) design (Fano plane). Its line graph is K7.
Design fano();

/// Boolean SQS(2^d): points 0..2^d-1 as vectors of GF(2)^d, blocks all
/// 4-subsets with XOR zero. A 3-(2^d,4,1) design; requires d >= 3.
Design boolean_sqs(int d);

/// Steiner triple system 2-(v,3,1) via the Bose construction (v = 3 mod 6) or
/// the Skolem construction (v = 1 mod 6). Requires v >= 7 admissible.
Design sts(int v);

/// All C(v,k) k-subsets; a t-(v, k, C(v-t,k-t)) design. Refuses C(v,k) > 10^7.
Design complete_design(int v, int k, int t);

/// Relabels points by `perm` (old point -> new point) and renormalizes.
Design relabel_design(const Design& d, const std::vector<Point>& perm);

/// Applies a seeded pseudorandom point permutation. The permutation is drawn
/// with std::mt19937_64(seed) and Fisher-Yates (j = rng() % (i+1), i = v-1..1),
/// so corpora reproduce bit-for-bit.
Design scramble(const Design& d, std::uint64_t seed);

/// Finds the first Pasch configuration (in lexicographic order of block index
/// quadruples) of a 2-(v,3,1) design and replaces it by the complementary
/// quadruple on the same six points. Absent when the system is Pasch-free.
std::optional<Design> pasch_switch(const Design& d);

}  // namespace designiso
