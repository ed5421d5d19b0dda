#include "designiso/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace designiso {

Design fano() {
    Design d;
    d.params = {2, 7, 3, 1};
    d.blocks = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    return d;
}

Design boolean_sqs(int d) {
    if (d < 3) throw std::invalid_argument("boolean_sqs requires d >= 3");
    const int v = 1 << d;
    Design out;
    out.params = {3, v, 4, 1};
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int c = b + 1; c < v; ++c) {
                int e = a ^ b ^ c;
                if (e > c) out.blocks.push_back({a, b, c, e});
            }
    return out;  // already lexicographic by generation order
}

namespace {

Design sts_bose(int v) {
    const int n = (v - 3) / 6;
    const int m = 2 * n + 1;
    auto idx = [m](int i, int cls) { return cls * m + i; };
    const int half = n + 1;  // inverse of 2 mod m

    Design d;
    d.params = {2, v, 3, 1};
    for (int i = 0; i < m; ++i) d.blocks.push_back({idx(i, 0), idx(i, 1), idx(i, 2)});
    for (int cls = 0; cls < 3; ++cls)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                int h = static_cast<int>((static_cast<long long>(i + j) * half) % m);
                Block b = {idx(i, cls), idx(j, cls), idx(h, (cls + 1) % 3)};
                std::sort(b.begin(), b.end());
                d.blocks.push_back(b);
            }
    return normalized(std::move(d));
}

Design sts_skolem(int v) {
    const int n = (v - 1) / 6;
    const int m = 2 * n;
    const int infinity = 6 * n;
    auto idx = [m](int i, int cls) { return cls * m + i; };
    // Half-idempotent commutative quasigroup on Z_{2n}.
    auto qmul = [n, m](int i, int j) {
        int e = (i + j) % m;
        return e % 2 == 0 ? e / 2 : n + (e - 1) / 2;
    };

    Design d;
    d.params = {2, v, 3, 1};
    for (int i = 0; i < n; ++i) d.blocks.push_back({idx(i, 0), idx(i, 1), idx(i, 2)});
    for (int i = 0; i < n; ++i)
        for (int cls = 0; cls < 3; ++cls) {
            Block b = {infinity, idx(n + i, cls), idx(i, (cls + 1) % 3)};
            std::sort(b.begin(), b.end());
            d.blocks.push_back(b);
        }
    for (int cls = 0; cls < 3; ++cls)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                Block b = {idx(i, cls), idx(j, cls), idx(qmul(i, j), (cls + 1) % 3)};
                std::sort(b.begin(), b.end());
                d.blocks.push_back(b);
            }
    return normalized(std::move(d));
}

}  // namespace

Design sts(int v) {
    if (v < 7 || (v % 6 != 1 && v % 6 != 3))
        throw std::invalid_argument("STS(v) requires v = 1 or 3 (mod 6), v >= 7; got v=" +
                                    std::to_string(v));
    return v % 6 == 3 ? sts_bose(v) : sts_skolem(v);
}

Design complete_design(int v, int k, int t) {
    Params p{t, v, k, 1};
    check_params(p);
    if (binomial(v, k) > 10000000)
        throw std::invalid_argument("complete_design refused: C(v,k) exceeds 10^7");
    p.lambda = static_cast<int>(binomial(v - t, k - t));

    Design d;
    d.params = p;
    Block b(k);
    for (int i = 0; i < k; ++i) b[i] = i;
    while (true) {
        d.blocks.push_back(b);
        int i = k - 1;
        while (i >= 0 && b[i] == v - k + i) --i;
        if (i < 0) break;
        ++b[i];
        for (int j = i + 1; j < k; ++j) b[j] = b[j - 1] + 1;
    }
    return d;
}

Design relabel_design(const Design& d, const std::vector<Point>& perm) {
    if (static_cast<int>(perm.size()) != d.params.v)
        throw std::invalid_argument("permutation size must equal v");
    Design out;
    out.params = d.params;
    out.blocks.reserve(d.blocks.size());
    for (const Block& b : d.blocks) {
        Block mapped(b.size());
        std::transform(b.begin(), b.end(), mapped.begin(), [&](Point p) { return perm[p]; });
        out.blocks.push_back(std::move(mapped));
    }
    return normalized(std::move(out));
}

Design scramble(const Design& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Point> perm(d.params.v);
    for (int i = 0; i < d.params.v; ++i) perm[i] = i;
    for (int i = d.params.v - 1; i >= 1; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return relabel_design(d, perm);
}

std::optional<Design> pasch_switch(const Design& d) {
    if (d.params.t != 2 || d.params.k != 3 || d.params.lambda != 1)
        throw std::invalid_argument("pasch_switch requires a 2-(v,3,1) design");

    const int b = static_cast<int>(d.blocks.size());
    auto try_quadruple = [&](int p, int q, int r, int s) -> std::optional<Design> {
        const Block* quad[4] = {&d.blocks[p], &d.blocks[q], &d.blocks[r], &d.blocks[s]};
        std::vector<Point> pts;
        for (auto* blk : quad) pts.insert(pts.end(), blk->begin(), blk->end());
        std::sort(pts.begin(), pts.end());
        // Pasch shape: six points, each on exactly two of the four blocks.
        std::vector<Point> uniq = pts;
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        if (uniq.size() != 6) return std::nullopt;
        for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
            if (pts[i] != pts[i + 1]) return std::nullopt;
        for (std::size_t i = 2; i < pts.size(); i += 2)
            if (pts[i] == pts[i - 1]) return std::nullopt;

        std::set<std::pair<Point, Point>> covered;
        for (auto* blk : quad) {
            const Block& bb = *blk;
            covered.insert({bb[0], bb[1]});
            covered.insert({bb[0], bb[2]});
            covered.insert({bb[1], bb[2]});
        }
        if (covered.size() != 12) return std::nullopt;

        // The complementary quadruple: the unique other set of four triples on
        // these six points covering the same twelve pairs exactly once.
        std::vector<Block> triples;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                for (int l = j + 1; l < 6; ++l) triples.push_back({uniq[i], uniq[j], uniq[l]});
        std::set<Block> original(
            {*quad[0], *quad[1], *quad[2], *quad[3]});
        const int nt = static_cast<int>(triples.size());
        for (int a = 0; a < nt; ++a)
            for (int bi = a + 1; bi < nt; ++bi)
                for (int c = bi + 1; c < nt; ++c)
                    for (int e = c + 1; e < nt; ++e) {
                        const Block* cand[4] = {&triples[a], &triples[bi], &triples[c],
                                                &triples[e]};
                        if (std::any_of(cand, cand + 4,
                                        [&](const Block* t3) { return original.count(*t3); }))
                            continue;
                        std::set<std::pair<Point, Point>> pairs;
                        for (auto* t3 : cand) {
                            pairs.insert({(*t3)[0], (*t3)[1]});
                            pairs.insert({(*t3)[0], (*t3)[2]});
                            pairs.insert({(*t3)[1], (*t3)[2]});
                        }
                        if (pairs != covered) continue;
                        Design out;
                        out.params = d.params;
                        std::set<int> removed = {p, q, r, s};
                        for (int i = 0; i < b; ++i)
                            if (!removed.count(i)) out.blocks.push_back(d.blocks[i]);
                        for (auto* t3 : cand) out.blocks.push_back(*t3);
                        return normalized(std::move(out));
                    }
        return std::nullopt;
    };

    for (int p = 0; p < b; ++p)
        for (int q = p + 1; q < b; ++q) {
            // Blocks of a Pasch configuration pairwise meet in one point.
            if (std::find_first_of(d.blocks[p].begin(), d.blocks[p].end(), d.blocks[q].begin(),
                                   d.blocks[q].end()) == d.blocks[p].end())
                continue;
            for (int r = q + 1; r < b; ++r)
                for (int s = r + 1; s < b; ++s)
                    if (auto result = try_quadruple(p, q, r, s)) return result;
        }
    return std::nullopt;
}

}  // namespace designiso
