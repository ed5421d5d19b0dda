#include "designiso/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace designiso {

int solve_v(long long b, int t, int k, int lambda) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
    const BigInt target = BigInt(b) * binomial(k, t);
    for (int v = k;; ++v) {
        BigInt lhs = BigInt(lambda) * binomial(v, t);
        if (lhs == target) return v;
        if (lhs > target) {
            std::ostringstream os;
            os << "no integer v with C(v," << t << ")*" << lambda << " = " << b << "*C(" << k
               << "," << t << "); the graph cannot be a line graph of such a design";
            throw ReconstructionError(os.str());
        }
    }
}

BigInt rands_f(int k, int t, int s) {
    if (!(0 < s && s < t && t <= k)) throw std::out_of_range("rands_f requires 0 < s < t <= k");
    if (s < t - 1) return s + binomial(k, s) * (k - s + 1) * (k - s);
    return s + (k - s) * binomial(k, s) * binomial(k, s);
}

namespace {

using Bitset = boost::dynamic_bitset<>;

struct CliqueCollector {
    const Graph& g;
    int min_size;
    std::vector<std::vector<int>>& out;

    void expand(Bitset& r, Bitset& p, Bitset& x) {
        if (p.none() && x.none()) {
            if (static_cast<int>(r.count()) >= min_size) {
                std::vector<int> clique;
                for (auto i = r.find_first(); i != Bitset::npos; i = r.find_next(i))
                    clique.push_back(static_cast<int>(i));
                out.push_back(std::move(clique));
            }
            return;
        }
        if (static_cast<int>(r.count() + p.count()) < min_size) return;

        // pivot: vertex of P|X with most neighbors in P
        Bitset px = p | x;
        std::size_t best = 0;
        auto pivot = px.find_first();
        for (auto u = px.find_first(); u != Bitset::npos; u = px.find_next(u)) {
            std::size_t score = (p & g.adj[u]).count();
            if (score > best) {
                best = score;
                pivot = u;
            }
        }
        Bitset candidates = p & ~g.adj[pivot];
        for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
            Bitset r2 = r;
            r2.set(v);
            Bitset p2 = p & g.adj[v];
            Bitset x2 = x & g.adj[v];
            expand(r2, p2, x2);
            p.reset(v);
            x.set(v);
        }
    }
};

bool is_clique(const Graph& g, const Bitset& members) {
    const std::size_t size = members.count();
    for (auto m = members.find_first(); m != Bitset::npos; m = members.find_next(m))
        if ((g.adj[m] & members).count() != size - 1) return false;
    return true;
}

}  // namespace

std::vector<std::vector<int>> max_cliques_at_least(const Graph& g, int min_size) {
    std::vector<std::vector<int>> out;
    Bitset r(g.n), p(g.n), x(g.n);
    p.set();
    CliqueCollector collector{g, min_size, out};
    collector.expand(r, p, x);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> point_cliques(const Graph& g, int r, int v) {
    if (g.n < 2) throw std::invalid_argument("point_cliques requires at least 2 vertices");
    if (r < 2) throw std::invalid_argument("point_cliques requires r >= 2");

    // Phase 1: peel the closed common neighborhood of each edge down to a
    // clique by repeatedly removing the member with most non-neighbors inside
    // (tie: highest index).
    std::set<std::vector<int>> found;
    for (int i = 0; i < g.n; ++i) {
        for (auto j = g.adj[i].find_next(i); j != Bitset::npos; j = g.adj[i].find_next(j)) {
            Bitset members = g.adj[i] & g.adj[j];
            members.set(i);
            members.set(j);
            while (!is_clique(g, members)) {
                const std::size_t size = members.count();
                int worst = -1;
                std::size_t worst_nonneighbors = 0;
                for (auto m = members.find_first(); m != Bitset::npos;
                     m = members.find_next(m)) {
                    std::size_t nonneighbors = size - 1 - (g.adj[m] & members).count();
                    if (nonneighbors >= worst_nonneighbors) {
                        worst_nonneighbors = nonneighbors;
                        worst = static_cast<int>(m);
                    }
                }
                members.reset(worst);
            }
            if (static_cast<int>(members.count()) == r) {
                std::vector<int> clique;
                for (auto m = members.find_first(); m != Bitset::npos; m = members.find_next(m))
                    clique.push_back(static_cast<int>(m));
                found.insert(std::move(clique));
            }
        }
    }

    if (static_cast<int>(found.size()) != v) {
        // Phase 2: exact enumeration.
        auto cliques = max_cliques_at_least(g, r);
        int max_size = 0;
        for (const auto& c : cliques) max_size = std::max(max_size, static_cast<int>(c.size()));
        std::vector<std::vector<int>> of_size_r;
        for (auto& c : cliques)
            if (static_cast<int>(c.size()) == r) of_size_r.push_back(std::move(c));
        if (max_size > r || static_cast<int>(of_size_r.size()) != v) {
            std::ostringstream os;
            os << "expected " << v << " maximum cliques of size " << r << ", found "
               << of_size_r.size() << " of size " << r;
            if (max_size > r) os << " plus larger cliques of size up to " << max_size;
            os << "; the graph is not a valid line graph for these parameters";
            throw ReconstructionError(os.str());
        }
        return of_size_r;
    }
    return {found.begin(), found.end()};
}

ReconstructionResult reconstruct(const Graph& g, int t, int k, int lambda,
                                 bool force_past_gate) {
    const int b = g.n;
    if (!force_past_gate && b <= k * k * (k - 1)) {
        std::ostringstream os;
        os << "reconstruction refused: b = " << b << " <= k^2(k-1) = " << k * k * (k - 1)
           << "; the maximum cliques need not correspond to points";
        throw ReconstructionError(os.str());
    }
    const int v = solve_v(b, t, k, lambda);
    Params params{t, v, k, lambda};
    DerivedCounts counts = derived_counts(params);  // throws when lambda_s non-integral
    const int r = static_cast<int>(counts.r);

    ReconstructionResult result;
    if (BigInt(v) < rands_f(k, t, 1)) {
        std::ostringstream os;
        os << "v = " << v << " < f(k,t,1) = " << rands_f(k, t, 1)
           << ": Rands' uniqueness bound does not formally apply; relying on the certificate";
        result.warnings.push_back(os.str());
    }
    if (t == 2 && lambda == 1) {
        // Spielman's sharper necessary condition, advisory only.
        long long rhs = (static_cast<long long>(k - 1) * (k - 1) + 2);
        if (static_cast<long long>(b) <= rhs * rhs) {
            std::ostringstream os;
            os << "advisory: sqrt(b)-2 > (k-1)^2 fails (b = " << b << ")";
            result.warnings.push_back(os.str());
        }
    }

    result.cliques = point_cliques(g, r, v);

    // Block per vertex: p in B iff vertex B lies in the clique of p.
    Design design;
    design.params = params;
    design.blocks.assign(b, Block{});
    for (int p = 0; p < v; ++p)
        for (int vertex : result.cliques[p]) design.blocks[vertex].push_back(p);
    for (const Block& blk : design.blocks)
        if (static_cast<int>(blk.size()) != k)
            throw ReconstructionError("a vertex lies in " + std::to_string(blk.size()) +
                                      " recovered cliques, expected k = " + std::to_string(k));
    result.design = std::move(design);
    result.report = validate(result.design);
    result.line_graph_equal = line_graph(result.design) == g;
    return result;
}

}  // namespace designiso
