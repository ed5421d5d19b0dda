#include "designiso/design.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace designiso {

namespace {

std::string block_to_string(const Block& b) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << "}";
    return os.str();
}

// Advances a strictly increasing index tuple over [0, n); false at the end.
bool next_combination(std::vector<int>& c, int n) {
    int s = static_cast<int>(c.size());
    for (int i = s - 1; i >= 0; --i) {
        if (c[i] < n - s + i) {
            ++c[i];
            for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

long long count_blocks_containing(const Design& d, const std::vector<int>& subset) {
    long long count = 0;
    for (const Block& b : d.blocks)
        if (std::includes(b.begin(), b.end(), subset.begin(), subset.end())) ++count;
    return count;
}

// Exact coverage check of all s-subsets against the expected value. Violations
// are capped so a broken design does not flood the report.
void check_coverage_exhaustive(const Design& d, int s, const BigInt& expected,
                               ValidationReport& report, const char* rule) {
    std::map<std::vector<int>, long long> counts;
    std::vector<int> idx(s);
    for (const Block& b : d.blocks) {
        for (int i = 0; i < s; ++i) idx[i] = i;
        std::vector<int> subset(s);
        do {
            for (int i = 0; i < s; ++i) subset[i] = b[idx[i]];
            ++counts[subset];
        } while (next_combination(idx, d.params.k));
    }
    int reported = 0;
    std::vector<int> subset(s);
    for (int i = 0; i < s; ++i) subset[i] = i;
    do {
        auto it = counts.find(subset);
        long long got = it == counts.end() ? 0 : it->second;
        if (BigInt(got) != expected) {
            if (reported < 50) {
                std::ostringstream os;
                os << s << "-subset covered " << got << " times, expected " << expected;
                report.add(rule, os.str(), block_to_string(subset));
            }
            ++reported;
        }
    } while (next_combination(subset, d.params.v));
    if (reported > 50)
        report.add(rule, std::to_string(reported - 50) + " further coverage violations omitted");
}

void check_coverage_sampled(const Design& d, int s, const BigInt& expected,
                            ValidationReport& report, const char* rule) {
    // Fixed seed so validation output is reproducible.
    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<int> points(d.params.v);
    for (int i = 0; i < d.params.v; ++i) points[i] = i;
    int reported = 0;
    for (int trial = 0; trial < 20000 && reported < 50; ++trial) {
        for (int i = 0; i < s; ++i) {
            std::uniform_int_distribution<int> pick(i, d.params.v - 1);
            std::swap(points[i], points[pick(rng)]);
        }
        std::vector<int> subset(points.begin(), points.begin() + s);
        std::sort(subset.begin(), subset.end());
        long long got = count_blocks_containing(d, subset);
        if (BigInt(got) != expected) {
            std::ostringstream os;
            os << s << "-subset covered " << got << " times, expected " << expected
               << " (sampled check)";
            report.add(rule, os.str(), block_to_string(subset));
            ++reported;
        }
    }
}

}  // namespace

Design normalized(Design d) {
    for (Block& b : d.blocks) std::sort(b.begin(), b.end());
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

ValidationReport validate(const Design& d) {
    ValidationReport report;
    try {
        check_params(d.params);
    } catch (const std::invalid_argument& e) {
        report.add("params", e.what());
        return report;
    }

    const int v = d.params.v, k = d.params.k, t = d.params.t;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const Block& b = d.blocks[i];
        if (static_cast<int>(b.size()) != k) {
            report.add("block-size",
                       "block " + std::to_string(i) + " has " + std::to_string(b.size()) +
                           " points, expected " + std::to_string(k),
                       block_to_string(b));
            continue;
        }
        for (int j = 0; j < k; ++j) {
            if (b[j] < 0 || b[j] >= v) {
                report.add("point-range",
                           "block " + std::to_string(i) + " contains out-of-range point " +
                               std::to_string(b[j]),
                           block_to_string(b));
                break;
            }
            if (j > 0 && b[j] <= b[j - 1]) {
                report.add("block-order",
                           "block " + std::to_string(i) + " is not strictly increasing",
                           block_to_string(b));
                break;
            }
        }
    }
    {
        std::set<Block> seen;
        for (const Block& b : d.blocks)
            if (!seen.insert(b).second)
                report.add("duplicate-block", "repeated blocks are not allowed",
                           block_to_string(b));
    }
    if (!report.ok()) return report;  // coverage checks need well-formed blocks

    // Defining condition: every t-subset lies in exactly lambda blocks.
    check_coverage_exhaustive(d, t, BigInt(d.params.lambda), report, "t-coverage");

    // Cross-check the derived lambda_s coverage for s < t.
    for (int s = 1; s < t; ++s) {
        BigRat ls = lambda_s(d.params, s);
        if (denominator(ls) != 1) {
            std::ostringstream os;
            os << "lambda_" << s << " = " << ls << " is not integral";
            report.add("lambda_s", os.str());
            continue;
        }
        if (binomial(v, s) <= 1000000)
            check_coverage_exhaustive(d, s, numerator(ls), report, "s-coverage");
        else
            check_coverage_sampled(d, s, numerator(ls), report, "s-coverage");
    }
    return report;
}

std::vector<Point> closure(const Design& d, const std::vector<Point>& seed) {
    std::vector<char> in(d.params.v, 0);
    for (Point p : seed) {
        if (p < 0 || p >= d.params.v) throw std::invalid_argument("closure seed point out of range");
        in[p] = 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Block& b : d.blocks) {
            int inside = 0;
            for (Point p : b) inside += in[p];
            if (inside >= d.params.t && inside < static_cast<int>(b.size())) {
                for (Point p : b) in[p] = 1;
                changed = true;
            }
        }
    }
    std::vector<Point> result;
    for (int p = 0; p < d.params.v; ++p)
        if (in[p]) result.push_back(p);
    return result;
}

ClosureChain generating_sequence(const Design& d, Point first) {
    if (first < 0 || first >= d.params.v)
        throw std::invalid_argument("first point out of range");
    ClosureChain chain;
    chain.generators.push_back(first);
    chain.fixpoints.push_back(closure(d, {first}));
    while (static_cast<int>(chain.fixpoints.back().size()) != d.params.v) {
        const std::vector<Point>& current = chain.fixpoints.back();
        Point next = -1;
        for (int p = 0; p < d.params.v; ++p) {
            if (!std::binary_search(current.begin(), current.end(), p)) {
                next = p;
                break;
            }
        }
        chain.generators.push_back(next);
        std::vector<Point> seed = current;
        seed.push_back(next);
        chain.fixpoints.push_back(closure(d, seed));
    }
    return chain;
}

bool kreher_rees_admissible(int v, int w, int t, int k) {
    if (w >= v) throw std::invalid_argument("requires w < v");
    if (t < 2) throw std::invalid_argument("requires t >= 2");
    if (t % 2 == 1) {
        if (v < 2 * w) return false;
    } else {
        if (v < 2 * w + 1) return false;
    }
    if (t == 2 && v < (k - 1) * w + 1) return false;
    return true;
}

Design induced_design(const Design& d, const std::vector<Point>& points) {
    std::vector<Point> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> index(d.params.v, -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);

    Design sub;
    sub.params = {d.params.t, static_cast<int>(sorted.size()), d.params.k, d.params.lambda};
    for (const Block& b : d.blocks) {
        bool inside = std::all_of(b.begin(), b.end(), [&](Point p) { return index[p] >= 0; });
        if (!inside) continue;
        Block relabeled(b.size());
        std::transform(b.begin(), b.end(), relabeled.begin(), [&](Point p) { return index[p]; });
        std::sort(relabeled.begin(), relabeled.end());
        sub.blocks.push_back(relabeled);
    }
    std::sort(sub.blocks.begin(), sub.blocks.end());
    return sub;
}

bool is_subdesign(const Design& sub, const Design& whole, const std::vector<Point>& embedding) {
    if (static_cast<int>(embedding.size()) != sub.params.v) return false;
    std::set<Point> image;
    for (Point p : embedding) {
        if (p < 0 || p >= whole.params.v) return false;
        if (!image.insert(p).second) throw std::invalid_argument("embedding must be injective");
    }
    if (sub.params.k != whole.params.k) return false;
    if (!validate(sub).ok()) return false;

    std::set<Block> whole_blocks(whole.blocks.begin(), whole.blocks.end());
    for (const Block& b : sub.blocks) {
        Block mapped(b.size());
        std::transform(b.begin(), b.end(), mapped.begin(), [&](Point p) { return embedding[p]; });
        std::sort(mapped.begin(), mapped.end());
        if (!whole_blocks.count(mapped)) return false;
    }
    return true;
}

}  // namespace designiso
