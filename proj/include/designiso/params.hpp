#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace designiso {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Parameter quadruple of a t-(v,k,lambda) design.
struct Params {
    int t{};
    int v{};
    int k{};
    int lambda{};

    bool nontrivial() const { return t < k && k < v; }
    bool operator==(const Params&) const = default;
};

/// Throws std::invalid_argument unless 1 <= t <= k <= v and lambda >= 1.
void check_params(const Params& p);

/// Exact binomial coefficient C(n, r); zero when r < 0 or r > n.
BigInt binomial(long long n, long long r);

/// Number of blocks through a fixed s-subset: lambda * C(v-s,t-s) / C(k-s,t-s),
/// as an exact rational. Integral exactly when the parameters are admissible at
/// level s. Throws std::out_of_range unless 0 <= s <= t.
BigRat lambda_s(const Params& p, int s);

struct DerivedCounts {
    BigInt b;                        // block count (= lambda_0)
    BigInt r;                        // replication number (= lambda_1)
    std::vector<BigInt> lambda_s;    // s = 0..t
};

/// Computes b, r and the full lambda_s table. Throws std::domain_error when
/// some lambda_s is non-integral (inadmissible parameters).
DerivedCounts derived_counts(const Params& p);

struct Violation {
    std::string rule;
    std::string detail;
    std::string witness;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string rule, std::string detail, std::string witness = {});
};

/// Necessary existence conditions: the divisibility conditions for all
/// 1 <= s <= t, plus Hanani's congruence v = 2, 4 (mod 6) for SQS parameters.
ValidationReport check_admissibility(const Params& p);

/// Ray-Chaudhuri--Wilson lower bound on the number of blocks.
/// t = 2s even, v >= k+s  ->  C(v,s); t = 2s+1 odd, v-1 >= k+s  ->  2*C(v-1,s);
/// otherwise not applicable.
std::optional<BigInt> fisher_lower_bound(const Params& p);

}  // namespace designiso
