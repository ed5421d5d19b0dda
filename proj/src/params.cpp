#include "designiso/params.hpp"

#include <sstream>
#include <stdexcept>

namespace designiso {

void ValidationReport::add(std::string rule, std::string detail, std::string witness) {
    violations.push_back({std::move(rule), std::move(detail), std::move(witness)});
}

void check_params(const Params& p) {
    if (!(1 <= p.t && p.t <= p.k && p.k <= p.v)) {
        std::ostringstream os;
        os << "parameters must satisfy 1 <= t <= k <= v, got t=" << p.t << " k=" << p.k
           << " v=" << p.v;
        throw std::invalid_argument(os.str());
    }
    if (p.lambda < 1) throw std::invalid_argument("lambda must be >= 1");
}

BigInt binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

BigRat lambda_s(const Params& p, int s) {
    check_params(p);
    if (s < 0 || s > p.t) throw std::out_of_range("lambda_s requires 0 <= s <= t");
    return BigRat(p.lambda * binomial(p.v - s, p.t - s), binomial(p.k - s, p.t - s));
}

DerivedCounts derived_counts(const Params& p) {
    check_params(p);
    DerivedCounts out;
    out.lambda_s.reserve(p.t + 1);
    for (int s = 0; s <= p.t; ++s) {
        BigRat ls = lambda_s(p, s);
        if (denominator(ls) != 1) {
            std::ostringstream os;
            os << "lambda_" << s << " = " << ls << " is not an integer; parameters inadmissible";
            throw std::domain_error(os.str());
        }
        out.lambda_s.push_back(numerator(ls));
    }
    out.b = out.lambda_s[0];
    out.r = out.lambda_s[1];

    // Sanity identities; these are theorems for integral lambda_s tables.
    if (out.b * p.k != BigInt(p.v) * out.r)
        throw std::logic_error("identity bk = vr failed");
    if (binomial(p.v, p.t) * p.lambda != out.b * binomial(p.k, p.t))
        throw std::logic_error("identity C(v,t) lambda = b C(k,t) failed");
    if (p.t >= 2 && out.r * (p.k - 1) != out.lambda_s[2] * (p.v - 1))
        throw std::logic_error("identity r(k-1) = lambda_2 (v-1) failed");
    return out;
}

ValidationReport check_admissibility(const Params& p) {
    ValidationReport report;
    try {
        check_params(p);
    } catch (const std::invalid_argument& e) {
        report.add("params", e.what());
        return report;
    }
    for (int s = 1; s <= p.t; ++s) {
        BigRat ls = lambda_s(p, s);
        if (denominator(ls) != 1) {
            std::ostringstream os;
            os << "lambda_" << s << " = " << ls;
            report.add("divisibility", os.str(), "s=" + std::to_string(s));
        }
    }
    if (p.t == 3 && p.k == 4 && p.lambda == 1) {
        int m = p.v % 6;
        if (m != 2 && m != 4) {
            std::ostringstream os;
            os << "SQS(" << p.v << ") requires v = 2 or 4 (mod 6), got v mod 6 = " << m;
            report.add("hanani", os.str(), "v=" + std::to_string(p.v));
        }
    }
    return report;
}

std::optional<BigInt> fisher_lower_bound(const Params& p) {
    check_params(p);
    if (p.t % 2 == 0) {
        int s = p.t / 2;
        if (p.v >= p.k + s) return binomial(p.v, s);
    } else {
        int s = (p.t - 1) / 2;
        if (p.v - 1 >= p.k + s) return 2 * binomial(p.v - 1, s);
    }
    return std::nullopt;
}

}  // namespace designiso
