#include "designiso/constructions.hpp"
#include "designiso/reconstruct.hpp"

#include <doctest.h>

#include <set>

using namespace designiso;

TEST_SUITE("reconstruct") {
    TEST_CASE("solve_v") {
        CHECK(solve_v(7, 2, 3, 1) == 7);
        CHECK(solve_v(140, 3, 4, 1) == 16);
        CHECK(solve_v(26, 2, 3, 1) == 13);
        CHECK_THROWS_AS(solve_v(8, 2, 3, 1), ReconstructionError);  // C(v,2)=24 impossible
    }

    TEST_CASE("rands_f") {
        CHECK(rands_f(3, 2, 1) == 19);   // s = t-1 branch: 1 + 2*3^2
        CHECK(rands_f(4, 3, 1) == 49);   // s < t-1 branch: 1 + 4*4*3
        CHECK(rands_f(4, 3, 2) == 74);   // 2 + 2*C(4,2)^2
        CHECK_THROWS_AS(rands_f(4, 3, 0), std::out_of_range);
        CHECK_THROWS_AS(rands_f(4, 3, 3), std::out_of_range);
    }

    TEST_CASE("rands_f(k,t,1) equals 1 + k^2(k-1) throughout the bounded range") {
        for (int k = 2; k <= 12; ++k)
            for (int t = 2; t <= k; ++t)
                CHECK(rands_f(k, t, 1) == 1 + BigInt(k) * k * (k - 1));
    }

    TEST_CASE("point cliques of STS(13): 13 cliques of size 6") {
        Design d = sts(13);
        auto cliques = point_cliques(line_graph(d), 6, 13);
        REQUIRE(cliques.size() == 13);
        for (const auto& c : cliques) CHECK(c.size() == 6);
        // each vertex in exactly k = 3 cliques
        std::vector<int> membership(26, 0);
        for (const auto& c : cliques)
            for (int vertex : c) ++membership[vertex];
        for (int m : membership) CHECK(m == 3);
    }

    TEST_CASE("SQS(8) cocktail-party graph has 128 maximum cliques, not 8") {
        Graph g = line_graph(boolean_sqs(3));
        auto cliques = max_cliques_at_least(g, 7);
        CHECK(cliques.size() == 128);
        for (const auto& c : cliques) CHECK(c.size() == 7);
        CHECK_THROWS_WITH_AS(point_cliques(g, 7, 8), doctest::Contains("128"),
                             ReconstructionError);
    }

    TEST_CASE("round trip for STS(13)") {
        Design d = sts(13);
        Graph g = line_graph(d);
        ReconstructionResult result = reconstruct(g, 2, 3, 1);
        CHECK(result.certified());
        CHECK(result.report.ok());
        CHECK(line_graph(result.design) == g);
        CHECK(result.design.params == d.params);
        // recovered cliques: size r, pairwise intersections bounded by lambda_2 = 1
        for (const auto& c : result.cliques) CHECK(c.size() == 6);
        for (std::size_t i = 0; i < result.cliques.size(); ++i)
            for (std::size_t j = i + 1; j < result.cliques.size(); ++j) {
                std::vector<int> common;
                std::set_intersection(result.cliques[i].begin(), result.cliques[i].end(),
                                      result.cliques[j].begin(), result.cliques[j].end(),
                                      std::back_inserter(common));
                CHECK(common.size() <= 1);
            }
    }

    TEST_CASE("round trip for boolean SQS(16)") {
        Design d = boolean_sqs(4);
        Graph g = line_graph(d);
        ReconstructionResult result = reconstruct(g, 3, 4, 1);
        CHECK(result.certified());
        CHECK(result.design.params == Params{3, 16, 4, 1});
        CHECK(line_graph(result.design) == g);
        // v = 16 < f(4,3,1) = 49: the Rands gap must surface as a warning
        CHECK_FALSE(result.warnings.empty());
    }

    TEST_CASE("refusals at the b-gate") {
        CHECK_THROWS_WITH_AS(reconstruct(line_graph(fano()), 2, 3, 1),
                             doctest::Contains("k^2(k-1)"), ReconstructionError);
        CHECK_THROWS_WITH_AS(reconstruct(line_graph(boolean_sqs(3)), 3, 4, 1),
                             doctest::Contains("k^2(k-1)"), ReconstructionError);
    }

    TEST_CASE("forcing past the gate fails on the clique count, not silently") {
        CHECK_THROWS_AS(reconstruct(line_graph(boolean_sqs(3)), 3, 4, 1, true),
                        ReconstructionError);
    }
}
