#include "designiso/canonical.hpp"
#include "designiso/constructions.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

using namespace designiso;

namespace {

unsigned long long sequence_bound(int v) {
    int exponent = static_cast<int>(std::floor(1.0 + std::log2(static_cast<double>(v))));
    unsigned long long bound = 1;
    for (int i = 0; i < exponent; ++i) bound *= static_cast<unsigned long long>(v);
    return bound;
}

}  // namespace

TEST_SUITE("refinement") {
    TEST_CASE("fano is point-transitive: unit coloring is stable") {
        Coloring c = refine(fano(), unit_coloring(7));
        CHECK(c.cells.size() == 1);
        CHECK(c.cells[0].size() == 7);
    }

    TEST_CASE("refinement is stable and reproducible after individualization") {
        Design d = fano();
        Coloring start;
        start.cells = {{0}, {1, 2, 3, 4, 5, 6}};
        Coloring once = refine(d, start);
        CHECK(refine(d, once) == once);
        CHECK(refine(d, start) == once);
    }

    TEST_CASE("refinement terminates on an invalid structure") {
        Design d = fano();
        d.blocks.pop_back();  // no longer a design
        Coloring c = refine(d, unit_coloring(7));
        CHECK(refine(d, c) == c);
    }
}

TEST_SUITE("canonical form") {
    TEST_CASE("invariant under scrambling: Fano") {
        CanonicalForm base = canonical_form(fano());
        for (std::uint64_t seed : {1, 2, 3, 40, 500}) {
            CanonicalForm other = canonical_form(scramble(fano(), seed));
            CHECK(other.digest == base.digest);
            CHECK(other.canonical_blocks == base.canonical_blocks);
        }
    }

    TEST_CASE("invariant under scrambling: boolean SQS(8)") {
        CanonicalForm base = canonical_form(boolean_sqs(3));
        for (std::uint64_t seed : {11, 12, 13}) {
            CHECK(canonical_form(scramble(boolean_sqs(3), seed)).digest == base.digest);
        }
    }

    TEST_CASE("complete design canonizes to the identity relabeling") {
        Design d = complete_design(5, 3, 2);
        CanonicalForm form = canonical_form(d);
        std::vector<Point> identity(5);
        std::iota(identity.begin(), identity.end(), 0);
        CHECK(form.relabeling == identity);
        CHECK(form.canonical_blocks == d.blocks);
    }

    TEST_CASE("explored sequences respect the v^(1+log2 v) envelope") {
        for (const Design& d : {fano(), sts(9), boolean_sqs(3), complete_design(6, 3, 2)}) {
            CanonicalStats stats;
            canonical_form(d, 1, &stats);
            CHECK(stats.sequences_explored > 0);
            CHECK(stats.sequences_explored <= sequence_bound(d.params.v));
        }
    }

    TEST_CASE("bit-identical across worker counts") {
        Design d = scramble(sts(13), 99);
        CanonicalForm one = canonical_form(d, 1);
        CanonicalForm four = canonical_form(d, 4);
        CHECK(one.digest == four.digest);
        CHECK(one.relabeling == four.relabeling);
        CHECK(one.canonical_blocks == four.canonical_blocks);
    }

    TEST_CASE("invalid designs are rejected") {
        Design d = fano();
        d.blocks.pop_back();
        CHECK_THROWS_AS(canonical_form(d), std::invalid_argument);
    }

    TEST_CASE("digest distinguishes distinct classes") {
        CHECK(canonical_form(sts(9)).digest != canonical_form(sts(13)).digest);
        CHECK(canonical_form(fano()).digest != canonical_form(sts(9)).digest);
    }
}

TEST_SUITE("isomorphism") {
    TEST_CASE("fano vs scrambled fano, with verified witness") {
        Design d1 = fano();
        Design d2 = scramble(fano(), 123);
        auto witness = are_isomorphic(d1, d2);
        REQUIRE(witness.has_value());
        // spot-verify the witness maps blocks to blocks
        std::set<Block> blocks2(d2.blocks.begin(), d2.blocks.end());
        for (const Block& b : d1.blocks) {
            Block mapped;
            for (Point p : b) mapped.push_back((*witness)[p]);
            std::sort(mapped.begin(), mapped.end());
            CHECK(blocks2.count(mapped) == 1);
        }
    }

    TEST_CASE("different v short-circuits") {
        CHECK_FALSE(are_isomorphic(sts(13), sts(15)).has_value());
    }

    TEST_CASE("brute force oracle") {
        // explicit isomorphism: Fano with points reversed
        Design reversed = relabel_design(fano(), {6, 5, 4, 3, 2, 1, 0});
        CHECK(brute_force_iso(fano(), reversed).has_value());

        Design smaller = fano();
        smaller.blocks.pop_back();
        CHECK_FALSE(brute_force_iso(smaller, fano()).has_value());  // block counts differ

        // all scrambles of the unique SQS(8) are isomorphic
        for (std::uint64_t seed : {5, 6}) {
            auto w = brute_force_iso(scramble(boolean_sqs(3), seed),
                                     scramble(boolean_sqs(3), seed + 100));
            CHECK(w.has_value());
        }
    }

    TEST_CASE("oracle agreement on mixed pairs") {
        std::vector<Design> designs = {fano(), scramble(fano(), 1), sts(9), scramble(sts(9), 2),
                                       boolean_sqs(3)};
        for (std::size_t i = 0; i < designs.size(); ++i)
            for (std::size_t j = i + 1; j < designs.size(); ++j) {
                bool canonical_answer = are_isomorphic(designs[i], designs[j]).has_value();
                bool oracle_answer = brute_force_iso(designs[i], designs[j]).has_value();
                CHECK(canonical_answer == oracle_answer);
            }
    }

    TEST_CASE("pasch switch of sts(13): engine agrees with the oracle") {
        Design a = sts(13);
        Design b = *pasch_switch(a);
        bool engine = are_isomorphic(a, b).has_value();
        bool oracle = brute_force_iso(a, b).has_value();
        CHECK(engine == oracle);
    }
}

TEST_SUITE("line graph isomorphism pipeline") {
    TEST_CASE("scrambled STS(13) line graphs are isomorphic with verified vertex map") {
        Graph g1 = line_graph(sts(13));
        Graph g2 = line_graph(scramble(sts(13), 77));
        LineGraphIsoCertificate cert = line_graph_isomorphic(g1, g2, 2, 3, 1);
        CHECK(cert.isomorphic);
        REQUIRE(cert.vertex_map.has_value());
        for (int i = 0; i < g1.n; ++i)
            for (int j = i + 1; j < g1.n; ++j)
                CHECK(g1.adjacent(i, j) ==
                      g2.adjacent((*cert.vertex_map)[i], (*cert.vertex_map)[j]));
    }

    TEST_CASE("identity case") {
        Graph g = line_graph(sts(13));
        LineGraphIsoCertificate cert = line_graph_isomorphic(g, g, 2, 3, 1);
        CHECK(cert.isomorphic);
    }

    TEST_CASE("refusal propagates for small graphs") {
        Graph g = line_graph(fano());
        CHECK_THROWS_AS(line_graph_isomorphic(g, g, 2, 3, 1), ReconstructionError);
    }
}
