#include "designiso/constructions.hpp"
#include "designiso/graph.hpp"

#include <doctest.h>

using namespace designiso;

TEST_SUITE("line graph") {
    TEST_CASE("fano gives K7") {
        Graph g = line_graph(fano());
        CHECK(g.n == 7);
        CHECK(g.edge_count() == 21);
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) CHECK(g.adjacent(i, j));
    }

    TEST_CASE("SQS(8): complement is the perfect matching of complementary blocks") {
        Design d = boolean_sqs(3);
        Graph g = line_graph(d);
        CHECK(g.n == 14);
        for (int i = 0; i < g.n; ++i) CHECK(g.degree(i) == 12);
        // the unique non-neighbor of a block is its complementary 4-set
        for (int i = 0; i < g.n; ++i) {
            int non_neighbor = -1;
            for (int j = 0; j < g.n; ++j)
                if (j != i && !g.adjacent(i, j)) non_neighbor = j;
            REQUIRE(non_neighbor >= 0);
            std::vector<char> covered(8, 0);
            for (Point p : d.blocks[i]) covered[p] = 1;
            for (Point p : d.blocks[non_neighbor]) covered[p] = 1;
            CHECK(std::count(covered.begin(), covered.end(), 1) == 8);
        }
    }

    TEST_CASE("single block design gives an isolated vertex") {
        Graph g = line_graph(complete_design(4, 4, 2));
        CHECK(g.n == 1);
        CHECK(g.edge_count() == 0);
    }

    TEST_CASE("edge count of Steiner 2-design line graphs is v*C(r,2)") {
        for (int v : {7, 9, 13, 15, 19, 21}) {
            Design d = sts(v);
            int r = (v - 1) / 2;
            Graph g = line_graph(d);
            CHECK(g.edge_count() == static_cast<std::size_t>(v) * r * (r - 1) / 2);
        }
    }

    TEST_CASE("strongly regular checks") {
        // AG(2,3) line graph = complete 4-partite on parts of size 3
        CHECK(strongly_regular_check(line_graph(sts(9))) == SrgParams{9, 6, 9});

        // complete graph: not applicable
        CHECK_FALSE(strongly_regular_check(line_graph(fano())).has_value());

        // 5-cycle
        Graph c5(5);
        for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
        CHECK(strongly_regular_check(c5) == SrgParams{2, 0, 1});

        // path on 3 vertices is not regular
        Graph p3(3);
        p3.add_edge(0, 1);
        p3.add_edge(1, 2);
        CHECK_FALSE(strongly_regular_check(p3).has_value());
    }

    TEST_CASE("every corpus Steiner 2-design line graph with v > k is strongly regular") {
        for (int v : {9, 13, 15, 19, 21}) {
            CHECK(strongly_regular_check(line_graph(sts(v))).has_value());
        }
    }

    TEST_CASE("graph basics") {
        Graph g(4);
        CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
        CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
        g.add_edge(1, 3);
        CHECK(g.adjacent(3, 1));
        CHECK(g.edge_count() == 1);
    }
}
