#include "designiso/constructions.hpp"
#include "designiso/io.hpp"

#include <doctest.h>

using namespace designiso;

TEST_SUITE("design files") {
    TEST_CASE("emit fano: exact bytes") {
        const std::string expected =
            "design 2 7 3 1\n"
            "7\n"
            "0 1 2\n"
            "0 3 4\n"
            "0 5 6\n"
            "1 3 5\n"
            "1 4 6\n"
            "2 3 6\n"
            "2 4 5\n";
        CHECK(emit_design(fano()) == expected);
    }

    TEST_CASE("round trips through text") {
        for (const Design& d :
             {fano(), sts(9), sts(15), boolean_sqs(3), boolean_sqs(4), complete_design(6, 3, 2)}) {
            Design back = parse_design(emit_design(d));
            CHECK(back == normalized(d));
        }
        // scrambled designs survive too (stored normalized)
        Design s = scramble(sts(13), 4);
        CHECK(parse_design(emit_design(s)) == normalized(s));
    }

    TEST_CASE("comments and blank lines are ignored") {
        const std::string text =
            "# a design\n"
            "design 2 7 3 1   # header\n"
            "\n"
            "7\n"
            "0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n"
            "# trailing comment\n";
        CHECK(parse_design(text) == fano());
    }

    TEST_CASE("parse errors carry line numbers") {
        auto expect_error = [](const std::string& text, int line) {
            try {
                parse_design(text);
                FAIL("expected ParseError");
            } catch (const ParseError& e) {
                CHECK(e.line == line);
            }
        };
        expect_error("blah 2 7 3 1\n7\n", 1);               // malformed header
        expect_error("design 2 7 3 1\nseven\n", 2);         // malformed count
        expect_error("design 2 7 3 1\n1\n0 1\n", 3);        // wrong block size
        expect_error("design 2 7 3 1\n1\n0 1 9\n", 3);      // point out of range
        expect_error("design 2 7 3 1\n1\n0 1 1\n", 3);      // repeated point
        expect_error("design 2 7 3 1\n2\n0 1 2\n2 1 0\n", 4);  // duplicate block
        expect_error("design 2 7 3 1\n2\n0 1 2\n", 3);      // fewer blocks than promised
    }
}

TEST_SUITE("dimacs graphs") {
    TEST_CASE("K7 round trip") {
        Graph k7(7);
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) k7.add_edge(i, j);
        std::string text = emit_graph(k7);
        CHECK(text.find("p edge 7 21") != std::string::npos);
        CHECK(parse_graph(text) == k7);
    }

    TEST_CASE("comments, 1-based endpoints") {
        const std::string text =
            "c triangle\n"
            "p edge 3 3\n"
            "e 1 2\ne 2 3\ne 3 1\n";
        Graph g = parse_graph(text);
        CHECK(g.n == 3);
        CHECK(g.edge_count() == 3);
    }

    TEST_CASE("duplicate edges collapse with a warning") {
        const std::string text = "p edge 3 2\ne 1 2\ne 2 1\n";
        std::vector<std::string> warnings;
        Graph g = parse_graph(text, &warnings);
        CHECK(g.edge_count() == 1);
        CHECK(warnings.size() == 1);
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);                  // missing p line
        CHECK_THROWS_AS(parse_graph("p edge 2 1\np edge 2 1\ne 1 2\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 4\n"), ParseError);      // out of range
        CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 2 2\n"), ParseError);      // self loop
        CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\n"), ParseError);      // count mismatch
    }
}
