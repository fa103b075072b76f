#include "doctest.h"
#include "lcmst/instance.hpp"

using namespace lcmst;

TEST_CASE("parse a minimal lcmst instance") {
    Instance inst = parse_instance("p lcmst 2 1 5 0\ne 0 1 3 7\n");
    CHECK(inst.n == 2);
    CHECK(inst.m() == 1);
    CHECK(inst.h == 5);
    CHECK(inst.root == 0);
    CHECK(inst.edges[0].length == 3);
    CHECK(inst.edges[0].weight == 7);
}

TEST_CASE("vertex id out of range is rejected with a line number") {
    try {
        parse_instance("p lcmst 3 1 2 0\ne 0 5 1 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
}

TEST_CASE("malformed and invalid inputs") {
    CHECK_THROWS_AS(parse_instance("e 0 1 1 1\n"), ParseError);          // edge before header
    CHECK_THROWS_AS(parse_instance("p lcmst 2 2 1 0\ne 0 1 1 1\n"), ParseError);  // m mismatch
    CHECK_THROWS_AS(parse_instance("p lcmst 2 1 1 0\ne 0 0 1 1\n"), ParseError);  // self loop
    CHECK_THROWS_AS(parse_instance("p lcmst 2 2 1 0\ne 0 1 1 1\ne 1 0 2 2\n"),
                    ParseError);  // duplicate undirected edge
    CHECK_THROWS_AS(parse_instance("p lcmst 2 1 1 5\ne 0 1 1 1\n"), ParseError);  // root range
    CHECK_THROWS_AS(parse_instance("p gst 4 2 2 0\ne 0 1 0 1\ne 0 2 0 1\ng 1 2\ng 2 3\n"),
                    ParseError);  // overlapping groups
}

TEST_CASE("comments and terminals") {
    Instance inst = parse_instance("# header\np lcst 3 2 4 0\ne 0 1 1 1\ne 1 2 1 1\nt 2\n");
    CHECK(inst.kind == ProblemKind::LCST);
    REQUIRE(inst.terminals.size() == 1);
    CHECK(inst.terminals[0] == 2);
}

TEST_CASE("directed dst edges allow both orientations") {
    Instance inst = parse_instance("p dst 2 2 1 0\ne 0 1 0 3\ne 1 0 0 4\nt 1\n");
    CHECK(inst.directed);
    CHECK(inst.m() == 2);
}

TEST_CASE("serialize-parse fixpoint is canonical") {
    Instance inst = parse_instance("p lcmst 3 3 9 1\ne 2 1 1 4\ne 0 2 2 5\ne 1 0 3 6\n");
    std::string s1 = serialize_instance(inst);
    Instance round = parse_instance(s1);
    CHECK(serialize_instance(round) == s1);
}
