#include "support.hpp"

#include "ngor/graph.hpp"
#include "ngor/graph_io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ngor;

TEST_CASE("parse a two-vertex graph without weights") {
  DecoratedGraph g = parse_graph("v a 1\nv b 2\ne a b\n");
  REQUIRE(g.size() == 2);
  CHECK(g.genus(0) == 1);
  CHECK(g.genus(1) == 2);
  CHECK_FALSE(g.has_self_intersections());
  CHECK(g.multiplicity(0, 1) == 1);
  CHECK(validate(g).empty());
}

TEST_CASE("parse a single weighted vertex") {
  DecoratedGraph g = parse_graph("v a 0 e=2\n");
  REQUIRE(g.size() == 1);
  CHECK(g.genus(0) == 0);
  CHECK(g.self_intersection(0) == 2);
  CHECK(g.valency(0) == 0);
}

TEST_CASE("comments, blank lines and multiplicities") {
  DecoratedGraph g = parse_graph(
      "# a cusp of length two\n"
      "\n"
      "v a 0\n"
      "v b 0\n"
      "e a b m=2\n");
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.valency(0) == 2);
}

TEST_CASE("repeated edge lines accumulate multiplicity") {
  DecoratedGraph g = parse_graph("v a 0\nv b 0\ne a b\ne a b\n");
  CHECK(g.multiplicity(0, 1) == 2);
}

TEST_CASE("parse errors carry positions") {
  SECTION("loop edge") {
    try {
      parse_graph("v a 0\ne a a\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("loop") != std::string::npos);
    }
  }
  SECTION("duplicate vertex") {
    CHECK_THROWS_AS(parse_graph("v a 0\nv a 1\n"), ParseError);
  }
  SECTION("unknown vertex in edge") {
    CHECK_THROWS_AS(parse_graph("v a 0\ne a b\nv b 0\n"), ParseError);
  }
  SECTION("weight on some vertices only") {
    CHECK_THROWS_AS(parse_graph("v a 0 e=2\nv b 0\ne a b\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("v a 0\nv b 0 e=2\ne a b\n"), ParseError);
  }
  SECTION("zero weight") {
    CHECK_THROWS_AS(parse_graph("v a 0 e=0\n"), ParseError);
  }
  SECTION("negative genus") {
    CHECK_THROWS_AS(parse_graph("v a -1\n"), ParseError);
  }
  SECTION("disconnected") {
    CHECK_THROWS_AS(parse_graph("v a 0\nv b 0\n"), ParseError);
  }
  SECTION("empty input") {
    CHECK_THROWS_AS(parse_graph("# nothing\n"), ParseError);
  }
  SECTION("unknown directive") {
    try {
      parse_graph("v a 0\nx a\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 1);
    }
  }
  SECTION("bad integer") {
    CHECK_THROWS_AS(parse_graph("v a zero\n"), ParseError);
  }
  SECTION("zero multiplicity") {
    CHECK_THROWS_AS(parse_graph("v a 0\nv b 0\ne a b m=0\n"), ParseError);
  }
}

TEST_CASE("derived weights") {
  SECTION("two-vertex graph") {
    DecoratedGraph g = parse_graph("v a 1\nv b 2\ne a b\n");
    DerivedWeights w = derived_weights(g);
    CHECK(w.valency == std::vector<std::int64_t>{1, 1});
    CHECK(w.q == std::vector<std::int64_t>{1, 3});
  }
  SECTION("isolated elliptic vertex") {
    DecoratedGraph g = parse_graph("v a 1\n");
    DerivedWeights w = derived_weights(g);
    CHECK(w.valency[0] == 0);
    CHECK(w.q[0] == 0);
  }
  SECTION("triangle of rational curves") {
    DecoratedGraph g = parse_graph("v a 0\nv b 0\nv c 0\ne a b\ne b c\ne c a\n");
    DerivedWeights w = derived_weights(g);
    CHECK(w.valency == std::vector<std::int64_t>{2, 2, 2});
    CHECK(w.q == std::vector<std::int64_t>{0, 0, 0});
  }
}

TEST_CASE("round trip through the canonical text form") {
  testsupport::Rng rng(20240811);
  for (int iter = 0; iter < 50; ++iter) {
    DecoratedGraph g = iter % 2 == 0
                           ? testsupport::random_connected_graph(rng, 6, 3, 3)
                           : testsupport::random_definite_graph(rng, 6, 3, 3);
    DecoratedGraph back = parse_graph(serialize_graph(g));
    CHECK(back == g);
  }
}

TEST_CASE("derived weight invariants on random graphs") {
  testsupport::Rng rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    DecoratedGraph g = testsupport::random_connected_graph(rng, 7, 3, 3);
    DerivedWeights w = derived_weights(g);
    std::int64_t valency_sum = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(w.q[i] >= -2);
      CHECK((w.q[i] == -2) == (w.valency[i] == 0 && g.genus(i) == 0));
      valency_sum += w.valency[i];
    }
    CHECK(valency_sum == 2 * g.total_edge_multiplicity());
  }
}

TEST_CASE("validate reports violations as data") {
  SECTION("valid graph") {
    DecoratedGraph g = parse_graph("v a 1\nv b 2\ne a b\n");
    CHECK(validate(g).empty());
  }
  SECTION("two components") {
    DecoratedGraph g({"a", "b"}, {0, 0}, std::nullopt, {});
    auto violations = validate(g);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::Disconnected);
  }
  SECTION("zero self-intersection weight") {
    DecoratedGraph g({"a", "b"}, {0, 0}, std::vector<std::int64_t>{2, 0},
                     {{0, 1, 1}});
    bool found = false;
    for (const auto& v : validate(g))
      if (v.kind == ViolationKind::NonPositiveSelfIntersection) found = true;
    CHECK(found);
  }
  SECTION("loop") {
    DecoratedGraph g({"a"}, {0}, std::nullopt, {{0, 0, 1}});
    bool found = false;
    for (const auto& v : validate(g))
      if (v.kind == ViolationKind::LoopEdge) found = true;
    CHECK(found);
  }
  SECTION("no vertices") {
    DecoratedGraph g({}, {}, std::nullopt, {});
    REQUIRE(validate(g).size() == 1);
    CHECK(validate(g)[0].kind == ViolationKind::NoVertices);
  }
  SECTION("duplicate ids") {
    DecoratedGraph g({"a", "a"}, {0, 0}, std::nullopt, {{0, 1, 1}});
    bool found = false;
    for (const auto& v : validate(g))
      if (v.kind == ViolationKind::DuplicateVertex) found = true;
    CHECK(found);
  }
}

TEST_CASE("dot rendering is deterministic and labeled") {
  DecoratedGraph g = parse_graph("v a 0 e=3\nv b 0 e=2\ne a b m=2\n");
  std::string dot = to_dot(g);
  CHECK(dot.find("graph resolution {") == 0);
  CHECK(dot.find("\"a\" [label=\"a\\np=0 e=3\"]") != std::string::npos);
  CHECK(dot.find("\"a\" -- \"b\" [label=\"2\"]") != std::string::npos);
  CHECK(dot == to_dot(g));
}
