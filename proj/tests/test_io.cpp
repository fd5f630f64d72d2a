#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "slat/io.hpp"
#include "slat/semilattice.hpp"

using namespace slat;

TEST_CASE("emit and parse round-trip, bytes stable") {
  for (const Semilattice& a :
       {fix::chain(4), fix::diamond(), fix::vee(), fix::pentagon()}) {
    std::string text = emit_slat(a);
    auto back = parse_slat(text);
    CHECK(back == a);
    CHECK(emit_slat(back) == text);
  }
}

TEST_CASE("named structures keep their names through the round-trip") {
  auto named = Semilattice::from_join_table({{0, 1, 2, 3, 4},
                                             {1, 1, 4, 4, 4},
                                             {2, 4, 2, 3, 4},
                                             {3, 4, 3, 3, 4},
                                             {4, 4, 4, 4, 4}},
                                            {"0", "a", "b", "c", "1"});
  std::string text = emit_slat(named);
  CHECK(text ==
        "n 5\n"
        "elements 0 a b c 1\n"
        "join\n"
        "0 1 2 3 4\n"
        "1 1 4 4 4\n"
        "2 4 2 3 4\n"
        "3 4 3 3 4\n"
        "4 4 4 4 4\n");
  auto back = parse_slat(text);
  CHECK(back == named);
  CHECK(back.element_name(4) == "1");
}

TEST_CASE("comments and blank lines are ignored") {
  auto a = parse_slat(
      "# a 2-chain\n"
      "\n"
      "n 2\n"
      "join\n"
      "0 1  # the first row\n"
      "1 1\n");
  CHECK(a.flat_table() == fix::chain(2).flat_table());
}

TEST_CASE("cover bodies derive the join table") {
  auto p = parse_slat(
      "n 5\n"
      "cover 0 1\n"
      "cover 0 2\n"
      "cover 2 3\n"
      "cover 1 4\n"
      "cover 3 4\n");
  CHECK(p.flat_table() == fix::pentagon().flat_table());

  // a single element needs no cover lines
  auto one = parse_slat("n 1\n");
  CHECK(one.size() == 1);

  // relabeled cover input stays isomorphic to the table form
  auto d = parse_slat(
      "n 4\n"
      "cover 3 1\n"
      "cover 3 2\n"
      "cover 1 0\n"
      "cover 2 0\n");
  CHECK(isomorphism_check(d, fix::diamond()).has_value());
}

TEST_CASE("cover cycles and missing joins are structural errors") {
  CHECK_THROWS_AS(parse_slat("n 2\ncover 0 1\ncover 1 0\n"), ValidationError);
  try {
    parse_slat("n 4\ncover 0 2\ncover 0 3\ncover 1 2\ncover 1 3\n");
    FAIL("expected NoJoinExists");
  } catch (const NoJoinExists& e) {
    CHECK(e.x == 0);
    CHECK(e.y == 1);
  }
}

TEST_CASE("malformed input reports line and column") {
  auto expect_at = [](const std::string& text, int line, int column) {
    try {
      parse_slat(text);
      FAIL("expected SyntaxError for: ", text);
    } catch (const SyntaxError& e) {
      CHECK(e.line == line);
      CHECK(e.column == column);
    }
  };
  expect_at("", 1, 1);
  expect_at("join\n0\n", 1, 1);              // missing the n line
  expect_at("n x\njoin\n", 1, 3);            // count is not a number
  expect_at("n 2\njoin\n0 1\n1\n", 4, 1);    // short row
  expect_at("n 2\njoin\n0 1 9\n1 1\n", 3, 1);  // long row
  expect_at("n 2\ntable\n", 2, 1);           // unknown body keyword
  expect_at("n 2\ncover 0 5\n", 2, 7);       // cover index out of range
  expect_at("n 2\nelements a a\njoin\n0 1\n1 1\n", 2, 12);  // duplicate name
  expect_at("n 3\nelements a b\njoin\n0 1 2\n1 1 2\n2 2 2\n", 2, 1);
}

TEST_CASE("table bodies go through full validation") {
  CHECK_THROWS_AS(parse_slat("n 2\njoin\n0 7\n1 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_slat("n 2\njoin\n1 1\n1 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_slat("n 2\njoin\n0 1\n0 1\n"), ValidationError);
}

TEST_CASE("dot export is deterministic and bottom-up") {
  std::string dot = emit_dot(fix::chain(2));
  CHECK(dot ==
        "digraph semilattice {\n"
        "  rankdir=BT;\n"
        "  0 [label=\"0\"];\n"
        "  1 [label=\"1\"];\n"
        "  0 -> 1;\n"
        "}\n");
  CHECK(emit_dot(fix::chain(2)) == dot);
}

TEST_CASE("dot export lists every cover exactly once, sorted") {
  std::string dot = emit_dot(fix::diamond());
  CHECK(dot.find("0 -> 1;") != std::string::npos);
  CHECK(dot.find("0 -> 2;") != std::string::npos);
  CHECK(dot.find("1 -> 3;") != std::string::npos);
  CHECK(dot.find("2 -> 3;") != std::string::npos);
  CHECK(dot.find("0 -> 3;") == std::string::npos);  // not a cover
  CHECK(dot.find("0 -> 1;") < dot.find("0 -> 2;"));
  CHECK(dot.find("0 -> 2;") < dot.find("1 -> 3;"));
}

TEST_CASE("dot export groups become clusters") {
  std::string dot = emit_dot(fix::diamond(), {{0, 1}, {0, 2}});
  CHECK(dot ==
        "digraph semilattice {\n"
        "  rankdir=BT;\n"
        "  0 [label=\"0\"];\n"
        "  1 [label=\"1\"];\n"
        "  2 [label=\"2\"];\n"
        "  3 [label=\"3\"];\n"
        "  subgraph cluster_0 {\n"
        "    0;\n"
        "    1;\n"
        "  }\n"
        "  subgraph cluster_1 {\n"
        "    0;\n"
        "    2;\n"
        "  }\n"
        "  0 -> 1;\n"
        "  0 -> 2;\n"
        "  1 -> 3;\n"
        "  2 -> 3;\n"
        "}\n");
}

TEST_CASE("dot export quotes names") {
  auto named = Semilattice::from_join_table({{0, 1}, {1, 1}}, {"bot", "top"});
  std::string dot = emit_dot(named);
  CHECK(dot.find("0 [label=\"bot\"];") != std::string::npos);
  CHECK(dot.find("1 [label=\"top\"];") != std::string::npos);
}

TEST_CASE("numeric names parse and resolve") {
  auto a = parse_slat("n 2\nelements 0 1\njoin\n0 1\n1 1\n");
  CHECK(a.element_name(0) == "0");
  CHECK(a.element_name(1) == "1");
  CHECK(emit_slat(a) == "n 2\nelements 0 1\njoin\n0 1\n1 1\n");
}
