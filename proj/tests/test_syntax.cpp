#include <doctest.h>

#include "ltlred/formula.hpp"
#include "ltlred/gen.hpp"
#include "ltlred/nnf.hpp"
#include "ltlred/parser.hpp"

using namespace ltlred;

TEST_CASE("parse: paper formulas") {
  FormulaPtr f = parse("(F b) U c");
  CHECK(equal(f, f_until(f_finally(f_atom("b")), f_atom("c"))));

  FormulaPtr g = parse("a U ((F b) U c)");
  CHECK(equal(g, f_until(f_atom("a"), f_until(f_finally(f_atom("b")), f_atom("c")))));

  CHECK(equal(parse("a"), f_atom("a")));
}

TEST_CASE("parse: precedence and associativity") {
  // unary binds tightest; U/R right-associative, tighter than &, & tighter than |
  CHECK(equal(parse("F b U c"), f_until(f_finally(f_atom("b")), f_atom("c"))));
  CHECK(equal(parse("a U b U c"),
              f_until(f_atom("a"), f_until(f_atom("b"), f_atom("c")))));
  CHECK(equal(parse("a U b & c"), f_and(f_until(f_atom("a"), f_atom("b")), f_atom("c"))));
  CHECK(equal(parse("a & b | c"), f_or(f_and(f_atom("a"), f_atom("b")), f_atom("c"))));
  CHECK(equal(parse("!a R b"), f_release(f_not(f_atom("a")), f_atom("b"))));
  CHECK(equal(parse("X G a"), f_next(f_globally(f_atom("a")))));
  CHECK(equal(parse("tt U ff"), f_until(f_true(), f_false())));
  CHECK(equal(parse("true"), f_true()));
}

TEST_CASE("parse: errors carry a position") {
  CHECK_THROWS_AS(parse("a U"), ParseError);
  CHECK_THROWS_AS(parse("(a U b"), ParseError);
  CHECK_THROWS_AS(parse("a U b)"), ParseError);
  CHECK_THROWS_AS(parse("a W b"), ParseError);  // unknown operator
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("a &"), ParseError);

  try {
    parse("a U ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
  }
}

TEST_CASE("print: paper notation and minimal parentheses") {
  CHECK(to_string(f_until(f_finally(f_atom("b")), f_atom("c"))) == "(F b) U c");
  CHECK(to_string(f_atom("a")) == "a");
  CHECK(to_string(f_and(f_or(f_atom("a"), f_atom("b")), f_atom("c"))) == "(a | b) & c");
  CHECK(to_string(f_until(f_atom("a"), f_until(f_atom("b"), f_atom("c")))) == "a U b U c");
  CHECK(to_string(f_until(f_until(f_atom("a"), f_atom("b")), f_atom("c"))) == "(a U b) U c");
  CHECK(to_string(f_not(f_and(f_atom("a"), f_atom("b")))) == "!(a & b)");
}

TEST_CASE("nnf: dualities") {
  CHECK(equal(nnf(f_not(f_until(f_atom("a"), f_atom("b")))),
              f_release(f_not(f_atom("a")), f_not(f_atom("b")))));
  CHECK(equal(nnf(f_not(f_finally(f_atom("a")))), f_globally(f_not(f_atom("a")))));
  CHECK(equal(nnf(f_not(f_globally(f_atom("a")))), f_finally(f_not(f_atom("a")))));
  CHECK(equal(nnf(f_not(f_next(f_atom("a")))), f_next(f_not(f_atom("a")))));
  CHECK(equal(nnf(f_not(f_not(f_atom("a")))), f_atom("a")));
  CHECK(equal(nnf(f_not(f_true())), f_false()));
  // already in NNF: unchanged
  FormulaPtr phi = parse("(F b) U c");
  CHECK(equal(nnf(phi), phi));
}

TEST_CASE("size") {
  CHECK(size(f_atom("a")) == 1);
  CHECK(size(parse("(F b) U c")) == 4);
  CHECK(size(parse("a U ((F b) U c)")) == 6);
}

TEST_CASE("atom names are validated") {
  CHECK_THROWS_AS(f_atom(""), std::invalid_argument);
  CHECK_THROWS_AS(f_atom("A"), std::invalid_argument);
  CHECK_THROWS_AS(f_atom("true"), std::invalid_argument);
  CHECK(valid_atom_name("a_1"));
  CHECK_FALSE(valid_atom_name("1a"));
}

TEST_CASE("properties over random formulas") {
  FuzzConfig cfg;
  cfg.max_depth = 6;
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = gen_formula(1000 + i, cfg);
    CAPTURE(to_string(f));

    // round trip
    CHECK(equal(parse(to_string(f)), f));

    // nnf shape and idempotence
    FormulaPtr n = nnf(f);
    CHECK(is_nnf(n));
    CHECK(equal(nnf(n), n));
  }
}
