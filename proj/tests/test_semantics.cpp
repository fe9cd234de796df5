#include <doctest.h>

#include <random>

#include "ltlred/check.hpp"
#include "ltlred/eval.hpp"
#include "ltlred/gen.hpp"
#include "ltlred/nnf.hpp"
#include "ltlred/parser.hpp"
#include "ltlred/word.hpp"

using namespace ltlred;

namespace {

LassoWord random_word(std::mt19937_64& rng, const std::vector<std::string>& props, int max_prefix,
                      int max_period) {
  auto letter = [&] {
    Letter l;
    for (const std::string& p : props)
      if (rng() & 1) l.insert(p);
    return l;
  };
  LassoWord w;
  int m = static_cast<int>(rng() % (max_prefix + 1));
  int q = 1 + static_cast<int>(rng() % max_period);
  for (int i = 0; i < m; ++i) w.prefix.push_back(letter());
  for (int i = 0; i < q; ++i) w.period.push_back(letter());
  return w;
}

}  // namespace

TEST_CASE("word text round trip") {
  CHECK(parse_word("a | c") == LassoWord{{{"a"}}, {{"c"}}});
  CHECK(parse_word("| c") == LassoWord{{}, {{"c"}}});
  CHECK(parse_word("{a,b}; {} | c; {c,a}") ==
        LassoWord{{{"a", "b"}, {}}, {{"c"}, {"a", "c"}}});
  CHECK(to_string(parse_word("{a,b};{}|c")) == "{a,b};{} | c");
  CHECK(to_string(parse_word("|c")) == "| c");
  CHECK_THROWS_AS(parse_word("a |"), WordFormatError);
  CHECK_THROWS_AS(parse_word("a ; c"), WordFormatError);
  CHECK_THROWS_AS(parse_word("a | b | c"), WordFormatError);
  CHECK_THROWS_AS(parse_word("{a | c"), WordFormatError);
}

TEST_CASE("eval: paper words") {
  FormulaPtr phi = parse("(F b) U c");
  CHECK(eval(phi, parse_word("| c"), 0));        // c^w in L(phi)
  CHECK_FALSE(eval(phi, parse_word("a | c"), 0));  // a.c^w not in L(phi)
  CHECK(eval(parse("a U ((F b) U c)"), parse_word("a | c"), 0));
  CHECK(eval(parse("G a"), parse_word("| a"), 0));
  CHECK_FALSE(eval(parse("F b"), parse_word("a | c"), 0));
}

TEST_CASE("eval: operators at positions") {
  LassoWord w = parse_word("a; b | c");
  CHECK(eval(parse("X b"), w, 0));
  CHECK(eval(parse("X c"), w, 1));
  CHECK(eval(parse("X c"), w, 2));  // wraps inside the loop
  CHECK(eval(parse("a U b"), w, 0));
  CHECK_FALSE(eval(parse("b R c"), w, 0));
  CHECK(eval(parse("b R c"), w, 2));
  CHECK(eval(parse("F c"), w, 0));
  CHECK_FALSE(eval(parse("G c"), w, 1));
  CHECK(eval(parse("G c"), w, 2));
  CHECK(eval(parse("true"), w, 5));
  CHECK_FALSE(eval(parse("false"), w, 0));
  CHECK(eval(parse("!b"), w, 0));
}

TEST_CASE("eval_reference: paper words and constants") {
  FormulaPtr phi = parse("(F b) U c");
  CHECK(eval_reference(phi, parse_word("| c"), 0));
  CHECK_FALSE(eval_reference(phi, parse_word("a | c"), 0));
  CHECK(eval_reference(parse("a U ((F b) U c)"), parse_word("a | c"), 0));
  CHECK(eval_reference(parse("true"), parse_word("| {}"), 7));
}

TEST_CASE("differential: eval vs eval_reference on random triples") {
  std::mt19937_64 rng(7);
  FuzzConfig cfg;
  for (int i = 0; i < 2000; ++i) {
    FormulaPtr f = gen_formula(5000 + i, cfg);
    LassoWord w = random_word(rng, cfg.props, 4, 4);
    std::size_t pos = rng() % 8;
    CAPTURE(to_string(f));
    CAPTURE(to_string(w));
    CAPTURE(pos);
    CHECK(eval(f, w, pos) == eval_reference(f, w, pos));
  }
}

TEST_CASE("semantic invariants: periodicity, prepend shift, duality, implication") {
  std::mt19937_64 rng(11);
  FuzzConfig cfg;
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = gen_formula(6000 + i, cfg);
    LassoWord w = random_word(rng, cfg.props, 3, 3);
    CAPTURE(to_string(f));
    CAPTURE(to_string(w));

    // periodicity
    std::size_t p = w.prefix.size(), q = w.period.size();
    std::size_t k = rng() % 10;
    CHECK(eval(f, w, p + k) == eval(f, w, p + k % q));

    // prepend shift
    LassoWord vw = w;
    std::vector<Letter> v = random_word(rng, cfg.props, 2, 1).period;
    vw.prefix.insert(vw.prefix.begin(), v.begin(), v.end());
    CHECK(eval(f, vw, v.size()) == eval(f, w, 0));

    // duality
    CHECK(eval(nnf(f_not(f)), w, 0) == !eval(f, w, 0));

    // psi implies F psi and phi U psi
    FormulaPtr g = gen_formula(90000 + i, cfg);
    if (eval(f, w, 0)) {
      CHECK(eval(f_finally(f), w, 0));
      CHECK(eval(f_until(g, f), w, 0));
    }
  }
}

TEST_CASE("enumerate_lassos: counts and determinism") {
  CHECK(LassoEnumerator::count(1, 0, 1) == 2);
  CHECK(LassoEnumerator::count(2, 1, 1) == 20);
  CHECK(LassoEnumerator::count(0, 0, 1) == 1);
  CHECK(LassoEnumerator::count(3, 3, 3) == 341640);

  LassoEnumerator e({"a"}, 0, 1);
  LassoWord w;
  REQUIRE(e.next(w));
  CHECK(w == parse_word("| {}"));
  REQUIRE(e.next(w));
  CHECK(w == parse_word("| a"));
  CHECK_FALSE(e.next(w));

  // stream length matches the closed form
  LassoEnumerator e2({"a", "b"}, 2, 2);
  unsigned long long n = 0;
  while (e2.next(w)) ++n;
  CHECK(n == LassoEnumerator::count(2, 2, 2));
}

TEST_CASE("equivalent_bounded") {
  Verdict v = equivalent_bounded(parse("a U ((F b) U c)"), parse("(F b) U c"));
  REQUIRE_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  CHECK(eval(parse("a U ((F b) U c)"), *v.witness, 0) != eval(parse("(F b) U c"), *v.witness, 0));
  // the paper word is a discrepancy too
  CHECK(eval(parse("a U ((F b) U c)"), parse_word("a | c"), 0));
  CHECK_FALSE(eval(parse("(F b) U c"), parse_word("a | c"), 0));

  CHECK(equivalent_bounded(parse("F ((F b) U c)"), parse("(F b) U c")).pass == false);

  FormulaPtr f = parse("a U (b & X c)");
  CHECK(equivalent_bounded(f, f).pass);
  CHECK(equivalent_bounded(parse("F a"), parse("true U a")).pass);
}

TEST_CASE("implies_bounded") {
  CHECK(implies_bounded(parse("(F b) U c"), parse("a U ((F b) U c)")).pass);
  CHECK(implies_bounded(parse("c"), parse("F c")).pass);
  Verdict v = implies_bounded(parse("F c"), parse("c"));
  REQUIRE_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  CHECK(eval(parse("F c"), *v.witness, 0));
  CHECK_FALSE(eval(parse("c"), *v.witness, 0));
}

TEST_CASE("left_append_closed_bounded") {
  // the paper counterexample: c^w satisfies, a.c^w does not
  Verdict v = left_append_closed_bounded(parse("(F b) U c"));
  REQUIRE_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == parse_word("| c"));
  REQUIRE(v.appended.size() == 1);
  CHECK(v.appended[0] == Letter{"a"});

  CHECK(left_append_closed_bounded(parse("F b")).pass);
  CHECK(left_append_closed_bounded(parse("F (a & b)")).pass);

  // a counterexample must re-verify
  Verdict va = left_append_closed_bounded(parse("a"));
  REQUIRE_FALSE(va.pass);
  REQUIRE(va.witness.has_value());
  LassoWord broken = *va.witness;
  broken.prefix.insert(broken.prefix.begin(), va.appended.begin(), va.appended.end());
  CHECK(eval(parse("a"), *va.witness, 0));
  CHECK_FALSE(eval(parse("a"), broken, 0));
}
