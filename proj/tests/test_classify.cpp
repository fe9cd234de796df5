#include <doctest.h>

#include "ltlred/classify.hpp"
#include "ltlred/gen.hpp"
#include "ltlred/nnf.hpp"
#include "ltlred/parser.hpp"

using namespace ltlred;

namespace {

// Independent re-statement of the three definitions, written clause by
// clause; cross-check oracle for is_pure_eventuality.
bool oracle_pe(const FormulaPtr& f, Variant v) {
  const auto rec = [&](const FormulaPtr& g) { return oracle_pe(g, v); };
  if (f->kind() == Kind::Finally) return true;
  if (f->kind() == Kind::Or || f->kind() == Kind::And || f->kind() == Kind::Release)
    return rec(f->left()) && rec(f->right());
  if (f->kind() == Kind::Globally || f->kind() == Kind::Next) return rec(f->left());
  if (f->kind() == Kind::Until) {
    if (v == Variant::Buggy) return rec(f->left());            // p1 U g
    if (v == Variant::Corrected) return rec(f->left()) && rec(f->right());  // p1 U p2
    return rec(f->right());                                    // g U p1
  }
  return false;
}

}  // namespace

TEST_CASE("F phi is pure eventuality under every variant") {
  for (Variant v : {Variant::Buggy, Variant::Corrected, Variant::Patched}) {
    CHECK(is_pure_eventuality(parse("F b"), v));
    CHECK(is_pure_eventuality(parse("F (a & !b)"), v));
    CHECK(is_pure_eventuality(parse("F G a"), v));
  }
}

TEST_CASE("the variants split on the Until clause") {
  FormulaPtr phi = parse("(F b) U c");
  CHECK(is_pure_eventuality(phi, Variant::Buggy));
  CHECK_FALSE(is_pure_eventuality(phi, Variant::Corrected));
  CHECK_FALSE(is_pure_eventuality(phi, Variant::Patched));

  FormulaPtr psi = parse("a U (F b)");
  CHECK(is_pure_eventuality(psi, Variant::Patched));
  CHECK_FALSE(is_pure_eventuality(psi, Variant::Corrected));

  FormulaPtr both = parse("(F a) U (F b)");
  CHECK(is_pure_eventuality(both, Variant::Buggy));
  CHECK(is_pure_eventuality(both, Variant::Corrected));
  CHECK(is_pure_eventuality(both, Variant::Patched));
}

TEST_CASE("atoms, constants and negated atoms match no clause") {
  for (Variant v : {Variant::Buggy, Variant::Corrected, Variant::Patched}) {
    CHECK_FALSE(is_pure_eventuality(parse("a"), v));
    CHECK_FALSE(is_pure_eventuality(parse("!a"), v));
    CHECK_FALSE(is_pure_eventuality(parse("true"), v));
    CHECK_FALSE(is_pure_eventuality(parse("false"), v));
  }
}

TEST_CASE("non-NNF input is rejected with the offending subformula") {
  CHECK_THROWS_AS(is_pure_eventuality(parse("!(a U b)"), Variant::Buggy), NotNnfError);
  try {
    is_pure_eventuality(parse("F !(F c)"), Variant::Corrected);
    FAIL("expected NotNnfError");
  } catch (const NotNnfError& e) {
    CHECK(std::string(e.what()).find("!(F c)") != std::string::npos);
  }
}

TEST_CASE("cross-check against the clause-by-clause oracle") {
  FuzzConfig cfg;
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = nnf(gen_formula(2000 + i, cfg));
    CAPTURE(to_string(f));
    for (Variant v : {Variant::Buggy, Variant::Corrected, Variant::Patched})
      CHECK(is_pure_eventuality(f, v) == oracle_pe(f, v));
  }
}

TEST_CASE("corrected class is contained in both others") {
  FuzzConfig cfg;
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = nnf(gen_formula(3000 + i, cfg));
    CAPTURE(to_string(f));
    if (is_pure_eventuality(f, Variant::Corrected)) {
      CHECK(is_pure_eventuality(f, Variant::Patched));
      CHECK(is_pure_eventuality(f, Variant::Buggy));
    }
  }
}
