#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "ltlred/harness.hpp"
#include "ltlred/nnf.hpp"
#include "ltlred/parser.hpp"

using namespace ltlred;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = std::string(std::tmpnam(nullptr)) + "_ltlred.txt";
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("gen_formula: determinism and depth cap") {
  FuzzConfig cfg;
  CHECK(equal(gen_formula(42, cfg), gen_formula(42, cfg)));

  FuzzConfig shallow = cfg;
  shallow.max_depth = 1;
  for (int i = 0; i < 50; ++i) {
    FormulaPtr f = gen_formula(i, shallow);
    CHECK(f->arity() == 0);
  }

  FuzzConfig deep = cfg;
  for (int i = 0; i < 200; ++i) CHECK(size(gen_formula(7000 + i, deep)) <= (1u << deep.max_depth));
}

TEST_CASE("gen_formula: nested Until/Finally shows up quickly") {
  FuzzConfig cfg;
  auto has_nested_uf = [](const FormulaPtr& f) {
    auto contains = [](const FormulaPtr& g, Kind k, auto&& self) -> bool {
      if (g->kind() == k) return true;
      for (int i = 0; i < g->arity(); ++i)
        if (self(g->child(i), k, self)) return true;
      return false;
    };
    auto scan = [&](const FormulaPtr& g, auto&& self) -> bool {
      if (g->kind() == Kind::Until &&
          (contains(g->left(), Kind::Finally, contains) ||
           contains(g->right(), Kind::Finally, contains)))
        return true;
      for (int i = 0; i < g->arity(); ++i)
        if (self(g->child(i), self)) return true;
      return false;
    };
    return scan(f, scan);
  };
  int found = 0;
  for (int i = 0; i < 1000; ++i)
    if (has_nested_uf(gen_formula(cfg.seed + i, cfg))) ++found;
  CHECK(found >= 1);
}

TEST_CASE("invalid configs are rejected") {
  FuzzConfig cfg;
  cfg.count = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.max_depth = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.weights.atom = cfg.weights.true_const = cfg.weights.false_const = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("run_cases: the paper formulas diverge exactly under buggy") {
  std::vector<FormulaPtr> fs = {parse("a U ((F b) U c)"), parse("F ((F b) U c)")};
  FuzzReport r = run_cases(fs, Bounds{});
  CHECK(r.buggy_divergences() == 2);
  CHECK(r.corrected_divergences() == 0);
  CHECK(r.patched_divergences() == 0);
  CHECK(report_exit_code(r) == 3);
  for (const DivergenceRecord& rec : r.divergences) {
    CHECK(verify_record(rec, Bounds{}));
    // the pivotal subformula is the buggy-only (F b) U c
    CHECK(equal(rec.pivotal, parse("(F b) U c")));
    CHECK(rec.pivotal_pe == std::array<bool, 3>{true, false, false});
  }
}

TEST_CASE("run_cases: atoms only, no rewrite applies") {
  FuzzReport r = run_cases({parse("a"), parse("b"), parse("a & b")}, Bounds{});
  CHECK(r.divergences.empty());
  CHECK(report_exit_code(r) == 0);
}

TEST_CASE("shipped corpus: 2 buggy divergences, none for the fixes") {
  FuzzReport r = run_corpus(LTLRED_CORPUS_FILE);
  CHECK(r.cases.size() == 3);
  CHECK(r.buggy_divergences() == 2);
  CHECK(r.corrected_divergences() == 0);
  CHECK(r.patched_divergences() == 0);
  // (F b) U c itself is irreducible, hence no divergence for it
  CHECK(r.cases[0].outcomes[0].trace.steps.empty());
}

TEST_CASE("corpus edge cases") {
  TempFile empty("# only a comment\n\n");
  FuzzReport r = run_corpus(empty.path);
  CHECK(r.cases.empty());
  CHECK(report_exit_code(r) == 0);

  TempFile bad("a U b\na U (\n");
  try {
    run_corpus(bad.path);
    FAIL("expected CorpusError");
  } catch (const CorpusError& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }

  CHECK_THROWS_AS(run_corpus("/nonexistent/corpus.ltl"), CorpusError);
}

TEST_CASE("fuzz_differential: deterministic reports, clean fixes") {
  FuzzConfig cfg;
  cfg.count = 60;
  FuzzReport a = fuzz_differential(cfg);
  FuzzReport b = fuzz_differential(cfg);
  std::string ja = report_to_json(a);
  CHECK(ja == report_to_json(b));

  CHECK(a.corrected_divergences() == 0);
  CHECK(a.patched_divergences() == 0);
  for (const DivergenceRecord& rec : a.divergences) CHECK(verify_record(rec, cfg.bounds));
  for (const CaseResult& cr : a.cases) CHECK(cr.final_effect_equivalent);

  // report schema sanity
  nlohmann::json j = nlohmann::json::parse(ja);
  CHECK(j.contains("config"));
  CHECK(j.contains("cases"));
  CHECK(j.contains("summary"));
  CHECK(j["cases"].size() == 3 * a.cases.size());
  CHECK(j["summary"]["final_effect"].contains("syntactic_equality_rate"));
}
