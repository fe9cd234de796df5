#include "ltlred/harness.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "ltlred/eval.hpp"
#include "ltlred/parser.hpp"

namespace ltlred {

namespace {

int count_divergences(const FuzzReport& r, Variant v) {
  int n = 0;
  for (const DivergenceRecord& d : r.divergences)
    if (d.variant == v) ++n;
  return n;
}

}  // namespace

int FuzzReport::buggy_divergences() const { return count_divergences(*this, Variant::Buggy); }
int FuzzReport::corrected_divergences() const { return count_divergences(*this, Variant::Corrected); }
int FuzzReport::patched_divergences() const { return count_divergences(*this, Variant::Patched); }

bool verify_record(const DivergenceRecord& rec, const Bounds& bounds) {
  (void)bounds;
  try {
    FormulaPtr replayed = replay(rec.trace);
    if (!equal(replayed, rec.reduced)) return false;
  } catch (const TraceError&) {
    return false;
  }
  // the recorded word must still tell the formulas apart
  return eval(rec.trace.initial, rec.counterexample, 0) !=
         eval(rec.reduced, rec.counterexample, 0);
}

namespace {

// The subformula whose classification licensed an unsound rewrite: the
// replacement of the first step accepted by the record's variant but
// rejected by the corrected definition. Falls back to the first step.
FormulaPtr pivotal_subformula(const ReductionTrace& trace, Variant v) {
  for (const ReductionStep& s : trace.steps) {
    if (is_pure_eventuality(s.after, v) && !is_pure_eventuality(s.after, Variant::Corrected))
      return s.after;
  }
  return trace.steps.empty() ? trace.final : trace.steps.front().after;
}

CaseResult run_case(int index, const FormulaPtr& f, const Bounds& bounds,
                    std::vector<DivergenceRecord>& divergences) {
  CaseResult cr;
  cr.index = index;
  cr.formula = f;

  for (std::size_t vi = 0; vi < kAllVariants.size(); ++vi) {
    Variant v = kAllVariants[vi];
    VariantOutcome& out = cr.outcomes[vi];
    out.variant = v;
    ReduceResult rr = reduce(f, v);
    out.reduced = rr.formula;
    out.trace = std::move(rr.trace);

    Verdict verdict = equivalent_bounded(f, out.reduced, bounds);
    out.equivalent = verdict.pass;
    if (!verdict.pass) {
      out.counterexample = verdict.witness;
      DivergenceRecord rec;
      rec.case_index = index;
      rec.original = f;
      rec.variant = v;
      rec.reduced = out.reduced;
      rec.trace = out.trace;
      rec.counterexample = *verdict.witness;
      rec.pivotal = pivotal_subformula(out.trace, v);
      for (std::size_t wi = 0; wi < kAllVariants.size(); ++wi)
        rec.pivotal_pe[wi] = is_pure_eventuality(rec.pivotal, kAllVariants[wi]);
      divergences.push_back(std::move(rec));
    }
  }

  const FormulaPtr& corrected = cr.outcomes[1].reduced;
  const FormulaPtr& patched = cr.outcomes[2].reduced;
  cr.final_effect_syntactic = equal(corrected, patched);
  cr.final_effect_equivalent =
      cr.final_effect_syntactic || equivalent_bounded(corrected, patched, bounds).pass;
  return cr;
}

}  // namespace

FuzzReport run_cases(const std::vector<FormulaPtr>& formulas, const Bounds& bounds) {
  FuzzReport report;
  report.config.bounds = bounds;
  report.config.count = static_cast<int>(formulas.size());
  for (std::size_t i = 0; i < formulas.size(); ++i)
    report.cases.push_back(run_case(static_cast<int>(i), formulas[i], bounds, report.divergences));
  return report;
}

FuzzReport fuzz_differential(const FuzzConfig& config) {
  validate(config);
  FuzzReport report;
  report.config = config;
  for (int i = 0; i < config.count; ++i) {
    FormulaPtr f = gen_formula(config.seed + static_cast<std::uint64_t>(i), config);
    report.cases.push_back(run_case(i, f, config.bounds, report.divergences));
  }
  return report;
}

FuzzReport run_corpus(const std::string& path, const Bounds& bounds) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot read corpus file '" + path + "'");

  std::vector<FormulaPtr> formulas;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    try {
      formulas.push_back(parse(line.substr(b, e - b + 1)));
    } catch (const ParseError& err) {
      throw CorpusError(path + ":" + std::to_string(lineno) + ": " + err.what());
    }
  }

  FuzzReport report = run_cases(formulas, bounds);
  report.corpus_path = path;
  return report;
}

namespace {

using json = nlohmann::ordered_json;

json bounds_json(const Bounds& b) {
  return {{"max_props", b.max_props},
          {"max_prefix", b.max_prefix},
          {"max_period", b.max_period},
          {"max_append", b.max_append}};
}

json trace_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const ReductionStep& s : t.steps) {
    steps.push_back({{"rule", rule_name(s.rule)},
                     {"path", s.path},
                     {"before", to_string(s.before)},
                     {"after", to_string(s.after)}});
  }
  return {{"original", to_string(t.original)},
          {"initial", to_string(t.initial)},
          {"normalized", t.normalized},
          {"steps", steps},
          {"final", to_string(t.final)}};
}

}  // namespace

std::string report_to_json(const FuzzReport& report) {
  json config;
  if (report.corpus_path.empty()) {
    const FuzzConfig& c = report.config;
    config = {{"seed", c.seed},
              {"count", c.count},
              {"max_depth", c.max_depth},
              {"props", c.props},
              {"weights",
               {{"atom", c.weights.atom},
                {"true", c.weights.true_const},
                {"false", c.weights.false_const},
                {"not", c.weights.not_op},
                {"and", c.weights.and_op},
                {"or", c.weights.or_op},
                {"next", c.weights.next_op},
                {"until", c.weights.until_op},
                {"release", c.weights.release_op},
                {"finally", c.weights.finally_op},
                {"globally", c.weights.globally_op}}},
              {"bounds", bounds_json(c.bounds)}};
  } else {
    config = {{"corpus", report.corpus_path}, {"bounds", bounds_json(report.config.bounds)}};
  }

  json cases = json::array();
  int syntactic = 0, equivalent = 0;
  for (const CaseResult& cr : report.cases) {
    for (const VariantOutcome& out : cr.outcomes) {
      json c = {{"case", cr.index},
                {"formula", to_string(cr.formula)},
                {"variant", variant_name(out.variant)},
                {"reduced", to_string(out.reduced)},
                {"equivalent", out.equivalent}};
      if (out.counterexample) c["counterexample_word"] = to_string(*out.counterexample);
      if (!out.trace.steps.empty()) c["trace"] = trace_json(out.trace);
      cases.push_back(std::move(c));
    }
    syntactic += cr.final_effect_syntactic ? 1 : 0;
    equivalent += cr.final_effect_equivalent ? 1 : 0;
  }

  const int n = static_cast<int>(report.cases.size());
  json summary = {
      {"formulas", n},
      {"divergences",
       {{"buggy", report.buggy_divergences()},
        {"corrected", report.corrected_divergences()},
        {"patched", report.patched_divergences()}}},
      {"final_effect",
       {{"semantically_equivalent", equivalent},
        {"syntactically_equal", syntactic},
        {"syntactic_equality_rate", n ? static_cast<double>(syntactic) / n : 1.0}}},
      {"exit_code", report_exit_code(report)}};

  json root = {{"config", std::move(config)}, {"cases", std::move(cases)}, {"summary", std::move(summary)}};
  return root.dump(2) + "\n";
}

int report_exit_code(const FuzzReport& report) {
  if (report.corrected_divergences() > 0 || report.patched_divergences() > 0) return 4;
  for (const CaseResult& cr : report.cases)
    if (!cr.final_effect_equivalent) return 4;
  if (report.buggy_divergences() > 0) return 3;
  return 0;
}

}  // namespace ltlred
