#ifndef LTLRED_HARNESS_HPP
#define LTLRED_HARNESS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltlred/check.hpp"
#include "ltlred/classify.hpp"
#include "ltlred/gen.hpp"
#include "ltlred/reduce.hpp"

namespace ltlred {

inline constexpr std::array<Variant, 3> kAllVariants = {Variant::Buggy, Variant::Corrected,
                                                        Variant::Patched};

// One (formula, variant) check: reduce, then bounded equivalence of
// input and output.
struct VariantOutcome {
  Variant variant;
  FormulaPtr reduced;
  ReductionTrace trace;
  bool equivalent = true;
  std::optional<LassoWord> counterexample;
};

struct CaseResult {
  int index = 0;
  FormulaPtr formula;
  std::array<VariantOutcome, 3> outcomes;
  // Corrected-reduced vs Patched-reduced comparison
  bool final_effect_equivalent = true;
  bool final_effect_syntactic = true;
};

// A reduction that changed the language: self-verifying record of what
// was rewritten and a word telling input and output apart.
struct DivergenceRecord {
  int case_index = 0;
  FormulaPtr original;
  Variant variant;
  FormulaPtr reduced;
  ReductionTrace trace;
  LassoWord counterexample;
  FormulaPtr pivotal;              // subformula whose classification licensed the rewrite
  std::array<bool, 3> pivotal_pe;  // its membership under Buggy/Corrected/Patched
};

struct FuzzReport {
  FuzzConfig config;
  std::string corpus_path;  // nonempty for corpus runs; then config carries only bounds
  std::vector<CaseResult> cases;
  std::vector<DivergenceRecord> divergences;

  int buggy_divergences() const;
  int corrected_divergences() const;
  int patched_divergences() const;
};

// Replays the trace and re-runs the oracle; true iff the record still
// reproduces the discrepancy.
bool verify_record(const DivergenceRecord& rec, const Bounds& bounds);

// Differential run over `config.count` generated formulas.
FuzzReport fuzz_differential(const FuzzConfig& config);

// Same checks over an explicit formula list.
FuzzReport run_cases(const std::vector<FormulaPtr>& formulas, const Bounds& bounds);

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One formula per line, '#' starts a comment. Throws CorpusError with
// the offending line number on unreadable files and syntax errors.
FuzzReport run_corpus(const std::string& path, const Bounds& bounds = {});

// Deterministic JSON rendering: identical reports serialize to
// byte-identical text.
std::string report_to_json(const FuzzReport& report);

// 0 clean; 3 buggy divergences only; 4 corrected/patched divergence.
int report_exit_code(const FuzzReport& report);

}  // namespace ltlred

#endif  // LTLRED_HARNESS_HPP
