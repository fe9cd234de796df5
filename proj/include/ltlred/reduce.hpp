#ifndef LTLRED_REDUCE_HPP
#define LTLRED_REDUCE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ltlred/classify.hpp"
#include "ltlred/formula.hpp"

namespace ltlred {

/* Operator reduction: rewrites
 *
 *   p U q  ->  q    when q is pure eventuality under the chosen variant
 *   F q    ->  q    when q is pure eventuality under the chosen variant
 *
 * applied leftmost-innermost to a fixpoint. Under the Buggy variant
 * these rewrites are unsound (only the right-to-left implications hold
 * in general); under Corrected and Patched they preserve the language.
 */

enum class RuleId { UntilRule, FinallyRule };

const char* rule_name(RuleId r);

struct ReductionStep {
  RuleId rule;
  std::vector<int> path;  // child indices from the root, applied in order
  FormulaPtr before;      // subformula at `path` when the step fired
  FormulaPtr after;       // its replacement; strictly fewer nodes
};

struct ReductionTrace {
  FormulaPtr original;   // formula as given, possibly not in NNF
  FormulaPtr initial;    // nnf(original); replay starts here
  bool normalized;       // initial differs structurally from original
  std::vector<ReductionStep> steps;
  FormulaPtr final;
};

struct ReduceResult {
  FormulaPtr formula;
  ReductionTrace trace;
};

ReduceResult reduce(const FormulaPtr& f, Variant v);

class TraceError : public std::runtime_error {
 public:
  explicit TraceError(const std::string& what) : std::runtime_error("corrupted trace: " + what) {}
};

// Re-applies every step to trace.initial, validating path and before
// subformula at each step. Throws TraceError on any mismatch.
FormulaPtr replay(const ReductionTrace& trace);

}  // namespace ltlred

#endif  // LTLRED_REDUCE_HPP
