#ifndef LTLRED_CHECK_HPP
#define LTLRED_CHECK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltlred/formula.hpp"
#include "ltlred/word.hpp"

namespace ltlred {

// Enumeration bounds for the semantic oracle. Defaults cover every
// counterexample this library needs (prefix 1, period 1) with headroom
// while keeping exhaustive scans cheap.
struct Bounds {
  int max_props = 3;   // alphabet cap: at most this many propositions
  int max_prefix = 3;
  int max_period = 3;
  int max_append = 2;  // appended-prefix length for the closure check
};

// Outcome of a bounded check. Never a proof: pass only means no
// counterexample exists within the stated bounds.
struct Verdict {
  bool pass = true;
  Bounds bounds;
  std::string tag;                     // which discrepancy was found
  std::optional<LassoWord> witness;    // word exhibiting it
  std::vector<Letter> appended;        // closure check: the prepended letters

  explicit operator bool() const { return pass; }
  std::string describe() const;
};

// Deterministic stream of every lasso word with |prefix| <= max_prefix,
// 1 <= |period| <= max_period, letters drawn from the powerset of
// props. Order: prefix length ascending, then period length ascending,
// then the concatenated letter tuple lexicographically (leftmost letter
// most significant; letters ordered by their bitmask over sorted props).
class LassoEnumerator {
 public:
  LassoEnumerator(std::vector<std::string> props, int max_prefix, int max_period);

  bool next(LassoWord& out);

  // Total number of words the stream yields.
  static unsigned long long count(std::size_t n_props, int max_prefix, int max_period);

 private:
  std::vector<std::string> props_;
  int max_prefix_;
  int max_period_;
  int m_ = 0;
  int p_ = 1;
  bool done_ = false;
  std::vector<std::uint32_t> tuple_;  // prefix letters then period letters
};

// Alphabet used by the pairwise checks: union of the propositions of f
// and g, capped at bounds.max_props (alphabetically first ones win).
std::vector<std::string> check_alphabet(const FormulaPtr& f, const FormulaPtr& g,
                                        const Bounds& bounds);

// First enumerated word on which f and g disagree at position 0, else
// pass-up-to-bound.
Verdict equivalent_bounded(const FormulaPtr& f, const FormulaPtr& g, const Bounds& bounds = {});

// Like equivalent_bounded but flags only words with f true and g false.
Verdict implies_bounded(const FormulaPtr& f, const FormulaPtr& g, const Bounds& bounds = {});

// Left-append closure: for every enumerated word w satisfying f and
// every letter sequence v with 1 <= |v| <= bounds.max_append, checks
// that v.w still satisfies f. The alphabet is the propositions of f
// extended by one fresh proposition when the cap allows, so a genuinely
// foreign letter can be prepended. Appended sequences are tried shortest
// first and, per length, in descending letter order.
Verdict left_append_closed_bounded(const FormulaPtr& f, const Bounds& bounds = {});

}  // namespace ltlred

#endif  // LTLRED_CHECK_HPP
