#ifndef LTLRED_EVAL_HPP
#define LTLRED_EVAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ltlred/formula.hpp"
#include "ltlred/word.hpp"

namespace ltlred {

// Satisfaction of f at position i of w, standard LTL semantics.
// Computed exactly via a per-subformula satisfaction table over the
// positions 0..|prefix|+|period|-1: Until/Finally as least fixpoints
// over the loop, Release/Globally as greatest fixpoints, Next wrapping
// from the last loop position to the loop start. Prefix values follow
// by backward propagation. Positions beyond the table are answered
// modulo the period.
bool eval(const FormulaPtr& f, const LassoWord& w, std::size_t i);

// Same contract as eval, structurally different algorithm: top-down
// memoized recursion over (subformula, normalized position), answering
// false on cycle revisit for Until/Finally and true for
// Release/Globally. Cross-check oracle; keep independent of eval.
bool eval_reference(const FormulaPtr& f, const LassoWord& w, std::size_t i);

/* Compiled evaluation machinery shared by the bounded checkers.
 *
 * A formula is flattened to a postorder node array over a fixed
 * proposition list; letters become bitmasks over that list. A State
 * holds the truth of every subformula at one position. Loop states come
 * from the fixpoint table over the period; prepending a letter to a
 * known state is a single backward step. This makes scanning millions
 * of enumerated lassos cheap: neighbouring words share period tables
 * and all appended-prefix work is incremental.
 */
class CompiledFormula {
 public:
  using State = std::vector<std::uint8_t>;

  CompiledFormula(const FormulaPtr& f, const std::vector<std::string>& props);

  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<std::string>& props() const { return props_; }

  std::uint32_t letter_mask(const Letter& l) const;

  // Fixpoint table over loop positions 0..|period|-1; table[n][j] is
  // the truth of node n at loop position j.
  void loop_table(const std::vector<std::uint32_t>& period,
                  std::vector<State>& table) const;

  // State at the first loop position.
  State loop_entry(const std::vector<std::uint32_t>& period) const;

  // State at a position from its letter and the state at the successor
  // position.
  void step(std::uint32_t letter, const State& next, State& out) const;

  bool top(const State& s) const { return s.back() != 0; }

 private:
  struct Node {
    Kind kind;
    int a = -1;      // left/only child, index into nodes_
    int b = -1;      // right child
    int prop = -1;   // Kind::Atom: bit index into props_, -1 if absent
  };

  int flatten(const FormulaPtr& f);

  std::vector<Node> nodes_;  // postorder, root last
  std::vector<std::string> props_;
};

}  // namespace ltlred

#endif  // LTLRED_EVAL_HPP
