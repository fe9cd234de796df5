#ifndef LTLRED_GEN_HPP
#define LTLRED_GEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ltlred/check.hpp"
#include "ltlred/formula.hpp"

namespace ltlred {

// Relative frequency of each node kind during random generation.
// Temporal operators default to twice the propositional weight so
// reducible nestings (pure eventualities under U or F) show up quickly.
struct OperatorWeights {
  unsigned atom = 4;
  unsigned true_const = 1;
  unsigned false_const = 1;
  unsigned not_op = 2;
  unsigned and_op = 2;
  unsigned or_op = 2;
  unsigned next_op = 4;
  unsigned until_op = 4;
  unsigned release_op = 4;
  unsigned finally_op = 4;
  unsigned globally_op = 4;
};

struct FuzzConfig {
  std::uint64_t seed = 42;
  int count = 100;
  int max_depth = 6;
  std::vector<std::string> props = {"a", "b", "c"};
  OperatorWeights weights;
  Bounds bounds;
};

// Throws std::invalid_argument describing the first violated constraint.
void validate(const FuzzConfig& config);

// Deterministic for a fixed (seed, config); respects max_depth. Output
// is syntactically valid but not necessarily in NNF.
FormulaPtr gen_formula(std::uint64_t seed, const FuzzConfig& config);

}  // namespace ltlred

#endif  // LTLRED_GEN_HPP
