#ifndef LTLRED_NNF_HPP
#define LTLRED_NNF_HPP

#include "ltlred/formula.hpp"

namespace ltlred {

// Negation normal form: pushes Not inward until it sits on atoms only,
// via the temporal dualities !(p U q) = !p R !q, !(p R q) = !p U !q,
// !X p = X !p, !F p = G !p, !G p = F !p, De Morgan, !!p = p, and
// constant flipping. Semantics-preserving; idempotent.
FormulaPtr nnf(const FormulaPtr& f);

}  // namespace ltlred

#endif  // LTLRED_NNF_HPP
