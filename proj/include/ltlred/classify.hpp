#ifndef LTLRED_CLASSIFY_HPP
#define LTLRED_CLASSIFY_HPP

#include <stdexcept>
#include <string>

#include "ltlred/formula.hpp"

namespace ltlred {

/* Three candidate definitions of the pure-eventuality class. All agree
 * on every clause except Until:
 *
 *   Buggy      p1 U g   with p1 pure eventuality, g arbitrary
 *   Corrected  p1 U p2  with both pure eventuality
 *   Patched    g U p1   with g arbitrary, p1 pure eventuality
 *
 * Shared clauses: F g (any g); p1|p2, p1&p2, p1 R p2 with both pure
 * eventuality; G p1, X p1 with p1 pure eventuality. Atoms, negated
 * atoms, and constants belong to no variant.
 */
enum class Variant { Buggy, Corrected, Patched };

const char* variant_name(Variant v);

// Raised when a classified formula is not in negation normal form.
class NotNnfError : public std::runtime_error {
 public:
  explicit NotNnfError(const std::string& offending_not)
      : std::runtime_error("formula is not in negation normal form: negation applied to non-atom in '" +
                           offending_not + "'") {}
};

// Syntactic membership test. Requires is_nnf(f); throws NotNnfError
// naming the offending Not subformula otherwise.
bool is_pure_eventuality(const FormulaPtr& f, Variant v);

}  // namespace ltlred

#endif  // LTLRED_CLASSIFY_HPP
