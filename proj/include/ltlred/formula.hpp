#ifndef LTLRED_FORMULA_HPP
#define LTLRED_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace ltlred {

// Node kinds of the LTL AST. Finally and Globally are primitive, never
// desugared to Until/Release: the pure-eventuality classes pivot on the
// syntactic form "F phi".
enum class Kind {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Next,
  Until,
  Release,
  Finally,
  Globally,
};

const char* kind_name(Kind k);

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula node. Unary operators keep their child in left().
class Formula {
 public:
  Kind kind() const { return kind_; }
  const std::string& atom_name() const { return atom_; }
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }

  // 0 for leaves, 1 for unary, 2 for binary.
  int arity() const;
  const FormulaPtr& child(int i) const;

  Formula(Kind k, std::string atom, FormulaPtr l, FormulaPtr r)
      : kind_(k), atom_(std::move(atom)), left_(std::move(l)), right_(std::move(r)) {}

 private:
  Kind kind_;
  std::string atom_;
  FormulaPtr left_;
  FormulaPtr right_;
};

// Atom names must match [a-z][a-z0-9_]* and must not collide with the
// constant keywords.
bool valid_atom_name(const std::string& name);

FormulaPtr f_true();
FormulaPtr f_false();
FormulaPtr f_atom(const std::string& name);  // throws std::invalid_argument
FormulaPtr f_not(FormulaPtr c);
FormulaPtr f_and(FormulaPtr l, FormulaPtr r);
FormulaPtr f_or(FormulaPtr l, FormulaPtr r);
FormulaPtr f_next(FormulaPtr c);
FormulaPtr f_until(FormulaPtr l, FormulaPtr r);
FormulaPtr f_release(FormulaPtr l, FormulaPtr r);
FormulaPtr f_finally(FormulaPtr c);
FormulaPtr f_globally(FormulaPtr c);

// Structural equality; the only formula equality in this library.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Total number of AST nodes, >= 1.
std::size_t size(const FormulaPtr& f);

// True iff every Not node has an Atom child.
bool is_nnf(const FormulaPtr& f);

// Sorted, duplicate-free list of atom names occurring in f.
std::vector<std::string> atoms(const FormulaPtr& f);

// Canonical concrete syntax; parse(to_string(f)) == f structurally.
std::string to_string(const FormulaPtr& f);

}  // namespace ltlred

#endif  // LTLRED_FORMULA_HPP
