#include "ltlred/nnf.hpp"

namespace ltlred {

static FormulaPtr pos(const FormulaPtr& f);
static FormulaPtr neg(const FormulaPtr& f);

static FormulaPtr pos(const FormulaPtr& f) {
  switch (f->kind()) {
    case Kind::True:
    case Kind::False:
    case Kind::Atom:
      return f;
    case Kind::Not:
      return neg(f->left());
    case Kind::And:
      return f_and(pos(f->left()), pos(f->right()));
    case Kind::Or:
      return f_or(pos(f->left()), pos(f->right()));
    case Kind::Next:
      return f_next(pos(f->left()));
    case Kind::Until:
      return f_until(pos(f->left()), pos(f->right()));
    case Kind::Release:
      return f_release(pos(f->left()), pos(f->right()));
    case Kind::Finally:
      return f_finally(pos(f->left()));
    case Kind::Globally:
      return f_globally(pos(f->left()));
  }
  return f;
}

// NNF of the negation of f.
static FormulaPtr neg(const FormulaPtr& f) {
  switch (f->kind()) {
    case Kind::True:
      return f_false();
    case Kind::False:
      return f_true();
    case Kind::Atom:
      return f_not(f);
    case Kind::Not:
      return pos(f->left());
    case Kind::And:
      return f_or(neg(f->left()), neg(f->right()));
    case Kind::Or:
      return f_and(neg(f->left()), neg(f->right()));
    case Kind::Next:
      return f_next(neg(f->left()));
    case Kind::Until:
      return f_release(neg(f->left()), neg(f->right()));
    case Kind::Release:
      return f_until(neg(f->left()), neg(f->right()));
    case Kind::Finally:
      return f_globally(neg(f->left()));
    case Kind::Globally:
      return f_finally(neg(f->left()));
  }
  return f;
}

FormulaPtr nnf(const FormulaPtr& f) { return pos(f); }

}  // namespace ltlred
