#include "ltlred/classify.hpp"

namespace ltlred {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Buggy: return "buggy";
    case Variant::Corrected: return "corrected";
    case Variant::Patched: return "patched";
  }
  return "?";
}

static void require_nnf(const FormulaPtr& f) {
  if (f->kind() == Kind::Not && f->left()->kind() != Kind::Atom)
    throw NotNnfError(to_string(f));
  for (int i = 0; i < f->arity(); ++i) require_nnf(f->child(i));
}

static bool pe(const FormulaPtr& f, Variant v) {
  switch (f->kind()) {
    case Kind::Finally:
      return true;  // F g for arbitrary g
    case Kind::And:
    case Kind::Or:
    case Kind::Release:
      return pe(f->left(), v) && pe(f->right(), v);
    case Kind::Globally:
    case Kind::Next:
      return pe(f->left(), v);
    case Kind::Until:
      switch (v) {
        case Variant::Buggy: return pe(f->left(), v);
        case Variant::Corrected: return pe(f->left(), v) && pe(f->right(), v);
        case Variant::Patched: return pe(f->right(), v);
      }
      return false;
    default:
      // atoms, negated atoms, constants
      return false;
  }
}

bool is_pure_eventuality(const FormulaPtr& f, Variant v) {
  require_nnf(f);
  return pe(f, v);
}

}  // namespace ltlred
