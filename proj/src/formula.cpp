#include "ltlred/formula.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ltlred {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Atom: return "atom";
    case Kind::Not: return "not";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Next: return "next";
    case Kind::Until: return "until";
    case Kind::Release: return "release";
    case Kind::Finally: return "finally";
    case Kind::Globally: return "globally";
  }
  return "?";
}

int Formula::arity() const {
  switch (kind_) {
    case Kind::True:
    case Kind::False:
    case Kind::Atom:
      return 0;
    case Kind::Not:
    case Kind::Next:
    case Kind::Finally:
    case Kind::Globally:
      return 1;
    default:
      return 2;
  }
}

const FormulaPtr& Formula::child(int i) const {
  assert(i >= 0 && i < arity());
  return i == 0 ? left_ : right_;
}

bool valid_atom_name(const std::string& name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "true" && name != "false" && name != "tt" && name != "ff";
}

FormulaPtr f_true() {
  static const FormulaPtr t = std::make_shared<Formula>(Kind::True, "", nullptr, nullptr);
  return t;
}

FormulaPtr f_false() {
  static const FormulaPtr f = std::make_shared<Formula>(Kind::False, "", nullptr, nullptr);
  return f;
}

FormulaPtr f_atom(const std::string& name) {
  if (!valid_atom_name(name))
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  return std::make_shared<Formula>(Kind::Atom, name, nullptr, nullptr);
}

static FormulaPtr unary(Kind k, FormulaPtr c) {
  assert(c);
  return std::make_shared<Formula>(k, "", std::move(c), nullptr);
}

static FormulaPtr binary(Kind k, FormulaPtr l, FormulaPtr r) {
  assert(l && r);
  return std::make_shared<Formula>(k, "", std::move(l), std::move(r));
}

FormulaPtr f_not(FormulaPtr c) { return unary(Kind::Not, std::move(c)); }
FormulaPtr f_next(FormulaPtr c) { return unary(Kind::Next, std::move(c)); }
FormulaPtr f_finally(FormulaPtr c) { return unary(Kind::Finally, std::move(c)); }
FormulaPtr f_globally(FormulaPtr c) { return unary(Kind::Globally, std::move(c)); }
FormulaPtr f_and(FormulaPtr l, FormulaPtr r) { return binary(Kind::And, std::move(l), std::move(r)); }
FormulaPtr f_or(FormulaPtr l, FormulaPtr r) { return binary(Kind::Or, std::move(l), std::move(r)); }
FormulaPtr f_until(FormulaPtr l, FormulaPtr r) { return binary(Kind::Until, std::move(l), std::move(r)); }
FormulaPtr f_release(FormulaPtr l, FormulaPtr r) { return binary(Kind::Release, std::move(l), std::move(r)); }

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->arity()) {
    case 0:
      return a->kind() != Kind::Atom || a->atom_name() == b->atom_name();
    case 1:
      return equal(a->left(), b->left());
    default:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
  }
}

std::size_t size(const FormulaPtr& f) {
  std::size_t n = 1;
  for (int i = 0; i < f->arity(); ++i) n += size(f->child(i));
  return n;
}

bool is_nnf(const FormulaPtr& f) {
  if (f->kind() == Kind::Not) return f->left()->kind() == Kind::Atom;
  for (int i = 0; i < f->arity(); ++i)
    if (!is_nnf(f->child(i))) return false;
  return true;
}

static void collect_atoms(const FormulaPtr& f, std::vector<std::string>& out) {
  if (f->kind() == Kind::Atom) out.push_back(f->atom_name());
  for (int i = 0; i < f->arity(); ++i) collect_atoms(f->child(i), out);
}

std::vector<std::string> atoms(const FormulaPtr& f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/* Printer precedence (high binds tighter):
 *   4  atoms, constants
 *   3  ! X F G
 *   2  U R      (right-associative)
 *   1  &
 *   0  |
 * Unary temporal subterms of binary operators are parenthesized even
 * where precedence alone would disambiguate, matching the customary
 * "(F b) U c" notation.
 */
static int prec(Kind k) {
  switch (k) {
    case Kind::Or: return 0;
    case Kind::And: return 1;
    case Kind::Until:
    case Kind::Release: return 2;
    case Kind::Not:
    case Kind::Next:
    case Kind::Finally:
    case Kind::Globally: return 3;
    default: return 4;
  }
}

static void print_rec(const FormulaPtr& f, std::string& out);

static void print_child(const FormulaPtr& c, int parent_prec, bool tight, std::string& out) {
  int cp = prec(c->kind());
  bool parens = cp < parent_prec || (cp == parent_prec && tight);
  // unary operand of a binary operator
  if (cp == 3 && parent_prec <= 2) parens = true;
  if (parens) out += '(';
  print_rec(c, out);
  if (parens) out += ')';
}

static void print_rec(const FormulaPtr& f, std::string& out) {
  switch (f->kind()) {
    case Kind::True: out += "true"; return;
    case Kind::False: out += "false"; return;
    case Kind::Atom: out += f->atom_name(); return;
    case Kind::Not:
      out += '!';
      print_child(f->left(), 4, false, out);
      return;
    case Kind::Next:
    case Kind::Finally:
    case Kind::Globally:
      out += f->kind() == Kind::Next ? 'X' : f->kind() == Kind::Finally ? 'F' : 'G';
      out += ' ';
      print_child(f->left(), 3, false, out);
      return;
    case Kind::Until:
    case Kind::Release:
      print_child(f->left(), 2, true, out);
      out += f->kind() == Kind::Until ? " U " : " R ";
      print_child(f->right(), 2, false, out);
      return;
    case Kind::And:
      print_child(f->left(), 1, false, out);
      out += " & ";
      print_child(f->right(), 1, true, out);
      return;
    case Kind::Or:
      print_child(f->left(), 0, false, out);
      out += " | ";
      print_child(f->right(), 0, true, out);
      return;
  }
}

std::string to_string(const FormulaPtr& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

}  // namespace ltlred
