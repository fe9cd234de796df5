#include "ltlred/reduce.hpp"

#include "ltlred/nnf.hpp"

namespace ltlred {

const char* rule_name(RuleId r) {
  return r == RuleId::UntilRule ? "until" : "finally";
}

namespace {

// Bottom-up, left-to-right. Children are fully reduced before a rule is
// tried at the node; a rewrite replaces the node by its already reduced
// right (resp. only) child, so a single pass reaches the fixpoint.
FormulaPtr reduce_rec(const FormulaPtr& f, Variant v, std::vector<int>& path,
                      std::vector<ReductionStep>& steps) {
  FormulaPtr node = f;
  if (f->arity() == 1) {
    path.push_back(0);
    FormulaPtr c = reduce_rec(f->left(), v, path, steps);
    path.pop_back();
    if (c.get() != f->left().get()) {
      node = std::make_shared<Formula>(f->kind(), "", std::move(c), nullptr);
    }
  } else if (f->arity() == 2) {
    path.push_back(0);
    FormulaPtr l = reduce_rec(f->left(), v, path, steps);
    path.back() = 1;
    FormulaPtr r = reduce_rec(f->right(), v, path, steps);
    path.pop_back();
    if (l.get() != f->left().get() || r.get() != f->right().get()) {
      node = std::make_shared<Formula>(f->kind(), "", std::move(l), std::move(r));
    }
  }

  if (node->kind() == Kind::Until && is_pure_eventuality(node->right(), v)) {
    steps.push_back({RuleId::UntilRule, path, node, node->right()});
    return node->right();
  }
  if (node->kind() == Kind::Finally && is_pure_eventuality(node->left(), v)) {
    steps.push_back({RuleId::FinallyRule, path, node, node->left()});
    return node->left();
  }
  return node;
}

}  // namespace

ReduceResult reduce(const FormulaPtr& f, Variant v) {
  ReductionTrace trace;
  trace.original = f;
  trace.initial = is_nnf(f) ? f : nnf(f);
  trace.normalized = !equal(trace.original, trace.initial);

  std::vector<int> path;
  trace.final = reduce_rec(trace.initial, v, path, trace.steps);
  return {trace.final, std::move(trace)};
}

namespace {

FormulaPtr splice(const FormulaPtr& root, const std::vector<int>& path, std::size_t depth,
                  const FormulaPtr& before, const FormulaPtr& after) {
  if (depth == path.size()) {
    if (!equal(root, before))
      throw TraceError("before-subformula mismatch at '" + to_string(root) + "', expected '" +
                       to_string(before) + "'");
    return after;
  }
  int i = path[depth];
  if (i < 0 || i >= root->arity())
    throw TraceError("path index " + std::to_string(i) + " out of range at '" + to_string(root) + "'");
  FormulaPtr sub = splice(root->child(i), path, depth + 1, before, after);
  if (root->arity() == 1) return std::make_shared<Formula>(root->kind(), "", sub, nullptr);
  return i == 0 ? std::make_shared<Formula>(root->kind(), "", sub, root->right())
                : std::make_shared<Formula>(root->kind(), "", root->left(), sub);
}

}  // namespace

FormulaPtr replay(const ReductionTrace& trace) {
  FormulaPtr cur = trace.initial;
  for (const ReductionStep& s : trace.steps)
    cur = splice(cur, s.path, 0, s.before, s.after);
  if (!equal(cur, trace.final))
    throw TraceError("replayed result '" + to_string(cur) + "' differs from recorded final '" +
                     to_string(trace.final) + "'");
  return cur;
}

}  // namespace ltlred
