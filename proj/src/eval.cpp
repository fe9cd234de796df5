#include "ltlred/eval.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <utility>

namespace ltlred {

int CompiledFormula::flatten(const FormulaPtr& f) {
  Node n;
  n.kind = f->kind();
  if (f->arity() >= 1) n.a = flatten(f->left());
  if (f->arity() == 2) n.b = flatten(f->right());
  if (f->kind() == Kind::Atom) {
    auto it = std::lower_bound(props_.begin(), props_.end(), f->atom_name());
    if (it != props_.end() && *it == f->atom_name())
      n.prop = static_cast<int>(it - props_.begin());
  }
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size() - 1);
}

CompiledFormula::CompiledFormula(const FormulaPtr& f, const std::vector<std::string>& props)
    : props_(props) {
  assert(std::is_sorted(props_.begin(), props_.end()));
  flatten(f);
}

std::uint32_t CompiledFormula::letter_mask(const Letter& l) const {
  std::uint32_t mask = 0;
  for (std::size_t j = 0; j < props_.size(); ++j)
    if (l.count(props_[j])) mask |= 1u << j;
  return mask;
}

void CompiledFormula::loop_table(const std::vector<std::uint32_t>& period,
                                 std::vector<State>& table) const {
  const std::size_t q = period.size();
  assert(q >= 1);
  table.assign(nodes_.size(), State(q, 0));
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    const Node& nd = nodes_[n];
    State& row = table[n];
    switch (nd.kind) {
      case Kind::True:
        row.assign(q, 1);
        break;
      case Kind::False:
        break;
      case Kind::Atom:
        for (std::size_t j = 0; j < q; ++j)
          row[j] = nd.prop >= 0 && (period[j] >> nd.prop & 1u) ? 1 : 0;
        break;
      case Kind::Not:
        for (std::size_t j = 0; j < q; ++j) row[j] = !table[nd.a][j];
        break;
      case Kind::And:
        for (std::size_t j = 0; j < q; ++j) row[j] = table[nd.a][j] & table[nd.b][j];
        break;
      case Kind::Or:
        for (std::size_t j = 0; j < q; ++j) row[j] = table[nd.a][j] | table[nd.b][j];
        break;
      case Kind::Next:
        for (std::size_t j = 0; j < q; ++j) row[j] = table[nd.a][(j + 1) % q];
        break;
      case Kind::Until:
      case Kind::Finally: {
        // least fixpoint: start all-false, sweep until stable
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t j = q; j-- > 0;) {
            std::uint8_t nxt = row[(j + 1) % q];
            std::uint8_t v = nd.kind == Kind::Until
                                 ? static_cast<std::uint8_t>(table[nd.b][j] | (table[nd.a][j] & nxt))
                                 : static_cast<std::uint8_t>(table[nd.a][j] | nxt);
            if (v != row[j]) {
              row[j] = v;
              changed = true;
            }
          }
        }
        break;
      }
      case Kind::Release:
      case Kind::Globally: {
        // greatest fixpoint: start all-true
        row.assign(q, 1);
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t j = q; j-- > 0;) {
            std::uint8_t nxt = row[(j + 1) % q];
            std::uint8_t v = nd.kind == Kind::Release
                                 ? static_cast<std::uint8_t>(table[nd.b][j] & (table[nd.a][j] | nxt))
                                 : static_cast<std::uint8_t>(table[nd.a][j] & nxt);
            if (v != row[j]) {
              row[j] = v;
              changed = true;
            }
          }
        }
        break;
      }
    }
  }
}

CompiledFormula::State CompiledFormula::loop_entry(const std::vector<std::uint32_t>& period) const {
  std::vector<State> table;
  loop_table(period, table);
  State s(nodes_.size());
  for (std::size_t n = 0; n < nodes_.size(); ++n) s[n] = table[n][0];
  return s;
}

void CompiledFormula::step(std::uint32_t letter, const State& next, State& out) const {
  assert(next.size() == nodes_.size());
  out.resize(nodes_.size());
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    const Node& nd = nodes_[n];
    switch (nd.kind) {
      case Kind::True: out[n] = 1; break;
      case Kind::False: out[n] = 0; break;
      case Kind::Atom: out[n] = nd.prop >= 0 && (letter >> nd.prop & 1u) ? 1 : 0; break;
      case Kind::Not: out[n] = !out[nd.a]; break;
      case Kind::And: out[n] = out[nd.a] & out[nd.b]; break;
      case Kind::Or: out[n] = out[nd.a] | out[nd.b]; break;
      case Kind::Next: out[n] = next[nd.a]; break;
      case Kind::Until: out[n] = out[nd.b] | (out[nd.a] & next[n]); break;
      case Kind::Release: out[n] = out[nd.b] & (out[nd.a] | next[n]); break;
      case Kind::Finally: out[n] = out[nd.a] | next[n]; break;
      case Kind::Globally: out[n] = out[nd.a] & next[n]; break;
    }
  }
}

bool eval(const FormulaPtr& f, const LassoWord& w, std::size_t i) {
  const std::size_t p = w.prefix.size();
  const std::size_t q = w.period.size();
  assert(q >= 1);
  CompiledFormula cf(f, atoms(f));

  std::vector<std::uint32_t> period(q);
  for (std::size_t j = 0; j < q; ++j) period[j] = cf.letter_mask(w.period[j]);

  if (i >= p) {
    std::vector<CompiledFormula::State> table;
    cf.loop_table(period, table);
    return table.back()[(i - p) % q] != 0;
  }

  // backward through the prefix from the loop entry
  CompiledFormula::State state = cf.loop_entry(period);
  CompiledFormula::State scratch;
  for (std::size_t j = p; j-- > i;) {
    cf.step(cf.letter_mask(w.prefix[j]), state, scratch);
    state.swap(scratch);
  }
  return cf.top(state);
}

namespace {

// Independent reference evaluator; shares nothing with the table-based
// path above beyond the Formula type itself.
class RefEval {
 public:
  explicit RefEval(const LassoWord& w) : w_(w) {}

  bool sat(const FormulaPtr& f, std::size_t i) {
    i = norm(i);
    switch (f->kind()) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Atom: return w_.at(i).count(f->atom_name()) != 0;
      case Kind::Not: return !sat(f->left(), i);
      case Kind::And: return sat(f->left(), i) && sat(f->right(), i);
      case Kind::Or: return sat(f->left(), i) || sat(f->right(), i);
      case Kind::Next: return sat(f->left(), i + 1);
      case Kind::Until:
      case Kind::Finally:
        return fixpoint(f, i, /*on_revisit=*/false);
      case Kind::Release:
      case Kind::Globally:
        return fixpoint(f, i, /*on_revisit=*/true);
    }
    return false;
  }

 private:
  std::size_t norm(std::size_t i) const {
    const std::size_t p = w_.prefix.size();
    return i < p ? i : p + (i - p) % w_.period.size();
  }

  bool fixpoint(const FormulaPtr& f, std::size_t i, bool on_revisit) {
    Key key{f.get(), i};
    auto memo = memo_.find(key);
    if (memo != memo_.end()) return memo->second;
    if (!active_.insert(key).second) return on_revisit;

    bool r;
    switch (f->kind()) {
      case Kind::Until:
        r = sat(f->right(), i) || (sat(f->left(), i) && sat(f, i + 1));
        break;
      case Kind::Finally:
        r = sat(f->left(), i) || sat(f, i + 1);
        break;
      case Kind::Release:
        r = sat(f->right(), i) && (sat(f->left(), i) || sat(f, i + 1));
        break;
      default:  // Globally
        r = sat(f->left(), i) && sat(f, i + 1);
        break;
    }
    active_.erase(key);
    memo_[key] = r;
    return r;
  }

  using Key = std::pair<const Formula*, std::size_t>;
  const LassoWord& w_;
  std::map<Key, bool> memo_;
  std::set<Key> active_;
};

}  // namespace

bool eval_reference(const FormulaPtr& f, const LassoWord& w, std::size_t i) {
  return RefEval(w).sat(f, i);
}

}  // namespace ltlred
