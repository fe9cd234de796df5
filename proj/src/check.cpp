#include "ltlred/check.hpp"

#include <algorithm>
#include <cassert>

#include "ltlred/eval.hpp"

namespace ltlred {

std::string Verdict::describe() const {
  if (pass)
    return "pass up to bounds (max_prefix=" + std::to_string(bounds.max_prefix) +
           ", max_period=" + std::to_string(bounds.max_period) +
           ", max_append=" + std::to_string(bounds.max_append) + ")";
  std::string out = "counterexample";
  if (!tag.empty()) out += " (" + tag + ")";
  if (witness) {
    out += ": word ";
    if (!appended.empty()) {
      std::string v;
      for (std::size_t i = 0; i < appended.size(); ++i) {
        if (i) v += ';';
        v += to_string(appended[i]);
      }
      out += v + " prepended to ";
    }
    out += to_string(*witness);
  }
  return out;
}

namespace {

Letter letter_from_mask(std::uint32_t mask, const std::vector<std::string>& props) {
  Letter l;
  for (std::size_t j = 0; j < props.size(); ++j)
    if (mask >> j & 1u) l.insert(props[j]);
  return l;
}

LassoWord word_from_masks(const std::vector<std::uint32_t>& prefix,
                          const std::vector<std::uint32_t>& period,
                          const std::vector<std::string>& props) {
  LassoWord w;
  for (std::uint32_t m : prefix) w.prefix.push_back(letter_from_mask(m, props));
  for (std::uint32_t m : period) w.period.push_back(letter_from_mask(m, props));
  return w;
}

using State = CompiledFormula::State;

/* Canonical scan over every lasso within bounds, in LassoEnumerator
 * order. For each word the callback receives the letter tuples and the
 * position-0 state of every compiled formula. Period entry states are
 * shared across all prefixes; prefix positions are filled by backward
 * steps. The callback returns true to stop the scan.
 */
template <class Fn>
void scan_words(const std::vector<const CompiledFormula*>& cfs, std::size_t letters,
                int max_prefix, int max_period, Fn&& visit) {
  const std::size_t nf = cfs.size();
  // entry states per period length, computed once and reused for all
  // prefix lengths: entries[f][p-1][period_index]
  std::vector<std::vector<std::vector<State>>> entries(nf);
  for (std::size_t f = 0; f < nf; ++f) entries[f].resize(max_period);

  std::vector<std::uint32_t> period, prefix;
  std::vector<State> fronts(nf), scratch(nf);

  for (int m = 0; m <= max_prefix; ++m) {
    for (int p = 1; p <= max_period; ++p) {
      std::uint64_t n_periods = 1;
      for (int j = 0; j < p; ++j) n_periods *= letters;

      for (std::size_t f = 0; f < nf; ++f) {
        if (!entries[f][p - 1].empty()) continue;
        entries[f][p - 1].reserve(n_periods);
        for (std::uint64_t idx = 0; idx < n_periods; ++idx) {
          period.resize(p);
          std::uint64_t rest = idx;
          for (int j = p - 1; j >= 0; --j) {
            period[j] = static_cast<std::uint32_t>(rest % letters);
            rest /= letters;
          }
          entries[f][p - 1].push_back(cfs[f]->loop_entry(period));
        }
      }

      prefix.assign(m, 0);
      while (true) {
        for (std::uint64_t idx = 0; idx < n_periods; ++idx) {
          period.resize(p);
          std::uint64_t rest = idx;
          for (int j = p - 1; j >= 0; --j) {
            period[j] = static_cast<std::uint32_t>(rest % letters);
            rest /= letters;
          }
          for (std::size_t f = 0; f < nf; ++f) {
            fronts[f] = entries[f][p - 1][idx];
            for (int j = m; j-- > 0;) {
              cfs[f]->step(prefix[j], fronts[f], scratch[f]);
              fronts[f].swap(scratch[f]);
            }
          }
          if (visit(prefix, period, fronts)) return;
        }
        // next prefix tuple, rightmost digit fastest
        int j = m - 1;
        while (j >= 0 && prefix[j] + 1 == letters) prefix[j--] = 0;
        if (j < 0) break;
        ++prefix[j];
      }
    }
  }
}

std::vector<std::string> capped_union(std::vector<std::string> names, int cap) {
  if (static_cast<int>(names.size()) > cap) names.resize(cap);
  return names;
}

}  // namespace

std::vector<std::string> check_alphabet(const FormulaPtr& f, const FormulaPtr& g,
                                        const Bounds& bounds) {
  std::vector<std::string> names = atoms(f);
  if (g) {
    std::vector<std::string> gb = atoms(g);
    names.insert(names.end(), gb.begin(), gb.end());
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
  }
  return capped_union(std::move(names), bounds.max_props);
}

namespace {

Verdict pairwise_scan(const FormulaPtr& f, const FormulaPtr& g, const Bounds& bounds,
                      bool implication_only) {
  Verdict v;
  v.bounds = bounds;
  if (equal(f, g)) return v;  // trivially no distinguishing word

  std::vector<std::string> props = check_alphabet(f, g, bounds);
  CompiledFormula cf(f, props), cg(g, props);
  const std::size_t letters = std::size_t{1} << props.size();

  scan_words({&cf, &cg}, letters, bounds.max_prefix, bounds.max_period,
             [&](const std::vector<std::uint32_t>& prefix, const std::vector<std::uint32_t>& period,
                 const std::vector<State>& fronts) {
               bool fv = cf.top(fronts[0]);
               bool gv = cg.top(fronts[1]);
               bool bad = implication_only ? (fv && !gv) : (fv != gv);
               if (!bad) return false;
               v.pass = false;
               v.tag = std::string("left=") + (fv ? "true" : "false") + ", right=" +
                       (gv ? "true" : "false");
               v.witness = word_from_masks(prefix, period, props);
               return true;
             });
  return v;
}

}  // namespace

Verdict equivalent_bounded(const FormulaPtr& f, const FormulaPtr& g, const Bounds& bounds) {
  return pairwise_scan(f, g, bounds, /*implication_only=*/false);
}

Verdict implies_bounded(const FormulaPtr& f, const FormulaPtr& g, const Bounds& bounds) {
  return pairwise_scan(f, g, bounds, /*implication_only=*/true);
}

Verdict left_append_closed_bounded(const FormulaPtr& f, const Bounds& bounds) {
  assert(bounds.max_append >= 1);
  Verdict v;
  v.bounds = bounds;

  std::vector<std::string> props = capped_union(atoms(f), bounds.max_props);
  if (static_cast<int>(props.size()) < bounds.max_props) {
    // one fresh proposition so a letter foreign to f can be prepended
    for (char c = 'a'; c <= 'z'; ++c) {
      std::string name(1, c);
      if (!std::binary_search(props.begin(), props.end(), name)) {
        props.push_back(name);
        break;
      }
    }
    std::sort(props.begin(), props.end());
  }

  CompiledFormula cf(f, props);
  const std::size_t letters = std::size_t{1} << props.size();

  State state, scratch;
  std::vector<std::uint32_t> vseq;
  scan_words({&cf}, letters, bounds.max_prefix, bounds.max_period,
             [&](const std::vector<std::uint32_t>& prefix, const std::vector<std::uint32_t>& period,
                 const std::vector<State>& fronts) {
               if (!cf.top(fronts[0])) return false;
               for (int len = 1; len <= bounds.max_append; ++len) {
                 vseq.assign(len, static_cast<std::uint32_t>(letters - 1));
                 while (true) {
                   state = fronts[0];
                   for (int j = len; j-- > 0;) {
                     cf.step(vseq[j], state, scratch);
                     state.swap(scratch);
                   }
                   if (!cf.top(state)) {
                     v.pass = false;
                     v.tag = "word satisfies the formula but the prepended word does not";
                     v.witness = word_from_masks(prefix, period, props);
                     for (std::uint32_t m : vseq) v.appended.push_back(letter_from_mask(m, props));
                     return true;
                   }
                   int j = len - 1;
                   while (j >= 0 && vseq[j] == 0) vseq[j--] = static_cast<std::uint32_t>(letters - 1);
                   if (j < 0) break;
                   --vseq[j];
                 }
               }
               return false;
             });
  return v;
}

LassoEnumerator::LassoEnumerator(std::vector<std::string> props, int max_prefix, int max_period)
    : props_(std::move(props)), max_prefix_(max_prefix), max_period_(max_period) {
  assert(max_period_ >= 1);
  std::sort(props_.begin(), props_.end());
  tuple_.assign(1, 0);  // m=0, p=1
}

bool LassoEnumerator::next(LassoWord& out) {
  if (done_) return false;
  const std::size_t letters = std::size_t{1} << props_.size();

  out.prefix.clear();
  out.period.clear();
  for (int j = 0; j < m_; ++j) out.prefix.push_back(letter_from_mask(tuple_[j], props_));
  for (int j = m_; j < m_ + p_; ++j) out.period.push_back(letter_from_mask(tuple_[j], props_));

  // advance: tuple odometer, then period length, then prefix length
  int j = m_ + p_ - 1;
  while (j >= 0 && tuple_[j] + 1 == letters) tuple_[j--] = 0;
  if (j >= 0) {
    ++tuple_[j];
    return true;
  }
  if (p_ < max_period_) {
    ++p_;
  } else if (m_ < max_prefix_) {
    ++m_;
    p_ = 1;
  } else {
    done_ = true;
    return true;
  }
  tuple_.assign(m_ + p_, 0);
  return true;
}

unsigned long long LassoEnumerator::count(std::size_t n_props, int max_prefix, int max_period) {
  const unsigned long long letters = 1ull << n_props;
  unsigned long long total = 0;
  for (int m = 0; m <= max_prefix; ++m) {
    for (int p = 1; p <= max_period; ++p) {
      unsigned long long words = 1;
      for (int j = 0; j < m + p; ++j) words *= letters;
      total += words;
    }
  }
  return total;
}

}  // namespace ltlred
