#include "ltlred/gen.hpp"

#include <array>
#include <stdexcept>

namespace ltlred {

void validate(const FuzzConfig& config) {
  if (config.count < 1) throw std::invalid_argument("config: count must be >= 1");
  if (config.max_depth < 1) throw std::invalid_argument("config: max_depth must be >= 1");
  if (config.props.empty()) throw std::invalid_argument("config: proposition pool is empty");
  for (const std::string& p : config.props)
    if (!valid_atom_name(p)) throw std::invalid_argument("config: invalid proposition '" + p + "'");
  const OperatorWeights& w = config.weights;
  if (w.atom + w.true_const + w.false_const == 0)
    throw std::invalid_argument("config: at least one leaf weight must be positive");
  if (config.bounds.max_period < 1) throw std::invalid_argument("config: max_period must be >= 1");
  if (config.bounds.max_append < 1) throw std::invalid_argument("config: max_append must be >= 1");
}

namespace {

// splitmix64; fixed algorithm so reports are reproducible across
// standard libraries.
struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

FormulaPtr gen_rec(Rng& rng, const FuzzConfig& cfg, int depth) {
  const OperatorWeights& w = cfg.weights;
  const bool leaf_only = depth >= cfg.max_depth;

  struct Choice {
    Kind kind;
    unsigned weight;
  };
  std::array<Choice, 11> choices = {{
      {Kind::Atom, w.atom},
      {Kind::True, w.true_const},
      {Kind::False, w.false_const},
      {Kind::Not, leaf_only ? 0 : w.not_op},
      {Kind::And, leaf_only ? 0 : w.and_op},
      {Kind::Or, leaf_only ? 0 : w.or_op},
      {Kind::Next, leaf_only ? 0 : w.next_op},
      {Kind::Until, leaf_only ? 0 : w.until_op},
      {Kind::Release, leaf_only ? 0 : w.release_op},
      {Kind::Finally, leaf_only ? 0 : w.finally_op},
      {Kind::Globally, leaf_only ? 0 : w.globally_op},
  }};

  std::uint64_t total = 0;
  for (const Choice& c : choices) total += c.weight;
  std::uint64_t pick = rng.below(total);
  Kind kind = Kind::Atom;
  for (const Choice& c : choices) {
    if (pick < c.weight) {
      kind = c.kind;
      break;
    }
    pick -= c.weight;
  }

  switch (kind) {
    case Kind::True: return f_true();
    case Kind::False: return f_false();
    case Kind::Atom: return f_atom(cfg.props[rng.below(cfg.props.size())]);
    case Kind::Not: return f_not(gen_rec(rng, cfg, depth + 1));
    case Kind::Next: return f_next(gen_rec(rng, cfg, depth + 1));
    case Kind::Finally: return f_finally(gen_rec(rng, cfg, depth + 1));
    case Kind::Globally: return f_globally(gen_rec(rng, cfg, depth + 1));
    case Kind::And: return f_and(gen_rec(rng, cfg, depth + 1), gen_rec(rng, cfg, depth + 1));
    case Kind::Or: return f_or(gen_rec(rng, cfg, depth + 1), gen_rec(rng, cfg, depth + 1));
    case Kind::Until: return f_until(gen_rec(rng, cfg, depth + 1), gen_rec(rng, cfg, depth + 1));
    default: return f_release(gen_rec(rng, cfg, depth + 1), gen_rec(rng, cfg, depth + 1));
  }
}

}  // namespace

FormulaPtr gen_formula(std::uint64_t seed, const FuzzConfig& config) {
  validate(config);
  Rng rng{seed};
  rng.next();  // decorrelate adjacent seeds
  return gen_rec(rng, config, 1);
}

}  // namespace ltlred
