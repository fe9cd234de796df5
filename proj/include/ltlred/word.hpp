#ifndef LTLRED_WORD_HPP
#define LTLRED_WORD_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltlred {

// A letter is a set of the propositions holding at one position.
using Letter = std::set<std::string>;

// Ultimately periodic word prefix . period^omega. Position i carries
// prefix[i] if i < |prefix|, else period[(i - |prefix|) mod |period|].
struct LassoWord {
  std::vector<Letter> prefix;
  std::vector<Letter> period;  // nonempty

  const Letter& at(std::size_t i) const {
    return i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()];
  }
};

bool operator==(const LassoWord& a, const LassoWord& b);

class WordFormatError : public std::runtime_error {
 public:
  explicit WordFormatError(const std::string& what) : std::runtime_error("bad word: " + what) {}
};

/* Text form: `prefix | period`, letters separated by `;`. A letter is
 * `{p,q}`, the empty letter `{}`, or a bare identifier as singleton
 * shorthand. `a | c` is a.c^omega, `| c` is c^omega.
 */
LassoWord parse_word(const std::string& text);  // throws WordFormatError
std::string to_string(const LassoWord& w);
std::string to_string(const Letter& l);

}  // namespace ltlred

#endif  // LTLRED_WORD_HPP
