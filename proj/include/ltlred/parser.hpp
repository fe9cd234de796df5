#ifndef LTLRED_PARSER_HPP
#define LTLRED_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "ltlred/formula.hpp"

namespace ltlred {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/* Concrete grammar:
 *
 *   formula := or
 *   or      := and ('|' and)*                 left-associative
 *   and     := until ('&' until)*             left-associative
 *   until   := unary (('U' | 'R') until)?     right-associative
 *   unary   := ('!' | 'X' | 'F' | 'G') unary | primary
 *   primary := atom | 'true' | 'tt' | 'false' | 'ff' | '(' formula ')'
 *
 * Atoms match [a-z][a-z0-9_]* and exclude the constant keywords.
 */
FormulaPtr parse(const std::string& text);  // throws ParseError

}  // namespace ltlred

#endif  // LTLRED_PARSER_HPP
