#include "ltlred/parser.hpp"

#include <cctype>

namespace ltlred {

namespace {

enum class Tok { Ident, True, False, Bang, Amp, Bar, U, R, F, G, X, LParen, RParen, End };

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "atom";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::U: return "'U'";
    case Tok::R: return "'R'";
    case Tok::F: return "'F'";
    case Tok::G: return "'G'";
    case Tok::X: return "'X'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) { advance(); }

  FormulaPtr run() {
    FormulaPtr f = parse_or();
    if (tok_ != Tok::End) {
      if (tok_ == Tok::RParen) fail("unbalanced parentheses: unexpected ')'");
      fail(std::string("expected operator or end of input, got ") + tok_name(tok_));
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(tok_pos_, msg); }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_pos_ = pos_;
    if (pos_ == text_.size()) {
      tok_ = Tok::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '!': tok_ = Tok::Bang; ++pos_; return;
      case '&': tok_ = Tok::Amp; ++pos_; return;
      case '|': tok_ = Tok::Bar; ++pos_; return;
      case '(': tok_ = Tok::LParen; ++pos_; return;
      case ')': tok_ = Tok::RParen; ++pos_; return;
      case 'U': tok_ = Tok::U; ++pos_; return;
      case 'R': tok_ = Tok::R; ++pos_; return;
      case 'F': tok_ = Tok::F; ++pos_; return;
      case 'G': tok_ = Tok::G; ++pos_; return;
      case 'X': tok_ = Tok::X; ++pos_; return;
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_')
          ++pos_;
        else
          break;
      }
      ident_ = text_.substr(start, pos_ - start);
      if (ident_ == "true" || ident_ == "tt")
        tok_ = Tok::True;
      else if (ident_ == "false" || ident_ == "ff")
        tok_ = Tok::False;
      else
        tok_ = Tok::Ident;
      return;
    }
    if (std::isupper(static_cast<unsigned char>(c)))
      throw ParseError(pos_, std::string("unknown operator '") + c + "'");
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  bool accept(Tok t) {
    if (tok_ != t) return false;
    advance();
    return true;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (accept(Tok::Bar)) f = f_or(std::move(f), parse_and());
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_until();
    while (accept(Tok::Amp)) f = f_and(std::move(f), parse_until());
    return f;
  }

  FormulaPtr parse_until() {
    FormulaPtr f = parse_unary();
    if (accept(Tok::U)) return f_until(std::move(f), parse_until());
    if (accept(Tok::R)) return f_release(std::move(f), parse_until());
    return f;
  }

  FormulaPtr parse_unary() {
    if (accept(Tok::Bang)) return f_not(parse_unary());
    if (accept(Tok::X)) return f_next(parse_unary());
    if (accept(Tok::F)) return f_finally(parse_unary());
    if (accept(Tok::G)) return f_globally(parse_unary());
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    if (tok_ == Tok::Ident) {
      std::string name = ident_;
      advance();
      return f_atom(name);
    }
    if (accept(Tok::True)) return f_true();
    if (accept(Tok::False)) return f_false();
    if (tok_ == Tok::LParen) {
      std::size_t open_pos = tok_pos_;
      advance();
      FormulaPtr f = parse_or();
      if (tok_ != Tok::RParen)
        throw ParseError(open_pos, "unbalanced parentheses: '(' is never closed");
      advance();
      return f;
    }
    fail(std::string("expected atom, constant, unary operator, or '(', got ") + tok_name(tok_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t tok_pos_ = 0;
  Tok tok_ = Tok::End;
  std::string ident_;
};

}  // namespace

FormulaPtr parse(const std::string& text) { return Parser(text).run(); }

}  // namespace ltlred
