#include "lightframe/parser.hpp"

#include <cctype>
#include <cstddef>
#include <limits>
#include <sstream>

#include "lightframe/error.hpp"

namespace lightframe {

namespace {

enum class TokKind { Integer, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;   // integer digits or identifier name
  std::size_t pos;    // 1-based character position
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::size_t offset() const { return i_; }
  void seek(std::size_t offset) { i_ = offset; }

  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    const std::size_t pos = i_ + 1;
    if (i_ >= text_.size()) return {TokKind::End, "", pos};
    const char c = text_[i_];
    switch (c) {
      case '+': ++i_; return {TokKind::Plus, "+", pos};
      case '-': ++i_; return {TokKind::Minus, "-", pos};
      case '*': ++i_; return {TokKind::Star, "*", pos};
      case '/': ++i_; return {TokKind::Slash, "/", pos};
      case '^': ++i_; return {TokKind::Caret, "^", pos};
      case '(': ++i_; return {TokKind::LParen, "(", pos};
      case ')': ++i_; return {TokKind::RParen, ")", pos};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      Token t{TokKind::Integer, text_.substr(i_, j - i_), pos};
      i_ = j;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && std::isalpha(static_cast<unsigned char>(text_[j]))) ++j;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      Token t{TokKind::Identifier, text_.substr(i_, j - i_), pos};
      i_ = j;
      return t;
    }
    std::ostringstream msg;
    msg << "unexpected character '" << c << "' at position " << pos;
    throw ParseError(msg.str());
  }

 private:
  const std::string& text_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& variables)
      : lexer_(text), variables_(variables), cur_(lexer_.next()) {}

  RationalExpr parse() {
    RationalExpr e = expr();
    if (cur_.kind != TokKind::End) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << what << " at position " << cur_.pos;
    throw ParseError(msg.str());
  }

  void advance() { cur_ = lexer_.next(); }

  RationalExpr expr() {
    RationalExpr acc = term();
    while (cur_.kind == TokKind::Plus || cur_.kind == TokKind::Minus) {
      const bool plus = cur_.kind == TokKind::Plus;
      advance();
      RationalExpr rhs = term();
      acc = plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  RationalExpr term() {
    RationalExpr acc = unary();
    while (cur_.kind == TokKind::Star || cur_.kind == TokKind::Slash) {
      const bool mul = cur_.kind == TokKind::Star;
      const std::size_t op_pos = cur_.pos;
      advance();
      RationalExpr rhs = unary();
      if (mul) {
        acc = acc * rhs;
      } else {
        if (rhs.is_zero()) {
          std::ostringstream msg;
          msg << "division by zero at position " << op_pos;
          throw ParseError(msg.str());
        }
        acc = acc / rhs;
      }
    }
    return acc;
  }

  // Exponentiation binds tighter than negation, so -x^2 reads as -(x^2).
  RationalExpr unary() {
    if (cur_.kind == TokKind::Minus) {
      advance();
      return -unary();
    }
    return factor();
  }

  RationalExpr factor() {
    RationalExpr b = base();
    if (cur_.kind == TokKind::Caret) {
      advance();
      if (cur_.kind != TokKind::Integer) fail("expected nonnegative integer exponent");
      const std::uint64_t e = parse_exponent(cur_.text);
      advance();
      b = b.pow(static_cast<std::uint32_t>(e));
    }
    return b;
  }

  std::uint64_t parse_exponent(const std::string& digits) const {
    Int v(digits);
    if (v > 1000) fail("exponent too large");
    return v.convert_to<std::uint64_t>();
  }

  RationalExpr base() {
    switch (cur_.kind) {
      case TokKind::LParen: {
        advance();
        RationalExpr e = expr();
        if (cur_.kind != TokKind::RParen) fail("expected ')'");
        advance();
        return e;
      }
      case TokKind::Integer: {
        Int numv(cur_.text);
        advance();
        // Literal denominators bind tighter than term-level division.
        if (cur_.kind == TokKind::Slash) {
          const std::size_t save_off = lexer_.offset();
          const Token save_cur = cur_;
          advance();
          if (cur_.kind == TokKind::Integer) {
            Int denv(cur_.text);
            const std::size_t den_pos = cur_.pos;
            advance();
            if (denv == 0) {
              std::ostringstream msg;
              msg << "division by zero at position " << den_pos;
              throw ParseError(msg.str());
            }
            return RationalExpr::constant(nvars(), Rat(numv, denv));
          }
          lexer_.seek(save_off);
          cur_ = save_cur;
        }
        return RationalExpr::integer(nvars(), numv);
      }
      case TokKind::Identifier: {
        for (std::size_t v = 0; v < variables_.size(); ++v) {
          if (variables_[v] == cur_.text) {
            advance();
            return RationalExpr::variable(nvars(), v);
          }
        }
        std::ostringstream msg;
        msg << "unknown identifier '" << cur_.text << "' at position " << cur_.pos;
        throw ParseError(msg.str());
      }
      default:
        fail("expected a value");
    }
  }

  std::size_t nvars() const { return variables_.size(); }

  Lexer lexer_;
  const std::vector<std::string>& variables_;
  Token cur_;
};

}  // namespace

RationalExpr parse_expression(const std::string& text,
                              const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

}  // namespace lightframe
