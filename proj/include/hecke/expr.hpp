#pragma once

// Expression language for the command line tool.  Grammar, in decreasing
// binding strength:
//
//   atom   := rational | "q" | "s<i>" | "y<i>" | "u<i>" | "(" expr ")"
//   power  := atom ["^" ["-"] integer]
//   signed := ["-"] power
//   term   := signed ("*" signed)*
//   expr   := term (("+" | "-") term)*
//
// Rational literals may be written "3" or "3/2"; there is no division
// operator and no implicit multiplication.  Symbols are validated against
// the declared rank at parse time: s1..s{n-1}, y1..yn, u2..un.  Parse
// errors carry the byte offset of the offending token.

#include <hecke/element.hpp>

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& msg)
      : std::runtime_error("byte " + std::to_string(off) + ": " + msg),
        offset(off) {}
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind {
    Literal,      // value
    QSymbol,      // the indeterminate q
    Generator,    // index: s_i
    JucysMurphy,  // index: y_i
    Intertwiner,  // index: u_i
    Neg,          // lhs
    Add,          // lhs, rhs
    Sub,          // lhs, rhs
    Mul,          // lhs, rhs
    Pow,          // lhs, index = exponent
  };

  Kind kind;
  Rational value;
  int index = 0;
  ExprPtr lhs;
  ExprPtr rhs;
};

inline ExprPtr make_leaf(ExprNode::Kind kind, int index = 0) {
  auto node = std::make_shared<ExprNode>();
  node->kind = kind;
  node->index = index;
  return node;
}

inline ExprPtr make_literal(const Rational& value) {
  auto node = std::make_shared<ExprNode>();
  node->kind = ExprNode::Kind::Literal;
  node->value = value;
  return node;
}

inline ExprPtr make_unary(ExprNode::Kind kind, ExprPtr child, int index = 0) {
  auto node = std::make_shared<ExprNode>();
  node->kind = kind;
  node->index = index;
  node->lhs = std::move(child);
  return node;
}

inline ExprPtr make_binary(ExprNode::Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto node = std::make_shared<ExprNode>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  if (a->value != b->value) return false;
  if (a->index != b->index) return false;
  return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
}

namespace detail {

struct Token {
  enum class Kind {
    Number,
    Symbol,  // sym_kind + index (or q)
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
  };

  Kind kind;
  std::size_t offset;
  Rational value;           // Number
  ExprNode::Kind sym_kind;  // Symbol
  int index = 0;            // Symbol
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_spaces();
      Token tok;
      tok.offset = pos_;
      if (pos_ >= src_.size()) {
        tok.kind = Token::Kind::End;
        out.push_back(tok);
        return out;
      }
      char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        tok.kind = Token::Kind::Number;
        tok.value = read_rational();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        tok.kind = Token::Kind::Symbol;
        read_symbol(tok);
      } else {
        switch (c) {
          case '+': tok.kind = Token::Kind::Plus; break;
          case '-': tok.kind = Token::Kind::Minus; break;
          case '*': tok.kind = Token::Kind::Star; break;
          case '^': tok.kind = Token::Kind::Caret; break;
          case '(': tok.kind = Token::Kind::LParen; break;
          case ')': tok.kind = Token::Kind::RParen; break;
          default:
            throw ParseError(pos_, std::string("unexpected character '") + c + "'");
        }
        ++pos_;
      }
      out.push_back(tok);
    }
  }

 private:
  void skip_spaces() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  BigInt read_integer() {
    BigInt v = 0;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  Rational read_rational() {
    std::size_t start = pos_;
    BigInt num = read_integer();
    if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      ++pos_;
      BigInt den = read_integer();
      if (den == 0) throw ParseError(start, "zero denominator");
      return make_rational(num, den);
    }
    return Rational(num);
  }

  void read_symbol(Token& tok) {
    std::size_t start = pos_;
    std::string name;
    while (pos_ < src_.size() &&
           std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
      name += src_[pos_];
      ++pos_;
    }
    if (name == "q") {
      tok.sym_kind = ExprNode::Kind::QSymbol;
      return;
    }
    char head = name[0];
    std::string digits = name.substr(1);
    bool indexed = (head == 's' || head == 'y' || head == 'u') &&
                   !digits.empty() &&
                   digits.find_first_not_of("0123456789") == std::string::npos;
    if (!indexed) {
      throw ParseError(start, "unknown symbol '" + name + "'");
    }
    if (digits.size() > 4) {
      throw ParseError(start, "symbol index out of range in '" + name + "'");
    }
    tok.index = std::stoi(digits);
    switch (head) {
      case 's': tok.sym_kind = ExprNode::Kind::Generator; break;
      case 'y': tok.sym_kind = ExprNode::Kind::JucysMurphy; break;
      default:  tok.sym_kind = ExprNode::Kind::Intertwiner; break;
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, int n) : tokens_(std::move(tokens)), n_(n) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (peek().kind != Token::Kind::End) {
      throw ParseError(peek().offset, "trailing input");
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool accept(Token::Kind kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (true) {
      if (accept(Token::Kind::Plus)) {
        lhs = make_binary(ExprNode::Kind::Add, lhs, parse_term());
      } else if (accept(Token::Kind::Minus)) {
        lhs = make_binary(ExprNode::Kind::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_signed();
    while (accept(Token::Kind::Star)) {
      lhs = make_binary(ExprNode::Kind::Mul, lhs, parse_signed());
    }
    return lhs;
  }

  ExprPtr parse_signed() {
    if (accept(Token::Kind::Minus)) {
      return make_unary(ExprNode::Kind::Neg, parse_power());
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (!accept(Token::Kind::Caret)) return base;
    bool negative = accept(Token::Kind::Minus);
    const Token& tok = peek();
    if (tok.kind != Token::Kind::Number) {
      throw ParseError(tok.offset, "expected integer exponent");
    }
    if (boost::multiprecision::denominator(tok.value) != 1) {
      throw ParseError(tok.offset, "expected integer exponent");
    }
    BigInt num = boost::multiprecision::numerator(tok.value);
    if (num > 64) {
      throw ParseError(tok.offset, "exponent out of range");
    }
    advance();
    int e = static_cast<int>(num);
    return make_unary(ExprNode::Kind::Pow, base, negative ? -e : e);
  }

  ExprPtr parse_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::Number:
        advance();
        return make_literal(tok.value);
      case Token::Kind::Symbol:
        advance();
        check_index(tok);
        if (tok.sym_kind == ExprNode::Kind::QSymbol) {
          return make_leaf(tok.sym_kind);
        }
        return make_leaf(tok.sym_kind, tok.index);
      case Token::Kind::LParen: {
        advance();
        ExprPtr inner = parse_expr();
        if (!accept(Token::Kind::RParen)) {
          throw ParseError(peek().offset, "expected ')'");
        }
        return inner;
      }
      case Token::Kind::End:
        throw ParseError(tok.offset, "unexpected end of input");
      default:
        throw ParseError(tok.offset, "expected a value");
    }
  }

  void check_index(const Token& tok) {
    switch (tok.sym_kind) {
      case ExprNode::Kind::Generator:
        if (tok.index < 1 || tok.index > n_ - 1) {
          throw ParseError(tok.offset, "generator index s" +
                                           std::to_string(tok.index) +
                                           " outside 1.." + std::to_string(n_ - 1));
        }
        break;
      case ExprNode::Kind::JucysMurphy:
        if (tok.index < 1 || tok.index > n_) {
          throw ParseError(tok.offset, "index y" + std::to_string(tok.index) +
                                           " outside 1.." + std::to_string(n_));
        }
        break;
      case ExprNode::Kind::Intertwiner:
        if (tok.index < 2 || tok.index > n_) {
          throw ParseError(tok.offset, "index u" + std::to_string(tok.index) +
                                           " outside 2.." + std::to_string(n_));
        }
        break;
      default:
        break;
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int n_;
};

}  // namespace detail

// Parses an expression against rank n, checking symbol indices.
inline ExprPtr parse_expression(const std::string& src, int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  detail::Lexer lexer(src);
  detail::Parser parser(lexer.run(), n);
  return parser.run();
}

namespace detail {

// Binding strength for the renderer; matches the parser's grammar.
inline int expr_level(const ExprPtr& node) {
  switch (node->kind) {
    case ExprNode::Kind::Add:
    case ExprNode::Kind::Sub: return 0;
    case ExprNode::Kind::Mul: return 1;
    case ExprNode::Kind::Neg: return 2;
    case ExprNode::Kind::Pow: return 3;
    default: return 4;
  }
}

inline void render_into(const ExprPtr& node, std::string& out) {
  auto wrap = [&out](const ExprPtr& child, int min_level) {
    if (expr_level(child) < min_level) {
      out += '(';
      render_into(child, out);
      out += ')';
    } else {
      render_into(child, out);
    }
  };
  switch (node->kind) {
    case ExprNode::Kind::Literal: {
      out += to_string(node->value);
      break;
    }
    case ExprNode::Kind::QSymbol: out += 'q'; break;
    case ExprNode::Kind::Generator:
      out += 's' + std::to_string(node->index);
      break;
    case ExprNode::Kind::JucysMurphy:
      out += 'y' + std::to_string(node->index);
      break;
    case ExprNode::Kind::Intertwiner:
      out += 'u' + std::to_string(node->index);
      break;
    case ExprNode::Kind::Neg:
      out += '-';
      wrap(node->lhs, 3);
      break;
    case ExprNode::Kind::Add:
      wrap(node->lhs, 0);
      out += " + ";
      wrap(node->rhs, 1);
      break;
    case ExprNode::Kind::Sub:
      wrap(node->lhs, 0);
      out += " - ";
      wrap(node->rhs, 1);
      break;
    case ExprNode::Kind::Mul:
      wrap(node->lhs, 1);
      out += " * ";
      wrap(node->rhs, 2);
      break;
    case ExprNode::Kind::Pow:
      wrap(node->lhs, 4);
      out += '^';
      out += std::to_string(node->index);
      break;
  }
}

}  // namespace detail

// Canonical text form; parse_expression(render(e), n) reproduces e.
inline std::string render(const ExprPtr& node) {
  std::string out;
  detail::render_into(node, out);
  return out;
}

namespace detail {

// Inverse of the palindromic generator word behind a Jucys-Murphy element.
template <class Ctx>
HeckeElement<typename Ctx::Field> jucys_murphy_inverse(const Ctx& ctx, int i,
                                                       int n) {
  auto out = HeckeElement<typename Ctx::Field>::unit(n);
  for (int j = i - 1; j >= 1; --j) {
    out = multiply(ctx, out, inverse_generator(ctx, j, n));
  }
  for (int j = 1; j <= i - 1; ++j) {
    out = multiply(ctx, out, inverse_generator(ctx, j, n));
  }
  return out;
}

template <class Ctx>
HeckeElement<typename Ctx::Field> evaluate_inverse(const Ctx& ctx,
                                                   const ExprPtr& node, int n);

}  // namespace detail

// Evaluates the expression in the rank-n algebra over ctx's field.
template <class Ctx>
HeckeElement<typename Ctx::Field> evaluate(const Ctx& ctx, const ExprPtr& node,
                                           int n) {
  using E = HeckeElement<typename Ctx::Field>;
  switch (node->kind) {
    case ExprNode::Kind::Literal:
      return ctx.from_rational(node->value) * E::unit(n);
    case ExprNode::Kind::QSymbol:
      return ctx.q_power(1) * E::unit(n);
    case ExprNode::Kind::Generator:
      return generator(ctx, node->index, n);
    case ExprNode::Kind::JucysMurphy:
      return jucys_murphy(ctx, node->index, n);
    case ExprNode::Kind::Intertwiner:
      return intertwiner(ctx, node->index - 1, n);
    case ExprNode::Kind::Neg:
      return -evaluate(ctx, node->lhs, n);
    case ExprNode::Kind::Add:
      return evaluate(ctx, node->lhs, n) + evaluate(ctx, node->rhs, n);
    case ExprNode::Kind::Sub:
      return evaluate(ctx, node->lhs, n) - evaluate(ctx, node->rhs, n);
    case ExprNode::Kind::Mul:
      return multiply(ctx, evaluate(ctx, node->lhs, n),
                      evaluate(ctx, node->rhs, n));
    case ExprNode::Kind::Pow: {
      int e = node->index;
      E step = e >= 0 ? evaluate(ctx, node->lhs, n)
                      : detail::evaluate_inverse(ctx, node->lhs, n);
      E out = E::unit(n);
      for (int k = 0; k < (e >= 0 ? e : -e); ++k) {
        out = multiply(ctx, out, step);
      }
      return out;
    }
  }
  throw std::logic_error("unhandled expression node");
}

namespace detail {

// Inverts the bases the language supports: scalar-valued subexpressions,
// single generators, and Jucys-Murphy elements.  Anything else would need
// a linear solve and is rejected.
template <class Ctx>
HeckeElement<typename Ctx::Field> evaluate_inverse(const Ctx& ctx,
                                                   const ExprPtr& node, int n) {
  using F = typename Ctx::Field;
  using E = HeckeElement<F>;
  if (node->kind == ExprNode::Kind::Generator) {
    return inverse_generator(ctx, node->index, n);
  }
  if (node->kind == ExprNode::Kind::JucysMurphy) {
    return jucys_murphy_inverse(ctx, node->index, n);
  }
  E value = evaluate(ctx, node, n);
  F scalar = value.coeff(Permutation(n));
  if (!(value == scalar * E::unit(n))) {
    throw std::invalid_argument(
        "cannot invert a general algebra element; only scalars, generators, "
        "and Jucys-Murphy elements support negative exponents");
  }
  if (scalar == F(0)) {
    throw std::invalid_argument("cannot invert zero");
  }
  return (F(1) / scalar) * E::unit(n);
}

}  // namespace detail

}  // namespace hecke
