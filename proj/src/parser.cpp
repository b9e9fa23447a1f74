#include <cctype>
#include <optional>

#include "mvmodal/errors.hpp"
#include "mvmodal/formula.hpp"

namespace mvmodal {

namespace {

enum class Tok {
  LParen, RParen, Arrow, Iff, Or, And, Amp, Tilde, Box, Diamond, DeltaOp,
  Caret, Number, Ident, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

const char* token_name(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Arrow: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Or: return "'\\/'";
    case Tok::And: return "'/\\'";
    case Tok::Amp: return "'&'";
    case Tok::Tilde: return "'~'";
    case Tok::Box: return "'[]'";
    case Tok::Diamond: return "'<>'";
    case Tok::DeltaOp: return "'D'";
    case Tok::Caret: return "'^'";
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](const std::string& detail) {
    throw ParseError(i, {}, detail);
  };
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; continue;
      case '&': out.push_back({Tok::Amp, "&", start}); ++i; continue;
      case '~': out.push_back({Tok::Tilde, "~", start}); ++i; continue;
      case '^': out.push_back({Tok::Caret, "^", start}); ++i; continue;
      case 'D': out.push_back({Tok::DeltaOp, "D", start}); ++i; continue;
      case '-':
        if (i + 1 < n && text[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", start});
          i += 2;
          continue;
        }
        fail("'-' must begin '->'");
      case '<':
        if (i + 2 < n && text[i + 1] == '-' && text[i + 2] == '>') {
          out.push_back({Tok::Iff, "<->", start});
          i += 3;
          continue;
        }
        if (i + 1 < n && text[i + 1] == '>') {
          out.push_back({Tok::Diamond, "<>", start});
          i += 2;
          continue;
        }
        fail("'<' must begin '<->' or '<>'");
      case '[':
        if (i + 1 < n && text[i + 1] == ']') {
          out.push_back({Tok::Box, "[]", start});
          i += 2;
          continue;
        }
        fail("'[' must begin '[]'");
      case '\\':
        if (i + 1 < n && text[i + 1] == '/') {
          out.push_back({Tok::Or, "\\/", start});
          i += 2;
          continue;
        }
        fail("'\\' must begin '\\/'");
      case '/':
        if (i + 1 < n && text[i + 1] == '\\') {
          out.push_back({Tok::And, "/\\", start});
          i += 2;
          continue;
        }
        fail("'/' must begin '/\\'");
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Number, text.substr(i, j - i), start});
      i = j;
      continue;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), start});
      i = j;
      continue;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", n});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = parse_iff();
    expect(Tok::End);
    return f;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool accept(Tok t) {
    if (peek().kind == t) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Tok t) {
    if (!accept(t))
      throw ParseError(peek().offset, {token_name(t)},
                       std::string("expected ") + token_name(t) + ", found " +
                           token_name(peek().kind));
  }

  Formula parse_iff() {
    Formula f = parse_impl();
    while (accept(Tok::Iff)) f = fm::iff(f, parse_impl());
    return f;
  }

  Formula parse_impl() {
    Formula f = parse_disj();
    if (accept(Tok::Arrow)) return fm::impl(f, parse_impl());  // right-associative
    return f;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (accept(Tok::Or)) f = fm::join(f, parse_conj());
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_fuse();
    while (accept(Tok::And)) f = fm::meet(f, parse_fuse());
    return f;
  }

  Formula parse_fuse() {
    Formula f = parse_unary();
    while (accept(Tok::Amp)) f = fm::fuse(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Tilde: take(); return fm::neg(parse_unary());
      case Tok::Box: take(); return fm::box(parse_unary());
      case Tok::Diamond: take(); return fm::diamond(parse_unary());
      case Tok::DeltaOp: take(); return fm::delta(parse_unary());
      default: break;
    }
    Formula f = parse_atom();
    if (accept(Tok::Caret)) {
      if (peek().kind != Tok::Number)
        throw ParseError(peek().offset, {"number"}, "exponent must be a natural number");
      return fm::power(f, BigInt(take().text));
    }
    return f;
  }

  Formula parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        if (t.text == "0") { take(); return fm::zero(); }
        if (t.text == "1") { take(); return fm::one(); }
        throw ParseError(t.offset, {"'0'", "'1'"},
                         "only the truth constants 0 and 1 are atoms, found '" + t.text + "'");
      }
      case Tok::Ident: return fm::var(take().text);
      case Tok::LParen: {
        take();
        Formula f = parse_iff();
        expect(Tok::RParen);
        return f;
      }
      default:
        throw ParseError(t.offset, {"'0'", "'1'", "identifier", "'('", "'~'", "'[]'", "'<>'", "'D'"},
                         std::string("expected an atom, found ") + token_name(t.kind));
    }
  }
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(tokenize(text)).run(); }

}  // namespace mvmodal
