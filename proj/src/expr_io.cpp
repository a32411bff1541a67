#include "srll/expr_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "srll/superlinalg.hpp"

namespace srll {

namespace {

struct Lexer {
  std::string text;
  size_t pos = 0;
  int line = 1, col = 1;

  struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string value;
    int line, col;
  };

  Token next() {
    skip_ws();
    int tl = line, tc = col;
    if (pos >= text.size()) return {Token::End, "", tl, tc};
    unsigned char c = text[pos];
    // unicode minus U+2212 (e2 88 92)
    if (c == 0xE2 && pos + 2 < text.size() &&
        static_cast<unsigned char>(text[pos + 1]) == 0x88 &&
        static_cast<unsigned char>(text[pos + 2]) == 0x92) {
      advance(3);
      return {Token::Minus, "-", tl, tc};
    }
    if (std::isdigit(c)) {
      std::string v;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v += text[pos];
        advance(1);
      }
      return {Token::Num, v, tl, tc};
    }
    if (std::isalpha(c) || c == '_') {
      std::string v;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        v += text[pos];
        advance(1);
      }
      return {Token::Ident, v, tl, tc};
    }
    advance(1);
    switch (c) {
      case '+': return {Token::Plus, "+", tl, tc};
      case '-': return {Token::Minus, "-", tl, tc};
      case '*': return {Token::Star, "*", tl, tc};
      case '/': return {Token::Slash, "/", tl, tc};
      case '^': return {Token::Caret, "^", tl, tc};
      case '(': return {Token::LParen, "(", tl, tc};
      case ')': return {Token::RParen, ")", tl, tc};
      default:
        throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'",
                         tl, tc);
    }
  }

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) {
      advance(1);
    }
  }

  void advance(int k) {
    for (int i = 0; i < k && pos < text.size(); ++i, ++pos) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }
};

struct Parser {
  Lexer lex;
  Lexer::Token tok;

  explicit Parser(std::string text) : lex{std::move(text)} { tok = lex.next(); }

  void eat() { tok = lex.next(); }

  RatFunc parse() {
    RatFunc r = expr();
    if (tok.kind != Lexer::Token::End)
      throw ParseError("trailing input", tok.line, tok.col);
    return r;
  }

  RatFunc expr() {
    RatFunc r = term();
    while (tok.kind == Lexer::Token::Plus || tok.kind == Lexer::Token::Minus) {
      bool minus = tok.kind == Lexer::Token::Minus;
      eat();
      RatFunc t = term();
      r = minus ? r - t : r + t;
    }
    return r;
  }

  RatFunc term() {
    RatFunc r = factor();
    while (tok.kind == Lexer::Token::Star || tok.kind == Lexer::Token::Slash) {
      bool div = tok.kind == Lexer::Token::Slash;
      int l = tok.line, c = tok.col;
      eat();
      RatFunc f = factor();
      if (div) {
        if (f.is_zero()) throw ParseError("division by zero", l, c);
        r = r / f;
      } else {
        r = r * f;
      }
    }
    return r;
  }

  RatFunc factor() {
    int sign = 1;
    while (tok.kind == Lexer::Token::Plus || tok.kind == Lexer::Token::Minus) {
      if (tok.kind == Lexer::Token::Minus) sign = -sign;
      eat();
    }
    RatFunc base = primary();
    if (tok.kind == Lexer::Token::Caret) {
      int l = tok.line, c = tok.col;
      eat();
      int esign = 1;
      while (tok.kind == Lexer::Token::Minus || tok.kind == Lexer::Token::Plus) {
        if (tok.kind == Lexer::Token::Minus) esign = -esign;
        eat();
      }
      if (tok.kind != Lexer::Token::Num)
        throw ParseError("integer exponent expected", l, c);
      long e = std::stol(tok.value);
      eat();
      if (esign * e < 0 && base.is_zero())
        throw ParseError("zero raised to negative power", l, c);
      base = base.pow(static_cast<int>(esign * e));
    }
    return sign < 0 ? -base : base;
  }

  RatFunc primary() {
    switch (tok.kind) {
      case Lexer::Token::Num: {
        Rational v(tok.value);
        eat();
        return RatFunc(v);
      }
      case Lexer::Token::Ident: {
        auto id = var_lookup(tok.value);
        if (!id) throw ParseError("unknown variable '" + tok.value + "'", tok.line, tok.col);
        eat();
        return RatFunc::variable(*id);
      }
      case Lexer::Token::LParen: {
        eat();
        RatFunc r = expr();
        if (tok.kind != Lexer::Token::RParen)
          throw ParseError("')' expected", tok.line, tok.col);
        eat();
        return r;
      }
      default:
        throw ParseError("expression expected", tok.line, tok.col);
    }
  }
};

}  // namespace

RatFunc parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const RatFunc& x) { return x.str(); }

GradedTensor parse_matrix(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty matrix file", 1, 1);
  std::istringstream hs(header);
  std::string kw, mkv, nkv;
  int rows = 0, cols = 0;
  hs >> kw >> rows >> cols >> mkv >> nkv;
  if (kw != "matrix" || mkv.rfind("m=", 0) != 0 || nkv.rfind("n=", 0) != 0)
    throw ParseError("bad matrix header", 1, 1);
  GradedSpace space{std::stoi(mkv.substr(2)), std::stoi(nkv.substr(2))};
  int N = space.N();
  if (rows != N * N || cols != N * N)
    throw ParseError("matrix dimensions must equal (m+n)^2", 1, 1);
  GradedTensor t(space, 2);
  std::string linebuf;
  int lineno = 1;
  while (std::getline(in, linebuf)) {
    ++lineno;
    std::string trimmed = linebuf;
    size_t a = trimmed.find_first_not_of(" \t\r");
    if (a == std::string::npos || trimmed[a] == '#') continue;
    size_t colon = trimmed.find(':');
    if (colon == std::string::npos) throw ParseError("':' expected", lineno, 1);
    std::istringstream is(trimmed.substr(0, colon));
    int i = 0, j = 0;
    if (!(is >> i >> j)) throw ParseError("row/col indices expected", lineno, 1);
    RatFunc v = parse_expr(trimmed.substr(colon + 1));
    // 1-based flat indices over V (x) V, row-major
    int r1 = (i - 1) / N + 1, r2 = (i - 1) % N + 1;
    int c1 = (j - 1) / N + 1, c2 = (j - 1) % N + 1;
    t.set({r1, r2}, {c1, c2}, v);
  }
  return t;
}

GradedTensor parse_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path, 1, 1);
  return parse_matrix(f);
}

std::string print_matrix(const GradedTensor& t) {
  if (t.legs() != 2) throw ShapeError("print_matrix: two legs required");
  int N = t.space().N();
  std::ostringstream os;
  os << "matrix " << N * N << " " << N * N << " m=" << t.space().m
     << " n=" << t.space().n << "\n";
  for (const auto& [r, colmap] : t.rows()) {
    auto ri = t.decode(r);
    for (const auto& [c, v] : colmap) {
      auto ci = t.decode(c);
      int i = (ri[0] - 1) * N + ri[1];
      int j = (ci[0] - 1) * N + ci[1];
      os << i << " " << j << " : " << v.str() << "\n";
    }
  }
  return os.str();
}

}  // namespace srll
