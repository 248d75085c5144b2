#include "sfdga/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <unordered_set>

namespace sfdga {

ParseError::ParseError(ErrorKind kind, int line, int column, std::vector<std::string> expected,
                       const std::string& message)
    : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, Slash, LParen, RParen, Less, Greater, Bar, Comma, Equals, End };

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::Slash: return "'/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Less: return "'<'";
    case Tok::Greater: return "'>'";
    case Tok::Bar: return "'|'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '#' || c == '\'';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      // Comment to end of line; '#' inside an identifier (e#1) is a name character.
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok{Tok::End, "", line, column};
    std::size_t j = i;
    if (ident_start(c)) {
      while (j < text.size() && ident_char(text[j])) ++j;
      tok.kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Tok::Number;
    } else {
      ++j;
      switch (c) {
        case '+': tok.kind = Tok::Plus; break;
        case '-': tok.kind = Tok::Minus; break;
        case '*': tok.kind = Tok::Star; break;
        case '^': tok.kind = Tok::Caret; break;
        case '/': tok.kind = Tok::Slash; break;
        case '(': tok.kind = Tok::LParen; break;
        case ')': tok.kind = Tok::RParen; break;
        case '<': tok.kind = Tok::Less; break;
        case '>': tok.kind = Tok::Greater; break;
        case '|': tok.kind = Tok::Bar; break;
        case ',': tok.kind = Tok::Comma; break;
        case '=': tok.kind = Tok::Equals; break;
        default:
          throw ParseError(ErrorKind::SyntaxError, line, column, {},
                           std::string("unexpected character '") + c + "'");
      }
    }
    tok.text = std::string(text.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Tok::End, "", line, column});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, RingSpec ring) : tokens_(tokenize(text)), ring_(ring) {}

  NcPoly poly(const SignaturePtr& sig) {
    sig_ = sig;
    NcPoly p = expr();
    expect(Tok::End);
    return p;
  }

  Presentation presentation() {
    const Token& kw = peek();
    bool is_group = kw.kind == Tok::Ident && kw.text == "group";
    bool is_algebra = kw.kind == Tok::Ident && kw.text == "algebra";
    if (!is_group && !is_algebra) fail({"'group'", "'algebra'"});
    next();
    std::string name = expect(Tok::Ident).text;
    expect(Tok::Equals);
    expect(Tok::Less);
    std::vector<std::string> gens;
    std::unordered_set<std::string> seen;
    if (check(Tok::Ident)) {
      do {
        const Token& g = expect(Tok::Ident);
        check_strict_identifier(g);
        if (!seen.insert(g.text).second)
          throw ParseError(ErrorKind::DuplicateGenerator, g.line, g.column, {}, "duplicate generator '" + g.text + "'");
        gens.push_back(g.text);
      } while (accept(Tok::Comma));
    }
    expect(Tok::Bar);
    Presentation result;
    if (is_group) {
      GroupPresentation g;
      g.name = name;
      g.generators = gens;
      if (!check(Tok::Greater)) {
        do g.relators.push_back(free_reduce(group_word(g.generators)));
        while (accept(Tok::Comma));
      }
      result = std::move(g);
    } else {
      AlgebraPresentation a;
      a.name = name;
      std::vector<GeneratorSymbol> symbols;
      for (const auto& n : gens) symbols.push_back({n, 0});
      a.signature = make_signature(ring_, std::move(symbols));
      sig_ = a.signature;
      if (!check(Tok::Greater)) {
        do a.relations.push_back(expr());
        while (accept(Tok::Comma));
      }
      result = std::move(a);
    }
    expect(Tok::Greater);
    expect(Tok::End);
    return result;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  void next() {
    if (tokens_[pos_].kind != Tok::End) ++pos_;
    expected_.clear();
  }

  bool check(Tok kind) {
    expected_.insert(describe(kind));
    return peek().kind == kind;
  }

  bool accept(Tok kind) {
    if (!check(kind)) return false;
    next();
    return true;
  }

  const Token& expect(Tok kind) {
    if (!check(kind)) fail({});
    const Token& t = peek();
    next();
    return t;
  }

  [[noreturn]] void fail(std::vector<std::string> extra) {
    std::set<std::string> all(expected_.begin(), expected_.end());
    all.insert(extra.begin(), extra.end());
    std::vector<std::string> expected(all.begin(), all.end());
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    msg += "; got " + got;
    throw ParseError(ErrorKind::SyntaxError, t.line, t.column, std::move(expected), msg);
  }

  void check_strict_identifier(const Token& t) {
    bool ok = std::all_of(t.text.begin(), t.text.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    });
    if (!ok)
      throw ParseError(ErrorKind::SyntaxError, t.line, t.column, {"identifier"},
                       "identifier '" + t.text + "' must match [A-Za-z][A-Za-z0-9_]*");
  }

  long small_number(const Token& t) {
    if (t.text.size() > 9) throw ParseError(ErrorKind::SyntaxError, t.line, t.column, {}, "exponent too large");
    return std::stol(t.text);
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  NcPoly expr() {
    bool negate = false;
    if (accept(Tok::Minus)) negate = true;
    else accept(Tok::Plus);
    NcPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept(Tok::Plus)) acc += term();
      else if (accept(Tok::Minus)) acc -= term();
      else break;
    }
    return acc;
  }

  // term := factor ('*' factor)*
  NcPoly term() {
    NcPoly acc = factor();
    while (accept(Tok::Star)) acc = acc * factor();
    return acc;
  }

  // factor := atom ['^' number]
  NcPoly factor() {
    NcPoly base = atom();
    if (accept(Tok::Caret)) {
      if (check(Tok::Minus)) {
        const Token& t = peek();
        throw ParseError(ErrorKind::SyntaxError, t.line, t.column, {"number"},
                         "only positive powers are allowed in polynomials");
      }
      const Token& t = expect(Tok::Number);
      long k = small_number(t);
      if (k < 1)
        throw ParseError(ErrorKind::SyntaxError, t.line, t.column, {"number"},
                         "only positive powers are allowed in polynomials");
      NcPoly result = base;
      for (long i = 1; i < k; ++i) result = result * base;
      return result;
    }
    return base;
  }

  // atom := number ['/' number] | identifier | '(' expr ')'
  NcPoly atom() {
    if (check(Tok::Number)) {
      std::string text = peek().text;
      next();
      if (accept(Tok::Slash)) {
        const Token& den = expect(Tok::Number);
        text += "/" + den.text;
        if (mpz_class(den.text) == 0)
          throw ParseError(ErrorKind::SyntaxError, den.line, den.column, {}, "zero denominator");
      }
      return NcPoly::constant(sig_, Coefficient::parse(sig_->ring(), text));
    }
    if (check(Tok::Ident)) {
      const Token& t = peek();
      auto index = sig_->index_of(t.text);
      if (!index)
        throw ParseError(ErrorKind::UnknownGenerator, t.line, t.column, {}, "unknown generator '" + t.text + "'");
      next();
      return NcPoly::generator(sig_, *index);
    }
    if (accept(Tok::LParen)) {
      NcPoly inner = expr();
      expect(Tok::RParen);
      return inner;
    }
    fail({});
  }

  // word := '1' | letter ('*' letter)*, letter := identifier ['^' ['-'] number]
  GroupWord group_word(const std::vector<std::string>& gens) {
    GroupWord word;
    if (check(Tok::Number)) {
      const Token& t = peek();
      if (t.text != "1") throw ParseError(ErrorKind::SyntaxError, t.line, t.column, {"identifier", "'1'"}, "only 1 may appear as a numeric relator");
      next();
      return word;
    }
    do {
      const Token& t = expect(Tok::Ident);
      auto it = std::find(gens.begin(), gens.end(), t.text);
      if (it == gens.end())
        throw ParseError(ErrorKind::UnknownGenerator, t.line, t.column, {}, "unknown generator '" + t.text + "'");
      auto index = static_cast<std::uint32_t>(it - gens.begin());
      long exponent = 1;
      if (accept(Tok::Caret)) {
        bool negative = accept(Tok::Minus);
        exponent = small_number(expect(Tok::Number));
        if (negative) exponent = -exponent;
      }
      for (long k = 0; k < std::labs(exponent); ++k) word.push_back({index, exponent < 0});
    } while (accept(Tok::Star));
    return word;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  RingSpec ring_;
  SignaturePtr sig_;
  std::set<std::string> expected_;
};

}  // namespace

NcPoly parse_poly(std::string_view text, const SignaturePtr& sig) {
  return Parser(text, sig->ring()).poly(sig);
}

Presentation parse_presentation(std::string_view text, RingSpec ring) {
  return Parser(text, ring).presentation();
}

}  // namespace sfdga
