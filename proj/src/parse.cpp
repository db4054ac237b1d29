#include <cctype>
#include <optional>
#include <vector>

#include "rlw/errors.hpp"
#include "rlw/syntax.hpp"

namespace rlw {

namespace {

enum class Tok { Ident, Number, Lambda, Dot, LParen, RParen, LBrack, RBrack, Comma, Plus, Star, Minus, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(c)) {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(c)) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      if (i < src.size() && src[i] == '/') {
        ++i;
        if (i >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i])))
          throw SyntaxError(i, "expected denominator");
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      }
      out.push_back({Tok::Number, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (c == 0xCE && i + 1 < src.size() && static_cast<unsigned char>(src[i + 1]) == 0xBB) {
      out.push_back({Tok::Lambda, "\\", start});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '\\': k = Tok::Lambda; break;
      case '.': k = Tok::Dot; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBrack; break;
      case ']': k = Tok::RBrack; break;
      case ',': k = Tok::Comma; break;
      case '+': k = Tok::Plus; break;
      case '*': k = Tok::Star; break;
      case '-': k = Tok::Minus; break;
      default: throw SyntaxError(i, std::string("unexpected character '") + src[i] + "'");
    }
    out.push_back({k, std::string(1, src[i]), start});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, Semiring s) : toks_(lex(src)), s_(s) {}

  const Token& peek(std::size_t k = 0) const {
    std::size_t j = std::min(i_ + k, toks_.size() - 1);
    return toks_[j];
  }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() { return toks_[std::min(i_++, toks_.size() - 1)]; }
  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw SyntaxError(t.pos, msg + (t.kind == Tok::End ? " at end of input" : " near '" + t.text + "'"));
  }
  void finish() {
    if (!at(Tok::End)) fail("trailing input");
  }

  Var lookup(Symbol name) const {
    for (std::size_t k = scope_.size(); k-- > 0;)
      if (scope_[k] == name) return Var::at(static_cast<std::uint32_t>(scope_.size() - 1 - k));
    return Var::free(name);
  }

  // literal '*' prefix, if present
  std::optional<Scalar> literal_prefix() {
    std::size_t k = 0;
    if (peek().kind == Tok::Minus) k = 1;
    if (peek(k).kind != Tok::Number || peek(k + 1).kind != Tok::Star) return std::nullopt;
    std::string text = (k ? "-" : "") + peek(k).text;
    std::size_t pos = peek().pos;
    Scalar a;
    try {
      a = s_.parse_literal(text);
    } catch (const UnboundScalarLiteral& e) {
      throw UnboundScalarLiteral(e.what() + std::string(" (offset ") + std::to_string(pos) + ")");
    }
    i_ += k + 2;
    return a;
  }

  // ---- resource syntax ----

  Term res_term() {
    if (at(Tok::Lambda)) {
      next();
      Symbol x(expect(Tok::Ident, "binder name").text);
      expect(Tok::Dot, "'.'");
      scope_.push_back(x);
      Term body = res_term();
      scope_.pop_back();
      return Term::abs(x, std::move(body));
    }
    Term t = res_atom();
    while (at(Tok::LBrack)) t = Term::app(t, res_bag());
    return t;
  }

  Term res_atom() {
    if (at(Tok::Ident)) return Term::var(lookup(Symbol(next().text)));
    if (at(Tok::LParen)) {
      next();
      Term t = res_term();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a resource term");
  }

  Bag res_bag() {
    expect(Tok::LBrack, "'['");
    std::vector<Term> elems;
    if (!at(Tok::RBrack)) {
      elems.push_back(res_term());
      while (at(Tok::Comma)) {
        next();
        elems.push_back(res_term());
      }
    }
    expect(Tok::RBrack, "']'");
    return Bag(std::move(elems));
  }

  ResourceValue res_value() {
    if (at(Tok::End)) fail("empty input");
    std::vector<std::pair<Scalar, ResExpr>> items;
    bool explicit_sum = false;
    std::optional<bool> is_term;
    for (;;) {
      Scalar c = s_.one();
      while (auto a = literal_prefix()) {
        c = s_.mul(c, *a);
        explicit_sum = true;
      }
      if (at(Tok::Number) && peek().text == "0") {
        next();
        explicit_sum = true;
      } else {
        std::size_t pos = peek().pos;
        ResExpr e = at(Tok::LBrack) ? ResExpr(res_bag()) : ResExpr(res_term());
        bool t = std::holds_alternative<Term>(e);
        if (is_term && *is_term != t) throw SyntaxError(pos, "sum mixes terms and monomials");
        is_term = t;
        items.emplace_back(c, std::move(e));
      }
      if (!at(Tok::Plus)) break;
      next();
      explicit_sum = true;
    }
    finish();
    if (!explicit_sum && items.size() == 1) {
      if (auto* t = std::get_if<Term>(&items[0].second)) return *t;
      return std::get<Bag>(items[0].second);
    }
    if (is_term.value_or(true)) {
      TermSum sum(s_);
      for (auto& [c, e] : items) sum.add(std::get<Term>(e), c);
      return sum;
    }
    BagSum sum(s_);
    for (auto& [c, e] : items) sum.add(std::get<Bag>(e), c);
    return sum;
  }

  // ---- algebraic syntax ----

  Alg alg_sum() {
    Alg m = alg_prod();
    while (at(Tok::Plus)) {
      next();
      m = Alg::sum(m, alg_prod());
    }
    return m;
  }

  Alg alg_prod() {
    if (auto a = literal_prefix()) return Alg::scale(*a, alg_prod());
    return alg_app();
  }

  bool unit_starts() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::LParen:
      case Tok::Lambda: return true;
      case Tok::Number: return peek().text == "0" && peek(1).kind != Tok::Star;
      default: return false;
    }
  }

  Alg alg_app() {
    if (!unit_starts()) fail("expected a term");
    Alg m;
    while (unit_starts()) {
      bool lam = at(Tok::Lambda);
      Alg u = lam ? alg_lambda() : alg_atom();
      m = m ? Alg::app(m, u) : u;
      if (lam) break;
    }
    return m;
  }

  Alg alg_lambda() {
    expect(Tok::Lambda, "'\\'");
    Symbol x(expect(Tok::Ident, "binder name").text);
    expect(Tok::Dot, "'.'");
    scope_.push_back(x);
    Alg body = alg_sum();
    scope_.pop_back();
    return Alg::abs(x, std::move(body));
  }

  Alg alg_atom() {
    if (at(Tok::Ident)) return Alg::var(lookup(Symbol(next().text)));
    if (at(Tok::Number)) {
      next();
      return Alg::zero();
    }
    expect(Tok::LParen, "'('");
    Alg m = alg_sum();
    expect(Tok::RParen, "')'");
    return m;
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Semiring s_;
  std::vector<Symbol> scope_;
};

}  // namespace

ResourceValue parse_resource(std::string_view text, const Semiring& s) {
  Parser p(text, s);
  return p.res_value();
}

Term parse_term(std::string_view text) {
  Parser p(text, Semiring());
  Term t = p.res_term();
  p.finish();
  return t;
}

Bag parse_bag(std::string_view text) {
  Parser p(text, Semiring());
  Bag b = p.res_bag();
  p.finish();
  return b;
}

TermSum parse_term_sum(std::string_view text, const Semiring& s) {
  ResourceValue v = parse_resource(text, s);
  if (auto* t = std::get_if<Term>(&v)) return TermSum(s, *t);
  if (auto* sum = std::get_if<TermSum>(&v)) return *sum;
  throw SyntaxError(0, "expected resource terms, found monomials");
}

Alg parse_algebraic(std::string_view text, const Semiring& s) {
  Parser p(text, s);
  if (p.at(Tok::End)) p.fail("empty input");
  Alg m = p.alg_sum();
  p.finish();
  return m;
}

}  // namespace rlw
