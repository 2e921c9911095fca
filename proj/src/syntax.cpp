#include "aimp/syntax.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include "aimp/detail/overloaded.hpp"

namespace aimp {

namespace {

using detail::overloaded;

enum class Tok { Ident, Number, Assign, Semi, PlusOp, MinusOp, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), l, cl});
      advance(1);
    };
    switch (c) {
      case ';': single(Tok::Semi); continue;
      case '+': single(Tok::PlusOp); continue;
      case '-': single(Tok::MinusOp); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ':':
        if (i + 1 < src.size() && src[i + 1] == '=') {
          out.push_back({Tok::Assign, ":=", l, cl});
          advance(2);
          continue;
        }
        throw ParseError(l, cl, "expected ':='");
      default: break;
    }
    if (is_lower(c)) {
      std::size_t j = i;
      while (j < src.size() && (is_lower(src[j]) || is_digit(src[j]) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < src.size() && is_digit(src[j])) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        if (j >= src.size() || !is_digit(src[j])) throw ParseError(l, cl + (j - i), "expected digit after '.'");
        while (j < src.size() && is_digit(src[j])) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k >= src.size() || !is_digit(src[k])) throw ParseError(l, cl + (k - i), "malformed exponent");
        while (k < src.size() && is_digit(src[k])) ++k;
        j = k;
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    CmdPtr c = cmd();
    if (peek().kind != Tok::End) fail("expected ';' or end of input");
    return Program{c};
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().line, peek().column, msg);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    next();
  }

  CmdPtr cmd() {
    CmdPtr c = atom();
    if (peek().kind != Tok::Semi) return c;
    next();
    return build::seq(c, cmd());
  }

  CmdPtr atom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      CmdPtr c = cmd();
      expect(Tok::RParen, "')'");
      return c;
    }
    if (t.kind != Tok::Ident) fail("expected a command");
    // `skip` and `print` are assignment targets when followed by ':='.
    if (peek(1).kind == Tok::Assign) {
      std::string name = next().text;
      next();
      if (!Address::is_valid(name)) throw ParseError(t.line, t.column, "'" + name + "' is reserved");
      return build::set(Address(name), expr());
    }
    if (t.text == "skip") {
      next();
      return build::skip();
    }
    if (t.text == "print") {
      next();
      return build::print(expr());
    }
    next();
    fail("expected ':='");
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Tok::PlusOp || peek().kind == Tok::MinusOp) {
      bool is_plus = next().kind == Tok::PlusOp;
      ExprPtr r = term();
      e = is_plus ? build::plus(e, r) : build::minus(e, r);
    }
    return e;
  }

  ExprPtr number(bool negative) {
    const Token& t = next();
    double v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw ParseError(t.line, t.column, "number out of range");
    }
    return build::num(negative ? -v : v);
  }

  ExprPtr term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        return number(false);
      case Tok::MinusOp:
        next();
        if (peek().kind != Tok::Number) fail("expected a number after unary '-'");
        return number(true);
      case Tok::LParen: {
        next();
        ExprPtr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        next();
        if (t.text == "true") return build::boolean(true);
        if (t.text == "false") return build::boolean(false);
        return build::addr(t.text);
      default:
        fail("expected an expression");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool is_arith(const Expr& e) {
  return std::holds_alternative<Plus>(e.node) || std::holds_alternative<Minus>(e.node);
}

void emit_expr(std::string& out, const Expr& e) {
  auto binary = [&](const ExprPtr& l, const ExprPtr& r, const char* op) {
    emit_expr(out, *l);
    out += op;
    if (is_arith(*r)) {
      out += '(';
      emit_expr(out, *r);
      out += ')';
    } else {
      emit_expr(out, *r);
    }
  };
  std::visit(overloaded{
                 [&](const AddrRef& a) { out += a.address.name(); },
                 [&](const NumLit& n) { out += format_number(n.value); },
                 [&](const BoolLit& b) { out += b.value ? "true" : "false"; },
                 [&](const Plus& p) { binary(p.left, p.right, " + "); },
                 [&](const Minus& m) { binary(m.left, m.right, " - "); },
             },
             e.node);
}

void emit_cmd(std::string& out, const Cmd& c) {
  std::visit(overloaded{
                 [&](const Set& s) {
                   out += s.target.name();
                   out += " := ";
                   emit_expr(out, *s.source);
                 },
                 [&](const Skip&) { out += "skip"; },
                 [&](const Seq& s) {
                   if (std::holds_alternative<Seq>(s.first->node)) {
                     out += '(';
                     emit_cmd(out, *s.first);
                     out += ')';
                   } else {
                     emit_cmd(out, *s.first);
                   }
                   out += " ; ";
                   emit_cmd(out, *s.second);
                 },
                 [&](const Print& p) {
                   out += "print ";
                   emit_expr(out, *p.source);
                 },
             },
             c.node);
}

}  // namespace

Program parse_program(std::string_view text) {
  return Parser(lex(text)).program();
}

std::string print_expr(const Expr& e) {
  std::string out;
  emit_expr(out, e);
  return out;
}

std::string print_cmd(const Cmd& c) {
  std::string out;
  emit_cmd(out, c);
  return out;
}

std::string print_program(const Program& p) {
  return print_cmd(*p.root);
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace aimp
