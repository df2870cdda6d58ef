#include "hirz/expr_parser.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "hirz/error.hpp"

namespace hirz {

namespace {

const std::vector<std::string> kFactorStart = {"P<n>", "A<n>", "Gm", "C<g>", "L", "pt", "integer", "'('", "'D('"};

class ExprScanner {
 public:
  explicit ExprScanner(std::string_view src) : s_(src) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (!at_end()) fail({"'+'", "'-'", "'*'", "end of input"}, "unexpected character");
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return e;
      ++pos_;
      e = Expr::make_binary(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, e, term());
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return e;
      ++pos_;
      e = Expr::make_binary(Expr::Kind::Mul, e, factor());
    }
  }

  ExprPtr factor() {
    skip_space();
    if (at_end()) fail(kFactorStart, "unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ExprPtr n = Expr::make_integer(integer());
      skip_space();
      if (starts_factor()) return Expr::make_binary(Expr::Kind::Mul, n, factor());
      return n;
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      close_paren();
      return e;
    }
    return atom();
  }

  bool starts_factor() const {
    if (at_end()) return false;
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  ExprPtr atom() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
    const std::string_view word = s_.substr(start, end - start);
    if (word == "pt" || word == "L" || word == "Gm") {
      pos_ = end;
      if (word == "pt") return Expr::make_atom(AtomKind::Point);
      if (word == "L") return Expr::make_atom(AtomKind::Lefschetz);
      return Expr::make_atom(AtomKind::Torus);
    }
    if (word == "D" && end < s_.size() && s_[end] == '(') {
      pos_ = end + 1;
      ExprPtr e = expr();
      close_paren();
      return Expr::make_dual(e);
    }
    if (word == "P" || word == "A" || word == "C") {
      pos_ = end;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail({"integer"}, "expected a parameter after '" + std::string(word) + "'");
      const long long n = integer();
      const AtomKind kind = word == "P" ? AtomKind::Projective : (word == "A" ? AtomKind::Affine : AtomKind::Curve);
      return Expr::make_atom(kind, n);
    }
    fail(kFactorStart, "unexpected character");
  }

  long long integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = start;
      fail({"integer"}, "integer out of range");
    }
    return value;
  }

  void close_paren() {
    skip_space();
    if (peek() != ')')
      fail({"')'", "'+'", "'-'", "'*'"}, at_end() ? "unexpected end of input" : "unexpected character");
    ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
    throw ParseError(pos_ + 1, std::move(expected), what);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view src) { return ExprScanner(src).parse(); }

}  // namespace hirz
