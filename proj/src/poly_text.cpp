#include "hirz/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "hirz/error.hpp"

namespace hirz {

namespace {

class TermScanner {
 public:
  explicit TermScanner(std::string_view text) : s_(text) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail({"'+'", "'-'", "end of input"}, "unexpected character");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  ParsedTerm term(bool negative) {
    skip_space();
    ParsedTerm t;
    t.coefficient = Rational(1);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coefficient = number();
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        Rational den = number();
        if (den.is_zero()) fail({"non-zero denominator"}, "zero denominator");
        t.coefficient /= den;
      }
      skip_space();
      if (peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      t.powers.push_back(factor());
      skip_space();
      while (peek() == '*') {
        ++pos_;
        t.powers.push_back(factor());
        skip_space();
      }
    }
    if (negative) t.coefficient = -t.coefficient;
    return t;
  }

  std::pair<std::string, int> factor() {
    skip_space();
    if (!is_ident_start(peek())) fail({"variable"}, "expected a variable");
    std::size_t start = pos_;
    while (!at_end() && is_ident_char(peek())) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    skip_space();
    int exponent = 1;
    if (peek() == '^') {
      ++pos_;
      skip_space();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      Rational e = number();
      if (!e.is_integer() || abs(e.numerator()) > std::numeric_limits<int>::max())
        fail({"small integer exponent"}, "exponent out of range");
      exponent = static_cast<int>(e.numerator().get_si());
      if (neg) exponent = -exponent;
    }
    return {name, exponent};
  }

  Rational number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"integer"}, "expected a number");
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10));
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
    throw ParseError(pos_ + 1, std::move(expected), what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text) { return TermScanner(text).parse(); }

std::string render_power(std::string_view name, int exponent) {
  if (exponent == 0) return {};
  std::string s(name);
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

std::string render_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [c, mono] : terms) {
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational magnitude = negative ? -c : c;
    if (mono.empty()) {
      out += magnitude.to_string();
    } else {
      if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::string render(const LaurentY& p) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(c, render_power("y", e));
  return render_terms(terms);
}

std::string render(const PolyUV& p) {
  std::vector<std::pair<PolyUV::Exponent, Integer>> sorted(p.terms().begin(), p.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second;
    int db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [e, c] : sorted) {
    std::string mono = render_power("u", e.first);
    std::string vpart = render_power("v", e.second);
    if (!mono.empty() && !vpart.empty()) mono += "*";
    mono += vpart;
    terms.emplace_back(Rational(c), mono);
  }
  return render_terms(terms);
}

std::string render(const RationalFunctionY& q) {
  if (q.denominator_power() == 0) return render(q.numerator());
  std::string out = "(" + render(q.numerator()) + ")/(1 + y)";
  if (q.denominator_power() != 1) out += "^" + std::to_string(q.denominator_power());
  return out;
}

LaurentY parse_laurent_y(std::string_view text) {
  LaurentY p;
  for (const auto& t : parse_terms(text)) {
    int e = 0;
    for (const auto& [name, k] : t.powers) {
      if (name != "y") throw ParseError(1, {"y"}, "unknown variable '" + name + "'");
      e += k;
    }
    p += LaurentY::monomial(t.coefficient, e);
  }
  return p;
}

PolyUV parse_poly_uv(std::string_view text) {
  PolyUV p;
  for (const auto& t : parse_terms(text)) {
    if (!t.coefficient.is_integer()) throw ParseError(1, {"integer coefficient"}, "non-integer coefficient");
    int a = 0, b = 0;
    for (const auto& [name, k] : t.powers) {
      if (name == "u") a += k;
      else if (name == "v") b += k;
      else throw ParseError(1, {"u", "v"}, "unknown variable '" + name + "'");
    }
    p += PolyUV::monomial(t.coefficient.numerator(), a, b);
  }
  return p;
}

}  // namespace hirz
