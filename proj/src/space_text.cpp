#include "hirz/space_text.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "hirz/error.hpp"
#include "hirz/poly_text.hpp"

namespace hirz {

namespace {

class SpaceScanner {
 public:
  explicit SpaceScanner(std::string_view text) : s_(text) {}

  SpacePtr parse() {
    SpacePtr s = product();
    skip_space();
    if (!at_end()) fail({"'x'", "end of input"}, "unexpected character");
    return s;
  }

 private:
  SpacePtr product() {
    SpacePtr s = primary();
    for (;;) {
      skip_space();
      if (peek() != 'x') return s;
      ++pos_;
      s = make_product(s, primary());
    }
  }

  SpacePtr primary() {
    skip_space();
    static const std::vector<std::string> starts = {"P<n>", "Proj(", "Hyp(", "Arr(", "'('"};
    if (consume("Proj(")) {
      SpacePtr base = product();
      expect(';');
      std::vector<long> degrees{integer()};
      while (try_consume(',')) degrees.push_back(integer());
      expect(')');
      return make_projective_bundle(base, degrees);
    }
    if (consume("Hyp(")) {
      const long n = integer();
      expect(',');
      const long d = integer();
      expect(')');
      return make_hypersurface(checked_int(n), checked_int(d));
    }
    if (consume("Arr(")) {
      const long n = integer();
      expect(',');
      const long k = integer();
      expect(')');
      return make_arrangement(checked_int(n), checked_int(k));
    }
    if (try_consume('(')) {
      SpacePtr s = product();
      expect(')');
      return s;
    }
    if (peek() == 'P') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"integer"}, "expected a dimension after 'P'");
      const long n = integer();
      return make_projective(checked_int(n));
    }
    fail(starts, at_end() ? "unexpected end of input" : "unexpected character");
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      pos_ = start;
      fail({"integer"}, "expected an integer");
    }
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    long value = 0;
    const char* first = s_.data() + start + (s_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, s_.data() + pos_, value);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = start;
      fail({"integer"}, "integer out of range");
    }
    return value;
  }

  int checked_int(long v) const {
    if (v < -100000 || v > 100000) throw InvalidParameter("parameter " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
  }

  bool consume(std::string_view word) {
    skip_space();
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  bool try_consume(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!try_consume(c)) fail({std::string("'") + c + "'"}, at_end() ? "unexpected end of input" : "unexpected character");
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

struct Line {
  std::string_view text;
  std::size_t offset;  // 0-based offset of text in the document
  int number;
};

class DocumentReader {
 public:
  explicit DocumentReader(std::string_view doc) : doc_(doc) {}

  CustomSpaceSpec read() {
    std::size_t start = 0;
    int number = 0;
    while (start <= doc_.size()) {
      std::size_t end = doc_.find('\n', start);
      if (end == std::string_view::npos) end = doc_.size();
      ++number;
      std::string_view raw = doc_.substr(start, end - start);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      handle(Line{raw, start, number});
      start = end + 1;
    }
    if (!saw_dim_) throw ParseError(doc_.size() + 1, {"'dim'"}, "document has no dim line");
    return spec_;
  }

 private:
  void handle(Line line) {
    std::size_t pos = 0;
    const std::string_view keyword = word(line, pos);
    if (keyword.empty()) return;
    const std::size_t keyword_at = pos - keyword.size();
    if (keyword == "name") {
      spec_.name = std::string(word(line, pos));
      if (spec_.name.empty()) fail(line, pos, {"name"}, "missing name");
    } else if (keyword == "dim") {
      spec_.dim = number(line, pos);
      saw_dim_ = true;
    } else if (keyword == "gen") {
      const std::string_view name = word(line, pos);
      if (name.empty() || !valid_identifier(name)) fail(line, pos, {"generator name"}, "invalid generator name");
      for (const auto& g : spec_.generators)
        if (g.name == name) fail(line, pos, {"new generator name"}, "duplicate generator " + std::string(name));
      if (!spec_.rules.empty() || !spec_.integrals.empty() || !spec_.tangent_chern.empty())
        fail(line, keyword_at, {}, "generators must be declared before use");
      spec_.generators.push_back({std::string(name), number(line, pos)});
    } else if (keyword == "rel") {
      auto [lhs, rhs] = equation(line, pos);
      spec_.rules.emplace_back(monomial_of(line, lhs), polynomial(line, rhs));
    } else if (keyword == "int") {
      auto [lhs, rhs] = equation(line, pos);
      const GeneratorPoly value = polynomial(line, rhs);
      if (value.size() > 1 || (value.size() == 1 && value.begin()->first != Monomial(spec_.generators.size(), 0)))
        fail(line, rhs.first, {"rational number"}, "integral must be a number");
      spec_.integrals.emplace_back(monomial_of(line, lhs), value.empty() ? Rational(0) : value.begin()->second);
    } else if (keyword == "chern") {
      spec_.tangent_chern = polynomial(line, rest(line, pos));
    } else if (keyword == "hyperplane") {
      spec_.hyperplane = polynomial(line, rest(line, pos));
    } else if (keyword == "logcotangent") {
      if (!spec_.log) spec_.log.emplace();
      spec_.log->rank = number(line, pos);
      spec_.log->chern = polynomial(line, rest(line, pos));
    } else if (keyword == "divisor") {
      if (!spec_.log) spec_.log.emplace();
      spec_.log->divisors.push_back(polynomial(line, rest(line, pos)));
    } else {
      fail(line, keyword_at,
           {"name", "dim", "gen", "rel", "int", "chern", "hyperplane", "logcotangent", "divisor"}, "unknown keyword");
    }
  }

  using Span = std::pair<std::size_t, std::size_t>;  // [begin, end) within the line

  static bool valid_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
  }

  static std::string_view word(const Line& line, std::size_t& pos) {
    while (pos < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.text.size() && !std::isspace(static_cast<unsigned char>(line.text[pos]))) ++pos;
    return line.text.substr(start, pos - start);
  }

  int number(const Line& line, std::size_t& pos) {
    const std::string_view w = word(line, pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (w.empty() || ec != std::errc() || ptr != w.data() + w.size())
      fail(line, pos - w.size(), {"integer"}, "expected an integer");
    return value;
  }

  static Span rest(const Line& line, std::size_t pos) { return {pos, line.text.size()}; }

  std::pair<Span, Span> equation(const Line& line, std::size_t pos) {
    const std::size_t eq = line.text.find('=', pos);
    if (eq == std::string_view::npos) fail(line, line.text.size(), {"'='"}, "expected an equation");
    return {{pos, eq}, {eq + 1, line.text.size()}};
  }

  GeneratorPoly polynomial(const Line& line, Span span) {
    const std::string_view src = line.text.substr(span.first, span.second - span.first);
    std::vector<ParsedTerm> terms;
    try {
      terms = parse_terms(src);
    } catch (const ParseError& e) {
      throw ParseError(line.offset + span.first + e.position(), e.expected(),
                       "line " + std::to_string(line.number) + ": malformed polynomial");
    }
    GeneratorPoly out;
    for (const auto& t : terms) {
      Monomial m(spec_.generators.size(), 0);
      for (const auto& [name, e] : t.powers) {
        if (e < 0) fail(line, span.first, {"non-negative exponent"}, "negative exponent on " + name);
        m[index_of(line, span, name)] += e;
      }
      out[m] += t.coefficient;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

  Monomial monomial_of(const Line& line, Span span) {
    const GeneratorPoly p = polynomial(line, span);
    if (p.size() != 1 || !(p.begin()->second == Rational(1)))
      fail(line, span.first, {"monomial"}, "left-hand side must be a single monomial");
    return p.begin()->first;
  }

  std::size_t index_of(const Line& line, Span span, const std::string& name) {
    for (std::size_t i = 0; i < spec_.generators.size(); ++i)
      if (spec_.generators[i].name == name) return i;
    fail(line, span.first, {"declared generator"}, "unknown generator " + name);
  }

  [[noreturn]] void fail(const Line& line, std::size_t pos, std::vector<std::string> expected,
                         const std::string& what) const {
    throw ParseError(line.offset + pos + 1, std::move(expected), "line " + std::to_string(line.number) + ": " + what);
  }

  std::string_view doc_;
  CustomSpaceSpec spec_;
  bool saw_dim_ = false;
};

}  // namespace

SpacePtr parse_space(std::string_view text) { return SpaceScanner(text).parse(); }

CustomSpaceSpec parse_space_document(std::string_view text) { return DocumentReader(text).read(); }

}  // namespace hirz
