#include "fliess/text_io.hpp"

#include <cctype>

#include "fliess/errors.hpp"

namespace fliess {

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool accept_token(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw_parse(what + " at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
  }

  // +1 / -1, consuming an optional sign; `required` forces one between terms.
  int sign(bool required) {
    if (accept('+')) return 1;
    if (accept('-')) return -1;
    if (required) fail("expected '+' or '-'");
    return 1;
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Rational rational_literal() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      std::size_t den = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == den) fail("expected a denominator");
    }
    return parse_rational(text.substr(start, pos - start));
  }

  bool at_word() {
    char c = peek();
    return c == 'x' || c == 'e';
  }

  Word word() {
    skip_ws();
    if (pos < text.size() && text[pos] == 'e') {
      ++pos;
      return Word{};
    }
    Word w;
    bool any = false;
    while (pos + 1 < text.size() && text[pos] == 'x' &&
           (text[pos + 1] == '0' || text[pos + 1] == '1')) {
      if (w.length() >= Word::max_length) fail("word too long");
      w = w.appended(text[pos + 1] == '0' ? Letter::X0 : Letter::X1);
      pos += 2;
      any = true;
    }
    if (!any) fail("expected a word");
    return w;
  }
};

void check_word_length(const Word& w, int trunc, Scanner& s) {
  if (w.length() > trunc)
    s.fail("word '" + w.str() + "' exceeds truncation degree " + std::to_string(trunc));
}

}  // namespace

Series parse_series(std::string_view text, int trunc) {
  Scanner s{text};
  Series out(trunc);
  if (s.eof()) s.fail("empty series text");
  int sign = s.sign(false);
  while (true) {
    if (s.at_digit()) {
      Rational q = s.rational_literal();
      Word w;  // bare rational is the coefficient of the empty word
      if (s.accept('*')) w = s.word();
      check_word_length(w, trunc, s);
      out.add_term(w, Rational(sign) * q);
    } else if (s.at_word()) {
      Word w = s.word();
      check_word_length(w, trunc, s);
      out.add_term(w, Rational(sign));
    } else {
      s.fail("expected a term");
    }
    if (s.eof()) break;
    sign = s.sign(true);
  }
  return out;
}

std::string format_series(const Series& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, q] : c.terms()) {
    const bool neg = q < 0;
    const Rational mag = neg ? Rational(-q) : q;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (w.empty()) {
      out += format_rational(mag);
    } else {
      if (mag != 1) {
        out += format_rational(mag);
        out += "*";
      }
      out += w.str();
    }
  }
  return out;
}

std::string format_pair(const SeriesPair& p) {
  return "(" + format_series(p.left) + ", " + format_series(p.right) + ")";
}

// ---------------------------------------------------------------------------
// Hopf elements and tensors

namespace {

std::string format_monomial(const HopfMonomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  bool first = true;
  for (const auto& [g, exp] : m.factors()) {
    if (!first) out += "*";
    first = false;
    out += g.kind == CoordKind::B ? "b[" : "a[";
    out += g.word.str();
    out += "]";
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

// factor := ('a'|'b') '[' word ']' ('^' int)?
bool at_factor(Scanner& s) {
  char c = s.peek();
  return c == 'a' || c == 'b';
}

HopfMonomial parse_monomial(Scanner& s) {
  HopfMonomial m;
  if (s.accept('1')) return m;
  bool any = false;
  while (true) {
    if (!at_factor(s)) {
      if (!any) s.fail("expected a monomial");
      break;
    }
    CoordKind kind = s.peek() == 'b' ? CoordKind::B : CoordKind::A;
    ++s.pos;
    if (!s.accept('[')) s.fail("expected '['");
    Word w = s.accept(']') ? Word{} : [&] {
      Word v = s.word();
      if (!s.accept(']')) s.fail("expected ']'");
      return v;
    }();
    int exp = 1;
    if (s.accept('^')) {
      Rational e = s.rational_literal();
      if (denominator(e) != 1 || e <= 0) s.fail("exponent must be a positive integer");
      exp = static_cast<int>(numerator(e).convert_to<long long>());
    }
    CoordinateMap g{kind, w};
    if (g.is_unit()) s.fail("b[e] is the unit and cannot appear as a factor");
    for (int i = 0; i < exp; ++i) m = m.times(g);
    any = true;
    std::size_t before = s.pos;
    if (!s.accept('*')) break;
    if (!at_factor(s)) {  // the '*' belonged to an enclosing context
      s.pos = before;
      break;
    }
  }
  return m;
}

std::string format_signed_terms(
    const std::vector<std::pair<std::string, Rational>>& rendered) {
  if (rendered.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [body, q] : rendered) {
    const bool neg = q < 0;
    const Rational mag = neg ? Rational(-q) : q;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (body == "1") {
      out += format_rational(mag);
    } else {
      if (mag != 1) {
        out += format_rational(mag);
        out += "*";
      }
      out += body;
    }
  }
  return out;
}

}  // namespace

std::string format_hopf(const HopfElement& e) {
  std::vector<std::pair<std::string, Rational>> rendered;
  rendered.reserve(e.terms().size());
  for (const auto& [m, q] : e.terms()) rendered.push_back({format_monomial(m), q});
  return format_signed_terms(rendered);
}

HopfElement parse_hopf(std::string_view text) {
  Scanner s{text};
  HopfElement out;
  if (s.eof()) s.fail("empty element text");
  if (s.accept('0')) {
    if (!s.eof()) s.fail("unexpected trailing text");
    return out;
  }
  int sign = s.sign(false);
  while (true) {
    Rational q(sign);
    if (s.at_digit()) {
      q *= s.rational_literal();
      if (s.accept('*')) {
        out.add_term(parse_monomial(s), q);
      } else {
        out.add_term(HopfMonomial{}, q);  // bare coefficient of the unit
      }
    } else {
      out.add_term(parse_monomial(s), q);
    }
    if (s.eof()) break;
    sign = s.sign(true);
  }
  return out;
}

std::string format_tensor(const TensorSum& t) {
  std::vector<std::pair<std::string, Rational>> rendered;
  rendered.reserve(t.terms().size());
  for (const auto& [lr, q] : t.terms())
    rendered.push_back({format_monomial(lr.first) + " (x) " + format_monomial(lr.second), q});
  return format_signed_terms(rendered);
}

TensorSum parse_tensor(std::string_view text) {
  Scanner s{text};
  TensorSum out;
  if (s.eof()) s.fail("empty tensor text");
  if (s.accept('0')) {
    if (!s.eof()) s.fail("unexpected trailing text");
    return out;
  }
  int sign = s.sign(false);
  while (true) {
    Rational q(sign);
    HopfMonomial l;
    bool have_left = false;
    if (s.at_digit()) {
      Rational lead = s.rational_literal();
      if (s.accept('*')) {
        q *= lead;  // coefficient, the monomial follows
      } else {
        // A bare number is the unit monomial scaled by it (e.g. "1 (x) 1").
        q *= lead;
        have_left = true;
      }
    }
    if (!have_left) l = parse_monomial(s);
    if (!s.accept_token("(x)")) s.fail("expected '(x)'");
    HopfMonomial r = parse_monomial(s);
    out.add_term(l, r, q);
    if (s.eof()) break;
    sign = s.sign(true);
  }
  return out;
}

std::string format_word_tensor(const WordTensorSum& t) {
  if (t.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lr, m] : t.terms()) {
    const bool neg = m < 0;
    const std::int64_t mag = neg ? -m : m;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "(" + lr.first.str() + ", " + lr.second.str() + ")";
  }
  return out;
}

CoordinateMap parse_coordinate(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw_parse("expected '<a|b>:<word>' in '" + std::string(text) + "'");
  std::string_view kind = text.substr(0, colon);
  if (kind != "a" && kind != "b") throw_parse("coordinate kind must be 'a' or 'b'");
  return CoordinateMap{kind == "b" ? CoordKind::B : CoordKind::A, Word::parse(text.substr(colon + 1))};
}

std::string format_coordinate(const CoordinateMap& g) {
  return std::string(g.kind == CoordKind::B ? "b:" : "a:") + g.word.str();
}

// ---------------------------------------------------------------------------
// JSON

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw_parse("expected a rational as string or integer");
}

int trunc_from_json(const nlohmann::json& j) {
  if (!j.contains("trunc") || !j["trunc"].is_number_integer())
    throw_parse("series JSON needs an integer 'trunc'");
  return j["trunc"].get<int>();
}

}  // namespace

nlohmann::json series_to_json(const Series& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, q] : c.terms())
    terms.push_back({{"word", w.str()}, {"coeff", format_rational_frac(q)}});
  return {{"trunc", c.trunc()}, {"terms", std::move(terms)}};
}

Series series_from_json(const nlohmann::json& j) {
  Series out(trunc_from_json(j));
  if (!j.contains("terms") || !j["terms"].is_array()) throw_parse("series JSON needs 'terms'");
  for (const auto& term : j["terms"]) {
    if (!term.contains("word") || !term.contains("coeff"))
      throw_parse("series term needs 'word' and 'coeff'");
    Word w = Word::parse(term["word"].get<std::string>());
    if (w.length() > out.trunc())
      throw_parse("word '" + w.str() + "' exceeds truncation degree " +
                  std::to_string(out.trunc()));
    out.add_term(w, rational_from_json(term["coeff"]));
  }
  return out;
}

nlohmann::json pair_to_json(const SeriesPair& p) {
  return {{"left", series_to_json(p.left)}, {"right", series_to_json(p.right)}};
}

SeriesPair pair_from_json(const nlohmann::json& j) {
  if (!j.contains("left") || !j.contains("right"))
    throw_parse("pair JSON needs 'left' and 'right'");
  return SeriesPair(series_from_json(j["left"]), series_from_json(j["right"]));
}

nlohmann::json signal_to_json(const PiecewiseConstantSignal& u) {
  nlohmann::json bp = nlohmann::json::array();
  for (const Rational& b : u.breakpoints()) bp.push_back(format_rational(b));
  nlohmann::json vals = nlohmann::json::array();
  for (const Rational& v : u.values()) vals.push_back(format_rational(v));
  return {{"breakpoints", std::move(bp)}, {"values", std::move(vals)}};
}

PiecewiseConstantSignal signal_from_json(const nlohmann::json& j) {
  if (!j.contains("breakpoints") || !j.contains("values"))
    throw_parse("signal JSON needs 'breakpoints' and 'values'");
  std::vector<Rational> bp, vals;
  for (const auto& b : j["breakpoints"]) bp.push_back(rational_from_json(b));
  for (const auto& v : j["values"]) vals.push_back(rational_from_json(v));
  return PiecewiseConstantSignal(std::move(bp), std::move(vals));
}

}  // namespace fliess
