#include <cctype>
#include <optional>

#include "curvedisc/poly.hpp"

namespace curvedisc {

namespace {

struct Term {
  std::array<unsigned, Monomial::kMaxVars> exps{};
  Rational rational{1};
  ParamPoly param{Integer(1)};
  std::size_t position = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const RingSpec& ring) : s_(text), ring_(ring) {}

  std::vector<Term> parse_poly() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Term t = parse_term();
      if (negate) t.rational = -t.rational;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw SyntaxError(pos_, std::string("unexpected '") + peek() + "'");
      negate = peek() == '-';
      ++pos_;
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer parse_natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  unsigned parse_exponent() {
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    const std::size_t at = pos_;
    Integer e = parse_natural();
    if (e > 0xFFFF) throw SyntaxError(at, "exponent too large");
    return static_cast<unsigned>(e.get_ui());
  }

  std::string parse_identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  static std::optional<int> variable_index(const std::string& name) {
    if (name == "x" || name == "x1") return 0;
    if (name == "y" || name == "x2") return 1;
    if (name == "z" || name == "x3") return 2;
    if (name == "w" || name == "x4") return 3;
    return std::nullopt;
  }

  // Integer-coefficient polynomial in the declared parameter, inside parentheses.
  ParamPoly parse_param_poly() {
    ParamPoly sum;
    bool negate = false;
    skip_ws();
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      ParamPoly term(Integer(1));
      for (;;) {
        skip_ws();
        if (at_end()) throw SyntaxError(pos_, "unterminated parenthesis");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          term = term * parse_natural();
        } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
          const std::size_t at = pos_;
          std::string name = parse_identifier();
          if (!ring_.is_param() || name != ring_.param())
            throw Error(ErrorCode::UnknownVariable, "'" + name + "' at position " + std::to_string(at) +
                                                        " is not the declared parameter");
          term = term * ParamPoly::monomial(Integer(1), parse_exponent());
        } else {
          throw SyntaxError(pos_, "expected a parameter factor");
        }
        skip_ws();
        if (!at_end() && peek() == '*') {
          ++pos_;
          continue;
        }
        break;
      }
      sum = negate ? sum - term : sum + term;
      skip_ws();
      if (at_end()) throw SyntaxError(pos_, "unterminated parenthesis");
      if (peek() == ')') {
        ++pos_;
        return sum;
      }
      if (peek() != '+' && peek() != '-') throw SyntaxError(pos_, "expected '+', '-' or ')'");
      negate = peek() == '-';
      ++pos_;
    }
  }

  void parse_factor(Term& t) {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "expected a factor");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_natural();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        Integer den = parse_natural();
        if (den == 0) throw SyntaxError(at, "zero denominator");
        t.rational *= Rational(num, den);
        t.rational.canonicalize();
      } else {
        t.rational *= Rational(num);
      }
      return;
    }
    if (c == '(') {
      ++pos_;
      if (!ring_.is_param()) throw SyntaxError(pos_ - 1, "parenthesised coefficients need a parameter ring");
      t.param = t.param * parse_param_poly();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      std::string name = parse_identifier();
      if (auto idx = variable_index(name)) {
        t.exps[static_cast<std::size_t>(*idx)] += parse_exponent();
        return;
      }
      if (ring_.is_param() && name == ring_.param()) {
        t.param = t.param * ParamPoly::monomial(Integer(1), parse_exponent());
        return;
      }
      throw Error(ErrorCode::UnknownVariable, "'" + name + "' at position " + std::to_string(at));
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  Term parse_term() {
    Term t;
    skip_ws();
    t.position = pos_;
    parse_factor(t);
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      parse_factor(t);
    }
    return t;
  }

  std::string_view s_;
  const RingSpec& ring_;
  std::size_t pos_ = 0;
};

Scalar term_coefficient(const Term& t, const RingSpec& ring) {
  if (ring.is_param()) {
    if (t.rational.get_den() != 1)
      throw SyntaxError(t.position, "fractional coefficient in " + ring.to_string());
    return Scalar::from_param(ring, t.param * t.rational.get_num());
  }
  if (ring.is_integers() && t.rational.get_den() != 1)
    throw SyntaxError(t.position, "fractional coefficient in " + ring.to_string());
  return Scalar::from_rational(ring, t.rational);
}

}  // namespace

HomPoly parse(std::string_view text, const RingSpec& ring, int nvars) {
  Parser parser(text, ring);
  std::vector<Term> terms = parser.parse_poly();

  int highest = 0;
  for (const auto& t : terms)
    for (int i = 0; i < Monomial::kMaxVars; ++i)
      if (t.exps[static_cast<std::size_t>(i)]) highest = std::max(highest, i + 1);
  if (nvars == 0) nvars = std::max(2, highest);
  if (highest > nvars)
    throw Error(ErrorCode::UnknownVariable,
                "x" + std::to_string(highest) + " used in a polynomial of " + std::to_string(nvars) + " variables");

  std::optional<unsigned> degree;
  for (const auto& t : terms) {
    unsigned d = 0;
    for (unsigned e : t.exps) d += e;
    if (degree && *degree != d)
      throw Error(ErrorCode::NotHomogeneous, "term at position " + std::to_string(t.position) + " has degree " +
                                                 std::to_string(d) + ", expected " + std::to_string(*degree));
    degree = d;
  }
  HomPoly f(ring, nvars, static_cast<int>(*degree));
  for (const auto& t : terms) {
    Monomial m(std::span<const unsigned>(t.exps.data(), static_cast<std::size_t>(nvars)));
    f.add_term(m, term_coefficient(t, ring));
  }
  return f;
}

}  // namespace curvedisc
