#include "qdeg/parser.hpp"

#include "qdeg/errors.hpp"

#include <cctype>
#include <string>

namespace qdeg {

namespace {

class Parser {
public:
  Parser(std::string_view text, const GradedRing& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial f = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return f;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial f = term();
    if (negate) f = -f;
    for (;;) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  Polynomial term() {
    Polynomial f = factor();
    while (accept('*')) f = f * factor();
    return f;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", start);
      if (digits.size() > 6) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      if (!at_end() && text_[pos_] == '/') {
        std::size_t slash = pos_++;
        std::string den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", slash + 1);
        Integer d(den, 10);
        if (d == 0) throw ParseError("zero denominator", slash + 1);
        return Polynomial::constant(ring_.nvars(), make_rational(Integer(num, 10), d),
                                    ring_.order());
      }
      return Polynomial::constant(ring_.nvars(), Rational(Integer(num, 10)), ring_.order());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return ring_.variable(*idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const GradedRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const GradedRing& ring) {
  return Parser(text, ring).parse();
}

}  // namespace qdeg
