#include "lefkit/parse.hpp"

#include <cctype>

#include "lefkit/errors.hpp"

namespace lefkit {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const VariableSet& vars) : text_(text), vars_(vars) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input");
    return p;
  }

 private:
  const std::string& text_;
  const VariableSet& vars_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw SyntaxError(pos_, what);
  }

  Polynomial expr() {
    bool negate = accept('-');
    Polynomial p = term();
    if (negate) p = -p;
    for (;;) {
      if (accept('+')) {
        p = p + term();
      } else if (accept('-')) {
        p = p - term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial p = base();
    if (accept('^')) {
      unsigned e = natural();
      p = p.pow(e);
    }
    return p;
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "number, variable or '('");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      expect(')', "')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw SyntaxError(pos_, "number, variable or '('");
  }

  unsigned natural() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError(pos_, "natural number");
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 1000000) throw SyntaxError(pos_, "exponent within range");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  Polynomial rational() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Integer num(text_.substr(start, pos_ - start));
    Integer den(1);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw SyntaxError(pos_, "denominator");
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      den = Integer(text_.substr(dstart, pos_ - dstart));
      if (den == 0) throw SyntaxError(dstart, "nonzero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return Polynomial::constant(vars_.size(), q);
  }

  Polynomial identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    auto idx = vars_.index(name);
    if (!idx) throw UnknownVariable(name, start);
    return Polynomial::variable(vars_.size(), *idx);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VariableSet& vars) {
  return Parser(text, vars).run();
}

std::string print_monomial(const Monomial& m, const VariableSet& vars) {
  if (m.nvars() > vars.size()) throw Error("monomial has more variables than the ring");
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  if (out.empty()) out = "1";
  return out;
}

std::string print_polynomial(const Polynomial& f, const VariableSet& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = t.coeff < 0;
    Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += print_monomial(t.mono, vars);
    } else {
      out += mag.get_str() + "*" + print_monomial(t.mono, vars);
    }
  }
  return out;
}

}  // namespace lefkit
