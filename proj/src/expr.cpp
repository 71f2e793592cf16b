#include "cdgalab/expr.hpp"

#include <cctype>

#include "cdgalab/errors.hpp"

namespace cdgalab {

bool is_identifier_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'' || c == '~' ||
         c == '@';
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const AlgebraPtr& algebra, const CallResolver& resolve)
      : text_(text), algebra_(algebra), resolve_(resolve) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(0, msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                            std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = multiply(acc, unary());
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    std::optional<std::size_t> generator;
    Polynomial base = atom(generator);
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (generator && algebra_->is_odd(*generator) && e >= 2) {
      fail("odd-degree generator '" + algebra_->generator(*generator).name + "' raised to power " +
           std::to_string(e));
    }
    Polynomial out = Polynomial::constant(algebra_, 1);
    for (unsigned long i = 0; i < e; ++i) out = multiply(out, base);
    return out;
  }

  Polynomial atom(std::optional<std::size_t>& generator) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (is_identifier_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_identifier_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (pos_ < text_.size() && text_[pos_] == '(') return call(name);
      generator = algebra_->index_of(name);
      return Polynomial::generator(algebra_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial number() {
    auto digits = [&] {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return std::string(text_.substr(start, pos_ - start));
    };
    std::string literal = digits();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/' ) {
      ++pos_;
      skip_space();
      std::string den = digits();
      if (den.empty()) fail("expected denominator");
      literal += "/" + den;
    }
    try {
      return Polynomial::constant(algebra_, parse_rational(literal));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  Polynomial call(const std::string& name) {
    ++pos_;  // '('
    const std::size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size() && depth > 0) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')') --depth;
      ++pos_;
    }
    if (depth != 0) fail("unbalanced '(' in call to " + name);
    if (!resolve_) fail("function call '" + name + "(...)' not allowed here");
    return resolve_(name, text_.substr(start, pos_ - start - 1));
  }

  std::string_view text_;
  const AlgebraPtr& algebra_;
  const CallResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const AlgebraPtr& algebra,
                            const CallResolver& resolve_call) {
  return Parser(text, algebra, resolve_call).parse();
}

}  // namespace cdgalab
