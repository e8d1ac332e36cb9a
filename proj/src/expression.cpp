#include "colorlie/expression.hpp"

#include "colorlie/error.hpp"

#include <cctype>

namespace colorlie {

namespace {

class Parser {
public:
  Parser(const UniversalEnvelope &U, std::string_view text) : U_(U), text_(text) {}

  EnvelopingElement run() {
    auto value = expr();
    skip();
    if (pos_ < text_.size())
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return value;
  }

private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  EnvelopingElement expr() {
    auto value = term();
    while (true) {
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        return value;
    }
  }

  EnvelopingElement term() {
    auto value = factor();
    while (accept('*'))
      value = value * factor();
    return value;
  }

  EnvelopingElement factor() {
    const bool negate = accept('-');
    auto value = primary();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      const std::string digits = integer();
      if (digits.empty())
        throw ParseError(start, "expected a non-negative integer exponent");
      if (digits.size() > 4)
        throw ParseError(start, "exponent too large");
      auto base = value;
      value = U_.one();
      for (int k = std::stoi(digits); k > 0; --k)
        value = value * base;
    }
    return negate ? -value : value;
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  EnvelopingElement primary() {
    skip();
    if (pos_ >= text_.size())
      throw ParseError(pos_, "unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto value = expr();
      if (!accept(')'))
        throw ParseError(pos_, "expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = integer();
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = integer();
        if (den.empty())
          throw ParseError(at, "expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos)
          throw ParseError(at, "zero denominator");
      }
      mpq_class q{mpz_class{num}, mpz_class{den}};
      q.canonicalize();
      return U_.scalar(Scalar(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const int idx = U_.algebra().find(name);
      if (idx >= 0)
        return U_.generator(static_cast<std::size_t>(idx));
      if (name == "i")
        return U_.scalar(Scalar::i());
      throw ParseError(start, "unknown generator '" + name + "'");
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  const UniversalEnvelope &U_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

EnvelopingElement parse_expression(const UniversalEnvelope &U, std::string_view text) {
  return Parser(U, text).run();
}

} // namespace colorlie
