#include "colorlie/scalar.hpp"

#include "colorlie/error.hpp"

#include <cctype>
#include <ostream>

namespace colorlie {

namespace {

std::string rational_text(const mpq_class &q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Reads [+-]digits[/digits] starting at pos; returns false if no digits.
bool read_rational(std::string_view text, std::size_t &pos, mpq_class &out,
                   bool allow_sign) {
  std::size_t start = pos;
  bool negative = false;
  if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == digits) {
    pos = start;
    return false;
  }
  mpz_class num(std::string(text.substr(digits, pos - digits)));
  mpz_class den(1);
  if (pos < text.size() && text[pos] == '/') {
    std::size_t d0 = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == d0)
      throw ParseError(pos, "expected denominator digits");
    den = mpz_class(std::string(text.substr(d0, pos - d0)));
    if (den == 0)
      throw ParseError(d0, "zero denominator");
  }
  out = mpq_class(negative ? mpz_class(-num) : num, den);
  out.canonicalize();
  return true;
}

} // namespace

Scalar::Scalar(long num, long den) : re_(num, den) {
  if (den == 0)
    throw AlgebraError(ErrorCode::Invalid, "zero denominator");
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw AlgebraError(ErrorCode::Invalid, "division by zero scalar");
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar &Scalar::operator+=(const Scalar &o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (o.is_zero())
    throw AlgebraError(ErrorCode::Invalid, "division by zero scalar");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  std::string out = rational_text(re_);
  if (sgn(im_) == 0)
    return out;
  if (sgn(im_) > 0)
    out += '+';
  out += rational_text(im_);
  out += "*i";
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  std::size_t pos = 0;
  auto imaginary_suffix = [&](std::size_t &p) {
    if (text.substr(p, 2) == "*i") {
      p += 2;
      return true;
    }
    return false;
  };

  if (text.empty())
    throw ParseError(0, "empty scalar");

  // Bare unit forms: "i", "-i", "+i".
  if (text == "i" || text == "+i")
    return Scalar::i();
  if (text == "-i")
    return -Scalar::i();

  mpq_class first;
  if (!read_rational(text, pos, first, true))
    throw ParseError(pos, "expected rational");
  if (imaginary_suffix(pos)) {
    if (pos != text.size())
      throw ParseError(pos, "trailing characters");
    return Scalar(mpq_class(0), first);
  }
  if (pos == text.size())
    return Scalar(first);

  if (text[pos] != '+' && text[pos] != '-')
    throw ParseError(pos, "expected '+' or '-' before imaginary part");
  mpq_class second;
  std::size_t sign_pos = pos;
  if (!read_rational(text, pos, second, true)) {
    // "a+i" / "a-i"
    if (text.substr(sign_pos + 1) == "i")
      return Scalar(first, mpq_class(text[sign_pos] == '-' ? -1 : 1));
    throw ParseError(pos, "expected imaginary coefficient");
  }
  if (!imaginary_suffix(pos))
    throw ParseError(pos, "expected '*i'");
  if (pos != text.size())
    throw ParseError(pos, "trailing characters");
  return Scalar(first, second);
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

} // namespace colorlie
