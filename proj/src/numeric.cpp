#include "intangle/numeric.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "intangle/errors.hpp"

namespace intangle {

namespace {

constexpr std::string_view kRootSign = "\xE2\x88\x9A";  // U+221A

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  text = trim(text);
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() == start) {
    throw Error(ErrorKind::ParseError, "expected an integer in \"" + std::string(whole) + "\"");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorKind::ParseError, "bad digit in \"" + std::string(whole) + "\"");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits);
}

BigInt pow10(unsigned k) { return boost::multiprecision::pow(BigInt(10), k); }

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(body, text));
  const BigInt num = parse_integer(body.substr(0, slash), text);
  const BigInt den = parse_integer(body.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative number");
  return boost::multiprecision::sqrt(n);
}

SquareSplit split_square(const BigInt& n) {
  if (n < 0) throw std::domain_error("split_square of negative number");
  SquareSplit out{1, 1};
  if (n == 0) return {0, 1};
  BigInt rest = n;
  for (BigInt p = 2; p * p <= rest; ++p) {
    const BigInt p2 = p * p;
    while (rest % p2 == 0) {
      rest /= p2;
      out.outer *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      out.radicand *= p;
    }
  }
  out.radicand *= rest;
  return out;
}

BigInt ceil_pow(const BigInt& base, const Rational& exponent) {
  if (base < 1 || exponent < 0) throw std::domain_error("ceil_pow expects base >= 1 and exponent >= 0");
  const BigInt p = boost::multiprecision::numerator(exponent);
  const BigInt q = boost::multiprecision::denominator(exponent);
  const BigInt target = boost::multiprecision::pow(base, p.convert_to<unsigned>());
  if (q == 1) return target;
  const unsigned qq = q.convert_to<unsigned>();
  BigInt lo = 1;
  BigInt hi = 1;
  while (boost::multiprecision::pow(hi, qq) < target) hi *= 2;
  // least c in [lo, hi] with c^q >= target
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, qq) >= target) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

// ---------------------------------------------------------------- Surd

Surd Surd::make(Rational coefficient, const BigInt& radicand) {
  if (radicand < 0) throw std::domain_error("negative radicand");
  Surd s;
  if (coefficient == 0 || radicand == 0) return s;
  const auto split = split_square(radicand);
  s.coefficient_ = coefficient * Rational(split.outer);
  s.radicand_ = split.radicand;
  return s;
}

Surd Surd::sqrt(const Rational& value) {
  if (value < 0) throw std::domain_error("square root of a negative rational");
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  return make(Rational(BigInt(1), den), num * den);
}

Surd Surd::parse(std::string_view text) {
  const auto body = trim(text);
  std::size_t root = body.find(kRootSign);
  std::size_t root_len = kRootSign.size();
  if (root == std::string_view::npos) {
    root = body.find("sqrt(");
    root_len = 5;
    if (root == std::string_view::npos) return Surd(parse_rational(body));
  }
  auto coeff_text = trim(body.substr(0, root));
  auto rad_text = body.substr(root + root_len);
  if (root_len == 5) {
    if (rad_text.empty() || rad_text.back() != ')') {
      throw Error(ErrorKind::ParseError, "unterminated sqrt( in \"" + std::string(text) + "\"");
    }
    rad_text.remove_suffix(1);
  }
  if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.remove_suffix(1);
  Rational coeff = 1;
  if (coeff_text == "-") coeff = -1;
  else if (!coeff_text.empty() && coeff_text != "+") coeff = parse_rational(coeff_text);
  return make(coeff, parse_integer(rad_text, text));
}

int Surd::sign() const { return coefficient_ > 0 ? 1 : (coefficient_ < 0 ? -1 : 0); }

Rational Surd::signed_square() const {
  return coefficient_ * boost::multiprecision::abs(coefficient_) * Rational(radicand_);
}

double Surd::to_double() const {
  return intangle::to_double(coefficient_) * std::sqrt(radicand_.convert_to<double>());
}

std::string Surd::to_string() const {
  if (radicand_ == 1) return intangle::to_string(coefficient_);
  std::string prefix;
  if (coefficient_ == 1) prefix = "";
  else if (coefficient_ == -1) prefix = "-";
  else prefix = intangle::to_string(coefficient_);
  return prefix + std::string(kRootSign) + radicand_.str();
}

Surd operator*(const Surd& a, const Surd& b) {
  return Surd::make(a.coefficient_ * b.coefficient_, a.radicand_ * b.radicand_);
}

Surd operator/(const Surd& a, const Surd& b) {
  if (b.is_zero()) throw std::domain_error("division by zero surd");
  // a / (c sqrt r) = a * sqrt(r) / (c r)
  return Surd::make(a.coefficient_ / (b.coefficient_ * Rational(b.radicand_)), a.radicand_ * b.radicand_);
}

Surd operator-(const Surd& a) {
  Surd out = a;
  out.coefficient_ = -out.coefficient_;
  return out;
}

std::strong_ordering operator<=>(const Surd& a, const Surd& b) {
  const Rational sa = a.signed_square();
  const Rational sb = b.signed_square();
  if (sa < sb) return std::strong_ordering::less;
  if (sa > sb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_decimal(const Surd& value, int significant) {
  if (value.is_zero()) return "0";
  const Rational mag = boost::multiprecision::abs(value.coefficient());
  const BigInt p = boost::multiprecision::numerator(mag);
  const BigInt q = boost::multiprecision::denominator(mag);
  const BigInt r = value.radicand();

  // value * 10^k = sqrt(X) / Y
  auto scaled = [&](int k, BigInt& x, BigInt& y) {
    x = p * p * r;
    y = q;
    if (k >= 0) x *= pow10(static_cast<unsigned>(2 * k));
    else y *= pow10(static_cast<unsigned>(-k));
  };
  int exponent = static_cast<int>(std::floor(std::log10(std::abs(value.to_double()))));
  const BigInt upper = pow10(static_cast<unsigned>(significant));
  const BigInt lower = pow10(static_cast<unsigned>(significant - 1));
  BigInt floor_val, x, y;
  for (;;) {
    scaled(significant - 1 - exponent, x, y);
    floor_val = isqrt(x) / y;
    if (floor_val >= upper) ++exponent;
    else if (floor_val < lower) --exponent;
    else break;
  }
  const BigInt twice = 2 * floor_val + 1;
  const BigInt lhs = 4 * x;
  const BigInt rhs = twice * twice * y * y;
  if (lhs > rhs || (lhs == rhs && floor_val % 2 == 1)) ++floor_val;
  if (floor_val == upper) {
    floor_val = lower;
    ++exponent;
  }

  std::string digits = floor_val.str();
  std::string out;
  if (exponent >= 0) {
    const auto int_len = static_cast<std::size_t>(exponent + 1);
    if (int_len >= digits.size()) {
      out = digits + std::string(int_len - digits.size(), '0');
    } else {
      out = digits.substr(0, int_len) + "." + digits.substr(int_len);
    }
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return value.sign() < 0 ? "-" + out : out;
}

std::string format_float(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

// ---------------------------------------------------------------- QuadNumber

QuadNumber::QuadNumber(Rational a, Rational b, std::uint64_t radicand) : a_(std::move(a)), b_(std::move(b)) {
  if (radicand == 0) {
    b_ = 0;
    d_ = 1;
  } else {
    const auto split = split_square(BigInt(radicand));
    b_ *= Rational(split.outer);
    d_ = split.radicand.convert_to<std::uint64_t>();
  }
  normalize();
}

void QuadNumber::normalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) d_ = 1;
}

std::uint64_t QuadNumber::common_radicand(const QuadNumber& o) const {
  if (o.b_ == 0) return d_;
  if (b_ == 0 || d_ == o.d_) return o.d_;
  throw Error(ErrorKind::ModelMismatch, "Q(sqrt " + std::to_string(d_) + ") vs Q(sqrt " + std::to_string(o.d_) + ")");
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
  if (o.b_ == 0) {
    if (o.a_ != 0) a_ += o.a_;
    return *this;
  }
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) {
  d_ = common_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
  if (o.b_ == 0) {
    if (o.a_ == 0) return *this = QuadNumber();
    if (o.a_ == 1) return *this;
    a_ *= o.a_;
    b_ *= o.a_;
    normalize();
    return *this;
  }
  const std::uint64_t d = common_radicand(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

QuadNumber operator/(const QuadNumber& a, const QuadNumber& b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Q(sqrt d)");
  if (b.is_rational()) {
    QuadNumber out = a;
    out.a_ /= b.a_;
    out.b_ /= b.a_;
    out.normalize();
    return out;
  }
  const QuadNumber conj(b.a_, -b.b_, b.d_);
  const Rational norm = b.a_ * b.a_ - b.b_ * b.b_ * Rational(b.d_);
  QuadNumber out = a * conj;
  out.a_ /= norm;
  out.b_ /= norm;
  out.normalize();
  return out;
}

QuadNumber operator-(const QuadNumber& a) {
  QuadNumber out = a;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

int QuadNumber::sign() const {
  const int sa = a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
  const int sb = b_ > 0 ? 1 : (b_ < 0 ? -1 : 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  const Rational a2 = a_ * a_;
  const Rational b2d = b_ * b_ * Rational(d_);
  if (a2 == b2d) return 0;
  return a2 > b2d ? sa : sb;
}

double QuadNumber::to_double() const {
  return intangle::to_double(a_) + intangle::to_double(b_) * std::sqrt(static_cast<double>(d_));
}

std::string QuadNumber::to_string() const {
  if (b_ == 0) return intangle::to_string(a_);
  std::string out = intangle::to_string(a_);
  out += b_ < 0 ? "-" : "+";
  out += intangle::to_string(boost::multiprecision::abs(b_));
  out += kRootSign;
  out += std::to_string(d_);
  return out;
}

QuadNumber QuadNumber::parse(std::string_view text) {
  const auto body = trim(text);
  const auto root = body.find(kRootSign);
  if (root == std::string_view::npos) return QuadNumber(parse_rational(body));
  std::size_t split = std::string_view::npos;
  for (std::size_t i = root; i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  Rational a = 0;
  std::string_view irr = body;
  if (split != std::string_view::npos) {
    a = parse_rational(body.substr(0, split));
    irr = body.substr(split);
  }
  const Surd s = Surd::parse(irr[0] == '+' ? irr.substr(1) : irr);
  return QuadNumber(a, s.coefficient(), s.radicand().convert_to<std::uint64_t>());
}

QuadNumber quad_sqrt(std::uint64_t n) { return QuadNumber(0, 1, n); }

}  // namespace intangle
