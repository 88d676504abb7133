#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace intangle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a", "-a" or "a/b". Whitespace around the tokens is ignored.
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise, always in lowest terms.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

BigInt isqrt(const BigInt& n);

/// n = outer^2 * radicand with radicand squarefree.
struct SquareSplit {
  BigInt outer;
  BigInt radicand;
};
SquareSplit split_square(const BigInt& n);

/// Smallest integer c >= 0 with c >= base^exponent, for base >= 1 and a
/// nonnegative rational exponent p/q (i.e. the least c with c^q >= base^p).
BigInt ceil_pow(const BigInt& base, const Rational& exponent);

/// coefficient * sqrt(radicand), radicand squarefree; zero is stored as 0*sqrt(1)
/// so that structural equality is value equality.
class Surd {
 public:
  Surd() = default;
  explicit Surd(Rational coefficient) : coefficient_(std::move(coefficient)) {}

  static Surd make(Rational coefficient, const BigInt& radicand);

  /// Square root of a nonnegative rational, normalized.
  static Surd sqrt(const Rational& value);

  /// Accepts "a/b", "a/b√n", "√n" and "-a/b√n" (also "sqrt(n)" for √).
  static Surd parse(std::string_view text);

  const Rational& coefficient() const noexcept { return coefficient_; }
  const BigInt& radicand() const noexcept { return radicand_; }

  bool is_zero() const { return coefficient_ == 0; }
  bool is_rational() const { return radicand_ == 1; }
  int sign() const;

  /// Signed square: sign(x) * x^2.
  Rational signed_square() const;

  double to_double() const;
  std::string to_string() const;

  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a);

  friend bool operator==(const Surd& a, const Surd& b) = default;
  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);

 private:
  Rational coefficient_{0};
  BigInt radicand_{1};
};

/// Decimal rendering with `significant` significant digits, round-half-even on
/// the exact value (not on a binary approximation). Fixed notation, trailing
/// zeros trimmed.
std::string to_decimal(const Surd& value, int significant = 12);

/// Presentation of a double with 12 significant digits ("%.12g").
std::string format_float(double value);

/// An element a + b*sqrt(d) of Q(sqrt d), d squarefree. Rational values have
/// b == 0 and d == 1; operations between two irrational values require the
/// same d.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit by design of the field
  QuadNumber(Rational a, Rational b, std::uint64_t radicand);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& irrational_part() const noexcept { return b_; }
  std::uint64_t radicand() const noexcept { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;
  double to_double() const;

  /// "a/b", or "a/b+c/d√n" when irrational.
  std::string to_string() const;
  static QuadNumber parse(std::string_view text);

  QuadNumber& operator+=(const QuadNumber& o);
  QuadNumber& operator-=(const QuadNumber& o);
  QuadNumber& operator*=(const QuadNumber& o);

  friend QuadNumber operator+(QuadNumber a, const QuadNumber& b) { return a += b; }
  friend QuadNumber operator-(QuadNumber a, const QuadNumber& b) { return a -= b; }
  friend QuadNumber operator*(QuadNumber a, const QuadNumber& b) { return a *= b; }
  friend QuadNumber operator/(const QuadNumber& a, const QuadNumber& b);
  friend QuadNumber operator-(const QuadNumber& a);

  friend bool operator==(const QuadNumber& a, const QuadNumber& b) = default;
  friend bool operator<(const QuadNumber& a, const QuadNumber& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const QuadNumber& a, const QuadNumber& b) { return (a - b).sign() <= 0; }

 private:
  void normalize();
  std::uint64_t common_radicand(const QuadNumber& o) const;

  Rational a_{0};
  Rational b_{0};
  std::uint64_t d_{1};
};

/// sqrt(n) as an element of Q(sqrt n').
QuadNumber quad_sqrt(std::uint64_t n);

}  // namespace intangle
