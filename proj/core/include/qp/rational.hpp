#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qp {

/// Exact rational number. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised on any violated precondition of the exact-arithmetic layer.
class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "num/den" with the denominator always spelled out.
std::string to_fraction_string(const Rational& q);

/// Accepts "num/den" or a bare integer.
Rational parse_fraction(std::string_view text);

bool is_integer(const Rational& q);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer catalan(unsigned long n);

/// a + b*sqrt(5) with rational a, b.
struct QuadSurd {
  Rational a;
  Rational b;

  QuadSurd() = default;
  QuadSurd(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

  static QuadSurd golden_ratio() { return {Rational(1, 2), Rational(1, 2)}; }

  QuadSurd& operator+=(const QuadSurd& o);
  QuadSurd& operator-=(const QuadSurd& o);
  QuadSurd& operator*=(const QuadSurd& o);

  /// Multiplicative inverse; throws on zero.
  QuadSurd inverse() const;
  QuadSurd pow(long e) const;

  /// Division by sqrt(5): (a + b*sqrt5)/sqrt5 = b + (a/5)*sqrt5.
  QuadSurd div_sqrt5() const;

  /// Only legal when the surd component vanishes.
  const Rational& rational_part() const;

  bool operator==(const QuadSurd& o) const { return a == o.a && b == o.b; }
};

inline QuadSurd operator+(QuadSurd x, const QuadSurd& y) { return x += y; }
inline QuadSurd operator-(QuadSurd x, const QuadSurd& y) { return x -= y; }
inline QuadSurd operator*(QuadSurd x, const QuadSurd& y) { return x *= y; }
inline QuadSurd operator*(QuadSurd x, const Rational& r) {
  x.a *= r;
  x.b *= r;
  return x;
}

}  // namespace qp
