#include "qp/rational.hpp"

namespace qp {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw SeriesError("malformed fraction: '" + s + "'");
  }
  if (q.get_den() == 0) throw SeriesError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer catalan(unsigned long n) { return binomial(2 * n, n) / (n + 1); }

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
  a += o.a;
  b += o.b;
  return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
  Rational na = a * o.a + 5 * b * o.b;
  Rational nb = a * o.b + b * o.a;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

QuadSurd QuadSurd::inverse() const {
  // 1/(a + b√5) = (a − b√5)/(a² − 5b²); the norm is nonzero for nonzero input
  // because √5 is irrational.
  Rational norm = a * a - 5 * b * b;
  if (norm == 0) throw SeriesError("QuadSurd: inverse of zero");
  return {a / norm, -b / norm};
}

QuadSurd QuadSurd::pow(long e) const {
  QuadSurd base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  QuadSurd result{Rational(1), Rational(0)};
  while (n) {
    if (n & 1UL) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

QuadSurd QuadSurd::div_sqrt5() const { return {b, a / 5}; }

const Rational& QuadSurd::rational_part() const {
  if (b != 0) throw SeriesError("QuadSurd: nonzero sqrt(5) component " + to_fraction_string(b));
  return a;
}

}  // namespace qp
