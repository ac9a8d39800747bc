#pragma once

#include <vector>

#include "qp/power_series.hpp"

namespace qp {

/// Truncated bivariate series sum_{j<=D} c_j(inner) t^j, each c_j a
/// PowerSeries in the inner variable known to a common order N.
class BiSeries {
 public:
  BiSeries(int degree, Var inner, int order);
  explicit BiSeries(std::vector<PowerSeries> coefficients);

  /// c(inner) * t^power, truncated at t^degree.
  static BiSeries monomial(int power, const PowerSeries& c, int degree);
  static BiSeries constant(const PowerSeries& c, int degree) { return monomial(0, c, degree); }
  /// The series t itself with unit coefficient in the inner variable.
  static BiSeries t(int degree, Var inner, int order);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int order() const { return coeffs_.front().order(); }
  Var inner_var() const { return coeffs_.front().var(); }

  /// Coefficient of t^j; j beyond degree() is an error.
  const PowerSeries& operator[](int j) const;
  const std::vector<PowerSeries>& coefficients() const { return coeffs_; }

  BiSeries truncated(int degree, int order) const;
  bool is_zero() const;
  /// Smallest inner-variable valuation over all t-coefficients, or order()+1
  /// when the series vanishes.
  int inner_valuation() const;

  BiSeries operator-() const;
  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries& operator*=(const PowerSeries& c);
  BiSeries& operator*=(const Rational& c);

  bool operator==(const BiSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<PowerSeries> coeffs_;
};

BiSeries operator+(BiSeries a, const BiSeries& b);
BiSeries operator-(BiSeries a, const BiSeries& b);
BiSeries operator*(const BiSeries& a, const BiSeries& b);
BiSeries operator*(BiSeries a, const PowerSeries& c);
BiSeries operator*(const PowerSeries& c, BiSeries a);
BiSeries operator*(BiSeries a, const Rational& c);
BiSeries operator+(BiSeries a, const PowerSeries& c);
BiSeries operator-(BiSeries a, const PowerSeries& c);

/// Exact quotient a/b. The inner-variable valuation v of b is divided out of
/// both operands first: b's (t^0, inner^v) coefficient must be nonzero and
/// every coefficient of a must have valuation >= v. The result is known to
/// inner order min(a.order(), b.order()) - v.
BiSeries operator/(const BiSeries& a, const BiSeries& b);

/// Division by t. The t^0 coefficient must vanish identically; a nonzero one
/// means an identity the caller relies on is broken.
BiSeries div_by_t(const BiSeries& a);

/// a(t -> s) as a PowerSeries in the inner variable. s must have zero
/// constant term; the result order accounts for the t-truncation of a.
PowerSeries eval_t(const BiSeries& a, const PowerSeries& s);

/// Square root on the +1 branch; the (t^0, inner^0) coefficient must be 1.
BiSeries sqrt_one(const BiSeries& s);

/// Applies compose(c_j, inner) to every t-coefficient.
BiSeries compose_inner(const BiSeries& a, const PowerSeries& inner);

}  // namespace qp
