#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qp/rational.hpp"

namespace qp {

/// Formal variable a series is written in. Binary operations refuse to mix
/// tags; composition is the only operation that changes the tag.
enum class Var { g, G, x, t, C };

std::string_view var_name(Var v);
Var parse_var(std::string_view name);

/// Truncated univariate power series with exact rational coefficients.
///
/// coefficient i is the coefficient of var^i for 0 <= i <= order(). Nothing
/// is known beyond order(); every operation reports the order up to which its
/// result is exact, taking valuations of the operands into account.
class PowerSeries {
 public:
  PowerSeries(Var var, int order);
  PowerSeries(Var var, std::vector<Rational> coefficients);

  static PowerSeries zero(Var var, int order) { return PowerSeries(var, order); }
  static PowerSeries constant(Var var, const Rational& c, int order);
  static PowerSeries one(Var var, int order) { return constant(var, Rational(1), order); }
  /// c * var^power, known to `order`.
  static PowerSeries monomial(Var var, int power, const Rational& c, int order);
  /// The identity series var itself.
  static PowerSeries identity(Var var, int order) { return monomial(var, 1, Rational(1), order); }

  Var var() const { return var_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& operator[](int i) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or nullopt if the series
  /// vanishes to its order.
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }
  bool is_integral() const;

  /// Drops coefficients above `order`; `order` may not exceed order().
  PowerSeries truncated(int order) const;
  /// Multiplies by var^k; the known order grows by k.
  PowerSeries shifted_up(int k) const;
  /// Divides by var^k; the k lowest coefficients must vanish.
  PowerSeries shifted_down(int k) const;
  PowerSeries retagged(Var var) const;

  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const PowerSeries& o);
  PowerSeries& operator/=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);

  /// Same tag, same order, same coefficients.
  bool operator==(const PowerSeries& o) const;

  std::string to_string() const;

 private:
  Var var_;
  std::vector<Rational> coeffs_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator-(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(PowerSeries a, const Rational& c);
PowerSeries operator*(const Rational& c, PowerSeries a);
PowerSeries operator+(PowerSeries a, const Rational& c);
PowerSeries operator-(PowerSeries a, const Rational& c);
PowerSeries operator+(const Rational& c, PowerSeries a);
PowerSeries operator-(const Rational& c, const PowerSeries& a);

PowerSeries pow(const PowerSeries& s, unsigned k);

/// outer(inner(z)); inner must have zero constant term. The result carries
/// inner's variable.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// Compositional inverse f of s, so that s(f(w)) = w. Requires s(0) = 0 and
/// a nonzero linear coefficient. The result is written in `result_var`.
PowerSeries revert(const PowerSeries& s, Var result_var);

/// Square root on the +1 branch; requires s(0) = 1.
PowerSeries sqrt_one(const PowerSeries& s);

/// True when a and b share their variable and agree on every coefficient up
/// to min(a.order(), b.order(), upto).
bool agree(const PowerSeries& a, const PowerSeries& b, int upto);

}  // namespace qp
