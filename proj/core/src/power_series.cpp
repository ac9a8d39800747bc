#include "qp/power_series.hpp"

#include <algorithm>
#include <sstream>

namespace qp {

namespace {

void check_same_var(const PowerSeries& a, const PowerSeries& b, const char* op) {
  if (a.var() != b.var()) {
    throw SeriesError(std::string("variable mismatch in ") + op + ": " +
                      std::string(var_name(a.var())) + " vs " + std::string(var_name(b.var())));
  }
}

// Lowest index that may be nonzero; a series vanishing to its order gets
// order()+1 so that products keep the correct known order.
int effective_valuation(const PowerSeries& s) {
  auto v = s.valuation();
  return v ? *v : s.order() + 1;
}

}  // namespace

std::string_view var_name(Var v) {
  switch (v) {
    case Var::g: return "g";
    case Var::G: return "G";
    case Var::x: return "x";
    case Var::t: return "t";
    case Var::C: return "C";
  }
  return "?";
}

Var parse_var(std::string_view name) {
  for (Var v : {Var::g, Var::G, Var::x, Var::t, Var::C}) {
    if (var_name(v) == name) return v;
  }
  throw SeriesError("unknown variable tag '" + std::string(name) + "'");
}

PowerSeries::PowerSeries(Var var, int order) : var_(var) {
  if (order < 0) throw SeriesError("negative truncation order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(Var var, std::vector<Rational> coefficients)
    : var_(var), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw SeriesError("series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(Var var, const Rational& c, int order) {
  PowerSeries s(var, order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(Var var, int power, const Rational& c, int order) {
  PowerSeries s(var, order);
  if (power < 0) throw SeriesError("negative monomial power");
  if (power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
  return s;
}

const Rational& PowerSeries::operator[](int i) const {
  if (i < 0 || i > order()) {
    throw SeriesError("coefficient " + std::to_string(i) + " beyond known order " +
                      std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

std::optional<int> PowerSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool PowerSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q); });
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > this->order()) {
    throw SeriesError("cannot extend series from order " + std::to_string(this->order()) +
                      " to " + std::to_string(order));
  }
  return PowerSeries(var_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::shifted_up(int k) const {
  PowerSeries r(var_, order() + k);
  for (int i = 0; i <= order(); ++i) r.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
  return r;
}

PowerSeries PowerSeries::shifted_down(int k) const {
  if (k > order() + 1) throw SeriesError("shift exceeds known order");
  for (int i = 0; i < k; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] != 0) {
      throw SeriesError("inexact division by " + std::string(var_name(var_)) + "^" +
                        std::to_string(k) + ": coefficient " + std::to_string(i) + " is nonzero");
    }
  }
  if (k == order() + 1) {
    // Nothing known after the shift; callers never ask for this.
    throw SeriesError("shift leaves no known coefficients");
  }
  return PowerSeries(var_, std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

PowerSeries PowerSeries::retagged(Var var) const {
  PowerSeries r = *this;
  r.var_ = var;
  return r;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  check_same_var(*this, o, "add");
  if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  check_same_var(*this, o, "sub");
  if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& o) {
  *this = *this * o;
  return *this;
}

PowerSeries& PowerSeries::operator/=(const PowerSeries& o) {
  *this = *this / o;
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool PowerSeries::operator==(const PowerSeries& o) const {
  return var_ == o.var_ && coeffs_ == o.coeffs_;
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= order(); ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      os << var_name(var_);
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << " + O(" << var_name(var_) << "^" << order() + 1 << ")";
  return os.str();
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  check_same_var(a, b, "mul");
  const int va = effective_valuation(a);
  const int vb = effective_valuation(b);
  const int n = std::min(a.order() + vb, b.order() + va);
  PowerSeries r(a.var(), n);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  for (int i = va; i <= std::min(a.order(), n); ++i) {
    if (ca[i] == 0) continue;
    for (int j = vb; j <= std::min(b.order(), n - i); ++j) out[static_cast<std::size_t>(i + j)] += ca[i] * cb[j];
  }
  return PowerSeries(a.var(), std::move(out));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  check_same_var(a, b, "div");
  auto vb = b.valuation();
  if (!vb) throw SeriesError("division by a series that vanishes to its order");
  auto va = a.valuation();
  if (va && *va < *vb) {
    throw SeriesError("inexact division: divisor valuation " + std::to_string(*vb) +
                      " exceeds dividend valuation " + std::to_string(*va));
  }
  const int shift = *vb;
  const int n = std::min(a.order(), b.order()) - shift;
  if (n < 0) throw SeriesError("division leaves no known coefficients");
  PowerSeries num = a.truncated(n + shift).shifted_down(shift);
  PowerSeries den = b.truncated(n + shift).shifted_down(shift);
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  auto cn = num.coefficients();
  auto cd = den.coefficients();
  const Rational inv0 = 1 / cd[0];
  for (int k = 0; k <= n; ++k) {
    Rational acc = cn[k];
    for (int j = 1; j <= k; ++j) {
      if (cd[j] != 0) acc -= cd[j] * q[static_cast<std::size_t>(k - j)];
    }
    q[static_cast<std::size_t>(k)] = acc * inv0;
  }
  return PowerSeries(a.var(), std::move(q));
}

PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }

PowerSeries operator+(PowerSeries a, const Rational& c) {
  return a += PowerSeries::constant(a.var(), c, a.order());
}
PowerSeries operator-(PowerSeries a, const Rational& c) {
  return a -= PowerSeries::constant(a.var(), c, a.order());
}
PowerSeries operator+(const Rational& c, PowerSeries a) { return std::move(a) + c; }
PowerSeries operator-(const Rational& c, const PowerSeries& a) {
  return PowerSeries::constant(a.var(), c, a.order()) - a;
}

PowerSeries pow(const PowerSeries& s, unsigned k) {
  PowerSeries r = PowerSeries::one(s.var(), s.order());
  PowerSeries base = s;
  while (k) {
    if (k & 1U) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner[0] != 0) throw SeriesError("compose: inner series has nonzero constant term");
  const int v = effective_valuation(inner);
  // outer's unknown tail contributes at order >= v*(outer.order()+1).
  const long tail = static_cast<long>(v) * (outer.order() + 1) - 1;
  const int n = static_cast<int>(std::min<long>(inner.order(), tail));
  const PowerSeries in = inner.truncated(n);
  // Horner: outer_0 + in*(outer_1 + in*(...)).
  const int top = std::min(outer.order(), v > 0 ? n / v : 0);
  PowerSeries acc = PowerSeries::constant(in.var(), outer[top], n);
  for (int j = top - 1; j >= 0; --j) {
    acc = (acc * in).truncated(n);
    acc += PowerSeries::constant(in.var(), outer[j], n);
  }
  return acc.truncated(n);
}

PowerSeries revert(const PowerSeries& s, Var result_var) {
  const int n = s.order();
  if (n < 1) throw SeriesError("revert: need order >= 1");
  if (s[0] != 0) throw SeriesError("revert: nonzero constant term");
  if (s[1] == 0) throw SeriesError("revert: zero linear coefficient");
  // Lagrange inversion: [w^k] f = (1/k) [z^{k-1}] (z/s(z))^k.
  PowerSeries h = PowerSeries::one(s.var(), n - 1) / s.shifted_down(1);
  std::vector<Rational> f(static_cast<std::size_t>(n) + 1, Rational(0));
  PowerSeries hp = h;
  for (int k = 1; k <= n; ++k) {
    f[static_cast<std::size_t>(k)] = hp[k - 1] / k;
    if (k < n) hp = (hp * h).truncated(n - 1);
  }
  return PowerSeries(result_var, std::move(f));
}

PowerSeries sqrt_one(const PowerSeries& s) {
  if (s[0] != 1) throw SeriesError("sqrt_one: constant term is not 1");
  const int n = s.order();
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1, Rational(0));
  r[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = s[k];
    for (int i = 1; i < k; ++i) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
    r[static_cast<std::size_t>(k)] = acc / 2;
  }
  return PowerSeries(s.var(), std::move(r));
}

bool agree(const PowerSeries& a, const PowerSeries& b, int upto) {
  if (a.var() != b.var()) return false;
  const int n = std::min({a.order(), b.order(), upto});
  for (int i = 0; i <= n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace qp
