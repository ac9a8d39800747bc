#include "qp/bi_series.hpp"

#include <algorithm>

namespace qp {

namespace {

void check_compatible(const BiSeries& a, const BiSeries& b, const char* op) {
  if (a.inner_var() != b.inner_var()) {
    throw SeriesError(std::string("inner variable mismatch in bivariate ") + op);
  }
}

}  // namespace

BiSeries::BiSeries(int degree, Var inner, int order) {
  if (degree < 0) throw SeriesError("negative t-degree");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, PowerSeries::zero(inner, order));
}

BiSeries::BiSeries(std::vector<PowerSeries> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw SeriesError("bivariate series needs a t^0 coefficient");
  const int n = std::min_element(coeffs_.begin(), coeffs_.end(), [](const auto& a, const auto& b) {
                  return a.order() < b.order();
                })->order();
  for (auto& c : coeffs_) {
    if (c.var() != coeffs_.front().var()) throw SeriesError("mixed inner variables");
    c = c.truncated(n);
  }
}

BiSeries BiSeries::monomial(int power, const PowerSeries& c, int degree) {
  BiSeries r(degree, c.var(), c.order());
  if (power <= degree) r.coeffs_[static_cast<std::size_t>(power)] = c;
  return r;
}

BiSeries BiSeries::t(int degree, Var inner, int order) {
  return monomial(1, PowerSeries::one(inner, order), degree);
}

const PowerSeries& BiSeries::operator[](int j) const {
  if (j < 0 || j > degree()) {
    throw SeriesError("t-coefficient " + std::to_string(j) + " beyond degree " + std::to_string(degree()));
  }
  return coeffs_[static_cast<std::size_t>(j)];
}

BiSeries BiSeries::truncated(int degree, int order) const {
  if (degree > this->degree()) throw SeriesError("cannot extend t-degree");
  std::vector<PowerSeries> c;
  c.reserve(static_cast<std::size_t>(degree) + 1);
  for (int j = 0; j <= degree; ++j) c.push_back(coeffs_[static_cast<std::size_t>(j)].truncated(order));
  return BiSeries(std::move(c));
}

bool BiSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const PowerSeries& c) { return c.is_zero(); });
}

int BiSeries::inner_valuation() const {
  int v = order() + 1;
  for (const auto& c : coeffs_) {
    if (auto cv = c.valuation()) v = std::min(v, *cv);
  }
  return v;
}

BiSeries BiSeries::operator-() const {
  BiSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  check_compatible(*this, o, "add");
  const int d = std::min(degree(), o.degree());
  coeffs_.resize(static_cast<std::size_t>(d) + 1, coeffs_.front());
  for (int j = 0; j <= d; ++j) coeffs_[static_cast<std::size_t>(j)] += o.coeffs_[static_cast<std::size_t>(j)];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  check_compatible(*this, o, "sub");
  const int d = std::min(degree(), o.degree());
  coeffs_.resize(static_cast<std::size_t>(d) + 1, coeffs_.front());
  for (int j = 0; j <= d; ++j) coeffs_[static_cast<std::size_t>(j)] -= o.coeffs_[static_cast<std::size_t>(j)];
  return *this;
}

BiSeries& BiSeries::operator*=(const PowerSeries& c) {
  const int n = std::min(order(), c.order());
  for (auto& x : coeffs_) x = (x * c).truncated(n);
  return *this;
}

BiSeries& BiSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  check_compatible(a, b, "mul");
  const int d = std::min(a.degree(), b.degree());
  const int n = std::min(a.order(), b.order());
  std::vector<PowerSeries> out(static_cast<std::size_t>(d) + 1, PowerSeries::zero(a.inner_var(), n));
  for (int i = 0; i <= d; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= d; ++j) {
      if (b[j].is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += (a[i] * b[j]).truncated(n);
    }
  }
  return BiSeries(std::move(out));
}

BiSeries operator*(BiSeries a, const PowerSeries& c) { return a *= c; }
BiSeries operator*(const PowerSeries& c, BiSeries a) { return a *= c; }
BiSeries operator*(BiSeries a, const Rational& c) { return a *= c; }

BiSeries operator+(BiSeries a, const PowerSeries& c) {
  return a += BiSeries::constant(c, a.degree());
}
BiSeries operator-(BiSeries a, const PowerSeries& c) {
  return a -= BiSeries::constant(c, a.degree());
}

BiSeries operator/(const BiSeries& a, const BiSeries& b) {
  check_compatible(a, b, "div");
  const int v = b.inner_valuation();
  auto v0 = b[0].valuation();
  if (!v0 || *v0 != v) {
    throw SeriesError("bivariate division: divisor's (t^0, inner^" + std::to_string(v) +
                      ") coefficient vanishes");
  }
  if (a.inner_valuation() < v) {
    throw SeriesError("bivariate division: dividend valuation " + std::to_string(a.inner_valuation()) +
                      " below divisor valuation " + std::to_string(v));
  }
  const int n = std::min(a.order(), b.order()) - v;
  if (n < 0) throw SeriesError("bivariate division leaves no known coefficients");
  const int d = std::min(a.degree(), b.degree());
  auto shift = [&](const PowerSeries& s) { return s.truncated(n + v).shifted_down(v); };
  std::vector<PowerSeries> bs, q;
  for (int j = 0; j <= d; ++j) bs.push_back(shift(b[j]));
  const PowerSeries inv_b0 = PowerSeries::one(a.inner_var(), n) / bs[0];
  for (int j = 0; j <= d; ++j) {
    PowerSeries acc = shift(a[j]);
    for (int i = 1; i <= j; ++i) {
      if (!bs[static_cast<std::size_t>(i)].is_zero()) acc -= (bs[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j - i)]).truncated(n);
    }
    q.push_back((acc * inv_b0).truncated(n));
  }
  return BiSeries(std::move(q));
}

BiSeries div_by_t(const BiSeries& a) {
  if (!a[0].is_zero()) {
    throw SeriesError("div_by_t: t^0 coefficient does not vanish: " + a[0].to_string());
  }
  if (a.degree() == 0) throw SeriesError("div_by_t: nothing left after the shift");
  std::vector<PowerSeries> c(a.coefficients().begin() + 1, a.coefficients().end());
  return BiSeries(std::move(c));
}

PowerSeries eval_t(const BiSeries& a, const PowerSeries& s) {
  if (s.var() != a.inner_var()) throw SeriesError("eval_t: variable mismatch");
  if (s[0] != 0) throw SeriesError("eval_t: substituted series has nonzero constant term");
  auto vs = s.valuation();
  const int v = vs ? *vs : s.order() + 1;
  const long tail = static_cast<long>(v) * (a.degree() + 1) - 1;
  const int n = static_cast<int>(std::min<long>({a.order(), s.order(), tail}));
  const PowerSeries sn = s.truncated(n);
  PowerSeries acc = a[a.degree()].truncated(n);
  for (int j = a.degree() - 1; j >= 0; --j) {
    acc = (acc * sn).truncated(n);
    acc += a[j].truncated(n);
  }
  return acc;
}

BiSeries sqrt_one(const BiSeries& s) {
  if (s[0][0] != 1) throw SeriesError("sqrt_one: (t^0, inner^0) coefficient is not 1");
  const int n = s.order();
  std::vector<PowerSeries> r;
  r.push_back(sqrt_one(s[0]));
  const PowerSeries inv_2r0 = PowerSeries::one(s.inner_var(), n) / (r[0] * Rational(2));
  for (int j = 1; j <= s.degree(); ++j) {
    PowerSeries acc = s[j];
    for (int i = 1; i < j; ++i) acc -= (r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j - i)]).truncated(n);
    r.push_back((acc * inv_2r0).truncated(n));
  }
  return BiSeries(std::move(r));
}

BiSeries compose_inner(const BiSeries& a, const PowerSeries& inner) {
  std::vector<PowerSeries> c;
  c.reserve(a.coefficients().size());
  for (const auto& x : a.coefficients()) c.push_back(compose(x, inner));
  return BiSeries(std::move(c));
}

}  // namespace qp
