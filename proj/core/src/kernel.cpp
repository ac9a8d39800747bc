#include "qp/kernel.hpp"

#include <algorithm>
#include <string>

namespace qp {
namespace {

using Poly = std::vector<Rational>;

void add_product(Poly& out, const Poly& a, const Poly& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
}

BiSeries lift(const PowerSeries& c, int degree) { return BiSeries::constant(c, degree); }

}  // namespace

BiSeries solve_phi(int degree, int order) {
  if (degree < 0 || order < 1) throw SeriesError("solve_phi: need degree >= 0 and order >= 1");
  // [G^m] Phi is a polynomial in t of degree m-1, so working to t-degree
  // `order` loses nothing.
  const int top = std::max(degree, order);
  const std::size_t width = static_cast<std::size_t>(top) + 1;
  const std::size_t len = static_cast<std::size_t>(order) + 1;
  std::vector<Poly> phi(len, Poly(width)), u(len, Poly(width)), q(len, Poly(width));
  std::vector<Rational> h4(len), g4(len);

  for (int n = 1; n <= order; ++n) {
    const int m = n - 1;
    if (m >= 1) {
      // U_m = (t+1) Phi_m, Q_m = U_m + sum U_a Q_{m-a}, g4_m likewise.
      for (std::size_t j = 0; j < width; ++j) {
        u[m][j] = phi[m][j] + (j > 0 ? phi[m][j - 1] : Rational(0));
      }
      q[m] = u[m];
      h4[m] = phi[m][0];
      g4[m] = h4[m];
      for (int a = 1; a < m; ++a) {
        add_product(q[m], u[a], q[m - a]);
        g4[m] += h4[a] * g4[m - a];
      }
    }
    if (q[m][0] != g4[m]) {
      throw IdentityError("solve_phi: bracket does not vanish at t=0 at order " + std::to_string(n));
    }
    Poly& p = phi[n];
    for (std::size_t j = 0; j + 1 < width; ++j) p[j] = q[m][j + 1];
    if (n == 1) p[0] += 1;
  }

  std::vector<PowerSeries> out;
  out.reserve(static_cast<std::size_t>(degree) + 1);
  for (int j = 0; j <= degree; ++j) {
    std::vector<Rational> c(len);
    for (std::size_t n = 0; n < len; ++n) c[n] = phi[n][static_cast<std::size_t>(j)];
    out.emplace_back(Var::G, std::move(c));
  }
  return BiSeries(std::move(out));
}

ParametricH4 parametric_h4(int order) {
  const PowerSeries c = PowerSeries::identity(Var::C, order);
  const PowerSeries one = PowerSeries::one(Var::C, order);
  const PowerSeries s = c / pow(one + c, 3);
  PowerSeries C = revert(s, Var::G);
  const PowerSeries f = c * (one - c) / (one + c - c * c);
  PowerSeries h4 = compose(f, C).truncated(order);
  return {C.truncated(order), h4};
}

Rational lagrange_h4(int p) {
  if (p < 1) throw SeriesError("lagrange_h4: p >= 1");
  // Lagrange inversion of G = C/(1+C)^3 applied to C(1-C)/(1+C-C^2).
  const QuadSurd w = QuadSurd::golden_ratio();
  Rational total(0);
  for (int n = 0; n < p; ++n) {
    QuadSurd term = w.pow(n + 2) * Rational(n % 2 == 0 ? 1 : -1) - w.pow(-n - 2);
    const Rational cn = term.div_sqrt5().rational_part();
    total += cn * Rational(n + 1) * Rational(binomial(3 * p, p - 1 - n));
  }
  total /= p;
  if (!is_integer(total) || total < 0) {
    throw IdentityError("lagrange_h4: non-integral coefficient at p=" + std::to_string(p));
  }
  return total;
}

namespace {

// 1 + C^2 - C(t-1), the linear coefficient of the kernel quadratic.
BiSeries linear_coefficient(const PowerSeries& C, int degree) {
  const Rational one(1);
  return lift(one + C + C * C, degree) - BiSeries::t(degree, Var::G, C.order()) * C;
}

BiSeries t_plus_one(int degree, int order) {
  return BiSeries::t(degree, Var::G, order) + PowerSeries::one(Var::G, order);
}

}  // namespace

BiSeries kernel_Y(int degree, int order) {
  const PowerSeries C = parametric_h4(order).C;
  const BiSeries A = linear_coefficient(C, degree);
  const Rational four(4);
  const BiSeries delta = A * A - t_plus_one(degree, order) * (four * C * C * (Rational(1) + C));
  BiSeries Y = (sqrt_one(delta) - A) * Rational(1, 2);
  return Y.truncated(degree, order);
}

BiSeries phi_from_kernel(int degree, int order) {
  // Dividing by Y costs two orders in G.
  const BiSeries Y = kernel_Y(degree, order + 2);
  const PowerSeries C = parametric_h4(order + 2).C;
  const BiSeries C2 = lift(C * C, degree);
  const BiSeries first = C2 / (Y * (Y + (Rational(1) + C)));
  const BiSeries second = lift(PowerSeries::one(Var::G, order + 2), degree) / t_plus_one(degree, order + 2);
  return (first + second).truncated(degree, order);
}

BiSeries phi_from_kernel_factored(int degree, int order) {
  const BiSeries Y = kernel_Y(degree, order);
  const PowerSeries C = parametric_h4(order).C;
  const Rational one(1);
  const PowerSeries opc = one + C;
  const BiSeries num = (Y + (opc - C * C)) * C;
  const BiSeries den = (Y + opc) * (Y + opc * opc);
  return (num / den).truncated(degree, order);
}

BiSeries kernel_residual(const BiSeries& Y, const PowerSeries& C) {
  const int d = Y.degree();
  return Y * Y + linear_coefficient(C, d) * Y +
         t_plus_one(d, C.order()) * (C * C * (Rational(1) + C));
}

BiSeries t_from_Y(const BiSeries& Y, const PowerSeries& C) {
  const Rational one(1);
  const BiSeries num = (Y + (one + C)) * (Y + C * C);
  const BiSeries den = (Y - (C + C * C)) * C;
  return num / den;
}

BiSeries other_determination(const BiSeries& Y, const PowerSeries& C) {
  return -linear_coefficient(C, Y.degree()) - Y;
}

BiSeries involution(const BiSeries& Y_from, const PowerSeries& C) {
  const PowerSeries opc = Rational(1) + C;
  const BiSeries num = (Y_from + opc * opc) * (C * opc);
  return num / (Y_from - C * opc);
}

BiSeries phi_quadratic_residual(const BiSeries& phi, const PowerSeries& C) {
  const int d = phi.degree();
  const int n = C.order();
  const Rational one(1);
  const BiSeries t = BiSeries::t(d, Var::G, n);
  const PowerSeries C2 = C * C;
  const PowerSeries C3 = C2 * C;
  const BiSeries quad = t * t_plus_one(d, n) * pow(one + C, 3);
  const BiSeries lin = lift(C * (one + C - C2), d) - t * (one + Rational(3) * C + Rational(2) * C2 + Rational(2) * C3) -
                       t * t * C;
  const BiSeries cst = (t + (C2 - C)) * C;
  return quad * phi * phi + lin * phi + cst;
}

SeriesFamily iterate_t(int max_index, const BiSeries& phi) {
  const int n = phi.order();
  if (phi.degree() < n) throw SeriesError("iterate_t: Phi needs t-degree >= order");
  if (max_index < 1) throw SeriesError("iterate_t: max_index >= 1");
  SeriesFamily fam;
  fam.name = "t";
  fam.entries.assign(2, PowerSeries::zero(Var::G, n));
  for (int k = 2; k <= max_index; ++k) {
    const PowerSeries& prev = fam.entries.back();
    const PowerSeries u = (prev + Rational(1)) * eval_t(phi, prev);
    fam.entries.push_back((u / (Rational(1) - u)).truncated(n));
  }
  fam.entries.resize(static_cast<std::size_t>(max_index) + 1, PowerSeries::zero(Var::G, n));
  fam.limit = parametric_h4(n).C;
  return fam;
}

SeriesFamily iterate_t(int max_index, int order) { return iterate_t(max_index, solve_phi(order, order)); }

KernelBundle build_kernel_bundle(int degree, int order) {
  BiSeries phi = solve_phi(degree, order);
  std::vector<PowerSeries> h(phi.coefficients().begin(), phi.coefficients().end());
  const PowerSeries& h4 = h.front();
  PowerSeries g4 = (h4 / (Rational(1) - h4)).truncated(order);
  return {parametric_h4(order).C, std::move(h), std::move(phi), kernel_Y(degree, order), std::move(g4)};
}

}  // namespace qp
