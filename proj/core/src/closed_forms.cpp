#include "qp/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "qp/baseline.hpp"

namespace qp {
namespace {

void expect_equal(const PowerSeries& a, const PowerSeries& b, int order, const std::string& what) {
  if (a.order() < order || b.order() < order || !agree(a, b, order)) {
    throw IdentityError(what + ": routes disagree");
  }
}

PowerSeries xpow(int k, int order) { return PowerSeries::monomial(Var::x, k, Rational(1), order); }

// 1 - x^k
PowerSeries one_minus(int k, int order) { return Rational(1) - xpow(k, order); }

// (1 - x^a)(1 - x^b) / ((1 - x^c)(1 - x^d))
PowerSeries ratio(int a, int b, int c, int d, int order) {
  return (one_minus(a, order) * one_minus(b, order) / (one_minus(c, order) * one_minus(d, order))).truncated(order);
}

SeriesFamily make_family(std::string name, int max_index, int order) {
  SeriesFamily f;
  f.name = std::move(name);
  f.entries.assign(static_cast<std::size_t>(max_index) + 1, PowerSeries::zero(Var::x, order));
  return f;
}

SeriesFamily compose_family(const SeriesFamily& fam, const PowerSeries& inner, int order) {
  SeriesFamily out;
  out.name = fam.name;
  for (const auto& e : fam.entries) out.entries.push_back(compose(e, inner).truncated(order));
  if (fam.limit) out.limit = compose(*fam.limit, inner).truncated(order);
  return out;
}

}  // namespace

XParam closed_forms_x(int max_index, int order) {
  if (max_index < 2 || order < 1) throw SeriesError("closed_forms_x: need K >= 2 and N >= 1");
  const int n = order;
  const Rational one(1);
  const PowerSeries x = PowerSeries::identity(Var::x, n);
  const PowerSeries x2 = x * x;
  const PowerSeries q = one + x + x2;        // 1 + x + x^2
  const PowerSeries p = one + x2;            // 1 + x^2
  const PowerSeries C = (x / p).truncated(n);
  const PowerSeries opc = one + C;
  const PowerSeries r_inf = ((one + Rational(4) * x + x2) / q).truncated(n);

  XParam xp{
      revert((x * p * p / pow(q, 3)).truncated(n), Var::G),
      revert((x * q / pow(one + Rational(4) * x + x2, 2)).truncated(n), Var::g),
      (-(x2 * q) / (p * p)).truncated(n),
      (-q / (p * p)).truncated(n),
      make_family("W", max_index, n),
      make_family("Y", max_index, n),
      make_family("t", max_index, n),
      make_family("r", max_index, n),
      make_family("R", max_index, n),
      make_family("G", max_index, n),
  };
  const PowerSeries& alpha = xp.alpha;
  const PowerSeries& beta = xp.beta;

  for (int k = 0; k <= max_index; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const PowerSeries w = xpow(k + 2, n);
    xp.W.entries[i] = w;
    xp.Y.entries[i] = ((alpha - beta * w) / (one - w)).truncated(n);
    if (k >= 1) xp.closed_t.entries[i] = (C * ratio(k - 1, k + 4, k + 1, k + 2, n)).truncated(n);
    xp.closed_r.entries[i] = (q / p * ratio(k, k + 3, k + 1, k + 2, n)).truncated(n);
    xp.closed_R.entries[i] = (r_inf * ratio(k, k + 3, k + 1, k + 2, n)).truncated(n);
    if (k >= 1) {
      PowerSeries num = pow(one - x, 3) * pow(one + x, 2) * (one + Rational(4) * x + x2) * xpow(k - 1, n) *
                        one_minus(2 * k + 3, n);
      PowerSeries den = q * one_minus(k, n) * one_minus(k + 1, n) * one_minus(k + 2, n) * one_minus(k + 3, n);
      xp.closed_G.entries[i] = (num / den).truncated(n);
      if (k == 1) xp.closed_G.entries[i] -= PowerSeries::one(Var::x, n);
    }
  }
  xp.W.limit = PowerSeries::zero(Var::x, n);
  xp.Y.limit = alpha;
  xp.closed_t.limit = C;
  xp.closed_r.limit = opc;
  xp.closed_R.limit = r_inf;

  for (int k = 1; k <= max_index; ++k) {
    const std::string tag = " at k=" + std::to_string(k);
    const PowerSeries& Y = xp.Y[k];
    const PowerSeries& t = xp.closed_t[k];
    expect_equal((Y - alpha) / (Y - beta), xp.W[k], n, "fixed points" + tag);
    const PowerSeries kernel = Y * Y + (one + C * C - C * (t - one)) * Y + C * C * opc * (t + one);
    expect_equal(kernel, PowerSeries::zero(Var::x, n), n, "kernel relation" + tag);
    expect_equal(xp.closed_r[k], t + one, n, "r = 1 + t" + tag);
    if (k >= 2) {
      const PowerSeries& Yp = xp.Y[k - 1];
      expect_equal(Y * (Yp + opc * opc), C * opc * Yp - C * C * opc * opc, n, "Moebius step" + tag);
    }
  }
  return xp;
}

SeriesFamily in_G(const SeriesFamily& fam, const XParam& xp, int order) {
  return compose_family(fam, xp.x_of_G, order);
}

SeriesFamily in_g(const SeriesFamily& fam, const XParam& xp, int order) {
  return compose_family(fam, xp.x_of_g, order);
}

PowerSeries G_of_g(int order) {
  const PowerSeries r1 = compute_R1(order);
  return (r1 * r1).shifted_up(1).truncated(order);
}

BiSeries general_phi(int degree, int order) {
  const BiSeries simple = solve_phi(std::max(degree, order), order);
  const PowerSeries Gg = G_of_g(order);
  const PowerSeries inv_r1 = (PowerSeries::one(Var::g, order) / compute_R1(order)).truncated(order);
  std::vector<PowerSeries> c;
  c.reserve(static_cast<std::size_t>(degree) + 1);
  for (int j = 0; j <= degree; ++j) {
    c.push_back((pow(inv_r1, static_cast<unsigned>(j + 2)) * compose(simple[j], Gg)).truncated(order));
  }
  return BiSeries(std::move(c));
}

SeriesFamily bridge_to_general(int max_index, int order) {
  const int n = order;
  const Rational one(1);
  const SeriesFamily base = solve_R_family(max_index, n);
  const SeriesFamily T = T_family(base);
  const PowerSeries& r1 = base[1];
  const PowerSeries Gg = G_of_g(n);
  const BiSeries simple_phi = solve_phi(n, n);
  const SeriesFamily t = iterate_t(max_index, simple_phi);
  const BiSeries phi = general_phi(n, n);
  const PowerSeries inv_r1 = (PowerSeries::one(Var::g, n) / r1).truncated(n);

  SeriesFamily out;
  out.name = "R";
  out.entries.push_back(PowerSeries::zero(Var::g, n));
  for (int k = 1; k <= max_index; ++k) {
    const std::string tag = " at k=" + std::to_string(k);
    PowerSeries rk = (r1 * compose(t[k] + one, Gg)).truncated(n);
    expect_equal(rk, base[k], n, "R_k = R_1 r_k(G)" + tag);
    out.entries.push_back(std::move(rk));
    if (k >= 2) {
      const PowerSeries& prev = T[k - 1];
      const PowerSeries phi_at = eval_t(phi, prev);
      const PowerSeries rescaled = inv_r1 * inv_r1 * compose(eval_t(simple_phi, t[k - 1]), Gg);
      expect_equal(phi_at, rescaled, n, "Phi(T) = R_1^-2 Phi~(T/R_1)" + tag);
      const PowerSeries u = r1 * (prev + r1) * phi_at;
      expect_equal((r1 * u / (one - u)).truncated(n), T[k], n, "T recursion" + tag);
    }
  }
  if (max_index >= 2) {
    const PowerSeries h4 = phi[0];
    const PowerSeries r1sq = r1 * r1;
    expect_equal((r1sq * r1 * h4 / (one - r1sq * h4)).truncated(n), T[2], n, "T_2 from h4");
  }
  out.limit = (r1 * compose(*t.limit + one, Gg)).truncated(n);
  expect_equal(*out.limit, *base.limit, n, "R_infinity = R_1 (1 + C(G))");
  return out;
}

SeriesFamily closed_two_point(int max_index, int order) {
  const int n = order;
  const Rational one(1);
  const XParam xp = closed_forms_x(max_index, n);
  const SeriesFamily base = solve_R_family(max_index, n);
  const SeriesFamily G = assemble_G(base);
  const PowerSeries g = PowerSeries::identity(Var::g, n + 1);

  const PowerSeries catalan_form =
      ((one - sqrt_one(one - Rational(12) * g)).shifted_down(1) * Rational(1, 6)).truncated(n);
  const PowerSeries r_inf = compose(*xp.closed_R.limit, xp.x_of_g).truncated(n);
  expect_equal(r_inf, catalan_form, n, "R_infinity closed form");
  expect_equal(r_inf, *base.limit, n, "R_infinity against baseline");
  const PowerSeries x = PowerSeries::identity(Var::x, n);
  const PowerSeries q_in_g = compose(one + x + x * x, xp.x_of_g);
  expect_equal((r_inf * r_inf * q_in_g).shifted_up(1).truncated(n), xp.x_of_g, n, "g R^2 (1+x+x^2) = x");
  expect_equal(compose(xp.x_of_G, G_of_g(n)).truncated(n), xp.x_of_g, n, "x(G(g)) = x(g)");

  const SeriesFamily R = in_g(xp.closed_R, xp, n);
  for (int k = 1; k <= max_index; ++k) {
    expect_equal(R[k], base[k], n, "closed R_k at k=" + std::to_string(k));
  }
  SeriesFamily out = in_g(xp.closed_G, xp, n);
  out.name = "G";
  out.limit.reset();
  for (int k = 1; k <= G.max_index(); ++k) {
    expect_equal(out[k], G[k], n, "closed G_k at k=" + std::to_string(k));
  }
  return out;
}

}  // namespace qp
