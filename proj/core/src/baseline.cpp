#include "qp/baseline.hpp"

namespace qp {

SeriesFamily solve_R_family(int max_index, int order) {
  if (max_index < 1) throw SeriesError("solve_R_family: need K >= 1");
  if (order < 0) throw SeriesError("solve_R_family: need N >= 0");
  // [g^n] R_k needs R_{k+1} at order n-1, so errors from the artificial top
  // boundary move down one index per order. Extending to K+N+1 keeps them
  // above K.
  const int top = max_index + order + 1;
  using Row = std::vector<Rational>;
  std::vector<Row> r(static_cast<std::size_t>(top) + 2, Row(static_cast<std::size_t>(order) + 1, Rational(0)));
  for (int k = 1; k <= top + 1; ++k) r[static_cast<std::size_t>(k)][0] = 1;
  for (int n = 1; n <= order; ++n) {
    for (int k = 1; k <= top; ++k) {
      const Row& lo = r[static_cast<std::size_t>(k - 1)];
      const Row& mid = r[static_cast<std::size_t>(k)];
      const Row& hi = r[static_cast<std::size_t>(k + 1)];
      Rational acc = 0;
      for (int a = 0; a <= n - 1; ++a) {
        const int b = n - 1 - a;
        acc += mid[static_cast<std::size_t>(a)] *
               (lo[static_cast<std::size_t>(b)] + mid[static_cast<std::size_t>(b)] + hi[static_cast<std::size_t>(b)]);
      }
      r[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] = acc;
    }
    // Boundary closure: copy from below; only pollutes indices > K.
    r[static_cast<std::size_t>(top + 1)][static_cast<std::size_t>(n)] = r[static_cast<std::size_t>(top)][static_cast<std::size_t>(n)];
  }
  SeriesFamily f;
  f.name = "R";
  for (int k = 0; k <= max_index; ++k) f.entries.emplace_back(Var::g, r[static_cast<std::size_t>(k)]);
  f.limit = solve_R_infinity(order);
  return f;
}

PowerSeries solve_R_infinity(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  c[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int a = 0; a <= n - 1; ++a) acc += c[static_cast<std::size_t>(a)] * c[static_cast<std::size_t>(n - 1 - a)];
    c[static_cast<std::size_t>(n)] = 3 * acc;
  }
  return PowerSeries(Var::g, std::move(c));
}

PowerSeries compute_R1(int order) {
  const PowerSeries rinf = solve_R_infinity(order);
  const PowerSeries cube = rinf * rinf * rinf;
  return (rinf - cube.shifted_up(1)).truncated(order);
}

SeriesFamily assemble_G(const SeriesFamily& R) {
  const int K = R.max_index();
  if (K < 2) throw SeriesError("assemble_G: need an R-family with K >= 2");
  SeriesFamily g;
  g.name = "G";
  g.entries.push_back(PowerSeries::zero(Var::g, R.order()));
  for (int k = 1; k <= K - 1; ++k) {
    PowerSeries gk = R[k + 1] - R[k - 1];
    if (k == 1) gk = gk - Rational(1);
    g.entries.push_back(std::move(gk));
  }
  return g;
}

SeriesFamily T_family(const SeriesFamily& R) {
  SeriesFamily t;
  t.name = "T";
  t.entries.push_back(PowerSeries::zero(Var::g, R.order()));
  for (int k = 1; k <= R.max_index(); ++k) t.entries.push_back(R[k] - R[1]);
  if (R.limit) t.limit = *R.limit - R[1];
  return t;
}

}  // namespace qp
