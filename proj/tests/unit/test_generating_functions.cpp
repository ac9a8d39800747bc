#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qp/baseline.hpp"
#include "qp/closed_forms.hpp"
#include "qp/kernel.hpp"

using namespace qp;

namespace {

PowerSeries from(const oracle::Poly& p, Var v) { return PowerSeries(v, std::vector<Rational>(p.begin(), p.end())); }

// h4(G) = c(1-c)/(1+c-c^2) at c = C(G), with C from its binomial coefficients.
oracle::Poly h4_oracle(int n) {
  const oracle::Poly num = {0, 1, -1};
  const oracle::Poly in_c = oracle::mul(num, oracle::inverse({1, 1, -1}, n), n);
  return oracle::substitute(in_c, oracle::c_of_G(n), n);
}

}  // namespace

TEST(Baseline, RInfinity) {
  const PowerSeries r = solve_R_infinity(4);
  EXPECT_EQ(r, from(oracle::r_infinity(4), Var::g));
  const long expect[] = {1, 3, 18, 135, 1134};
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(r[n], expect[n]);
}

TEST(Baseline, FamilyMatchesIteration) {
  const SeriesFamily R = solve_R_family(8, 9);
  const auto ref = oracle::r_family(8, 9);
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(R[k], from(ref[static_cast<std::size_t>(k)], Var::g)) << "k=" << k;
  EXPECT_EQ(R[1][1], 2);
  EXPECT_EQ(R[2][1], 3);
  EXPECT_EQ(R[3][1], 3);
  EXPECT_TRUE(R.is_counting());
}

TEST(Baseline, OrderZeroIsAllOnes) {
  const SeriesFamily R = solve_R_family(4, 0);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(R[k][0], 1);
}

TEST(Baseline, StabilizesToRInfinity) {
  const SeriesFamily R = solve_R_family(14, 12);
  const auto rinf = oracle::r_infinity(12);
  for (int k = 1; k <= 14; ++k)
    for (int n = 0; n < k && n <= 12; ++n) EXPECT_EQ(R[k][n], rinf[static_cast<std::size_t>(n)]);
}

TEST(Baseline, FirstDistanceClass) {
  const PowerSeries r1 = compute_R1(1);
  EXPECT_EQ(r1[0], 1);
  EXPECT_EQ(r1[1], 2);
  const PowerSeries deep = compute_R1(10);
  EXPECT_EQ(deep, solve_R_family(3, 10)[1]);
}

TEST(Baseline, TwoPointFunctionOneFace) {
  const SeriesFamily G = assemble_G(solve_R_family(4, 1));
  EXPECT_EQ(G[1][1], 3);
  EXPECT_EQ(G[2][1], 1);
  EXPECT_EQ(G[3][1], 0);
  EXPECT_THROW(assemble_G(solve_R_family(1, 3)), SeriesError);
}

TEST(Baseline, TFamily) {
  const SeriesFamily T = T_family(solve_R_family(5, 6));
  EXPECT_TRUE(T[1].is_zero());
  EXPECT_EQ(T[2][1], 1);  // R_2 - R_1 = g + ...
}

TEST(Kernel, SolverFirstTerms) {
  const BiSeries phi = solve_phi(6, 8);
  const PowerSeries h4 = phi[0];
  const long expect[] = {0, 1, 1, 3, 11, 46, 209};
  for (int p = 0; p <= 6; ++p) EXPECT_EQ(h4[p], expect[p]);
  EXPECT_EQ(h4, from(h4_oracle(8), Var::G));
  // h_{2i} needs at least i-1 faces.
  for (int j = 1; j <= 6; ++j) {
    const auto v = phi[j].valuation();
    ASSERT_TRUE(v.has_value());
    EXPECT_GE(*v, j + 1);
  }
}

TEST(Kernel, ThreeRoutesForH4) {
  const PowerSeries solver = solve_phi(0, 12)[0];
  const PowerSeries param = parametric_h4(12).h4;
  const auto ref = h4_oracle(12);
  for (int p = 1; p <= 12; ++p) {
    EXPECT_EQ(solver[p], ref[static_cast<std::size_t>(p)]);
    EXPECT_EQ(param[p], ref[static_cast<std::size_t>(p)]);
    EXPECT_EQ(lagrange_h4(p), ref[static_cast<std::size_t>(p)]);
  }
}

TEST(Kernel, ParametrizationOfC) {
  EXPECT_EQ(parametric_h4(8).C, from(oracle::c_of_G(8), Var::G));
}

TEST(Kernel, RootAtZero) {
  const BiSeries Y = kernel_Y(4, 8);
  const auto c = oracle::c_of_G(8);
  EXPECT_EQ(Y[0], -from(oracle::mul(c, c, 8), Var::G));
  EXPECT_EQ(Y[0][2], -1);
  EXPECT_EQ(Y[0][3], -6);
}

TEST(Kernel, PhiVanishesAtZeroFaces) {
  const BiSeries phi = phi_from_kernel(4, 6);
  for (int j = 0; j <= 4; ++j) EXPECT_EQ(phi[j][0], 0);
  EXPECT_EQ(phi[0][1], 1);
}

TEST(Kernel, IterationStartsFromZero) {
  const SeriesFamily t = iterate_t(4, 6);
  EXPECT_TRUE(t[1].is_zero());
  // t_2 = h4/(1-h4); [G^3] is 6.
  const oracle::Poly h = h4_oracle(6);
  oracle::Poly one_minus = oracle::scale(h, -1);
  one_minus[0] += 1;
  EXPECT_EQ(t[2], from(oracle::mul(h, oracle::inverse(one_minus, 6), 6), Var::G));
  EXPECT_EQ(t[2][3], 6);
  ASSERT_TRUE(t.limit.has_value());
}

TEST(ClosedForms, ChangeOfVariable) {
  const int N = 8;
  const XParam xp = closed_forms_x(3, N);
  EXPECT_EQ(xp.x_of_g[1], 1);
  EXPECT_EQ(xp.x_of_g[2], 7);
  EXPECT_EQ(xp.x_of_g[3], 59);
  // g(x) = x(1+x+x^2)/(1+4x+x^2)^2 composed with x(g) gives g back.
  const oracle::Poly den = oracle::mul({1, 4, 1}, {1, 4, 1}, N);
  const oracle::Poly gx = oracle::mul({0, 1, 1, 1}, oracle::inverse(den, N), N);
  const oracle::Poly xg(xp.x_of_g.coefficients().begin(), xp.x_of_g.coefficients().end());
  const oracle::Poly back = oracle::substitute(gx, xg, N);
  for (int i = 0; i <= N; ++i) EXPECT_EQ(back[static_cast<std::size_t>(i)], i == 1 ? 1 : 0);
}

TEST(ClosedForms, GOfG) {
  const PowerSeries G = G_of_g(3);
  EXPECT_EQ(G[1], 1);
  EXPECT_EQ(G[2], 4);
  EXPECT_EQ(G[3], 22);
}

TEST(ClosedForms, FinalFormulaMatchesBaseline) {
  const SeriesFamily G = closed_two_point(6, 10);
  const SeriesFamily base = assemble_G(solve_R_family(7, 10));
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(G[k], base[k]);
  EXPECT_NO_THROW(bridge_to_general(6, 10));
}

TEST(ClosedForms, GeneralBlocksRescale) {
  // h_4(g) = R_1^-2 h4(G(g)); one face gives h_4 = g.
  const BiSeries phi = general_phi(2, 4);
  EXPECT_EQ(phi[0][1], 1);
}
