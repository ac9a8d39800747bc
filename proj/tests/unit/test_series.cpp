#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qp/bi_series.hpp"
#include "qp/power_series.hpp"
#include "qp/series_json.hpp"

using namespace qp;

namespace {

PowerSeries from(const oracle::Poly& p, Var v = Var::g) { return PowerSeries(v, std::vector<Rational>(p.begin(), p.end())); }

Rational q(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

PowerSeries poly(std::initializer_list<long> c, Var v = Var::g) {
  std::vector<Rational> r;
  for (long x : c) r.emplace_back(x);
  return PowerSeries(v, std::move(r));
}

}  // namespace

TEST(Rational, FractionStrings) {
  EXPECT_EQ(to_fraction_string(q(6, 4)), "3/2");
  EXPECT_EQ(to_fraction_string(Rational(-5)), "-5/1");
  EXPECT_EQ(parse_fraction("-7/21"), Rational(-1, 3));
  EXPECT_EQ(parse_fraction("12"), Rational(12));
  EXPECT_THROW(parse_fraction("1/0"), SeriesError);
  EXPECT_THROW(parse_fraction("0.5"), SeriesError);
}

TEST(Rational, CombinatorialNumbers) {
  const long cat[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n < 8; ++n) EXPECT_EQ(catalan(static_cast<unsigned long>(n)), cat[n]);
  EXPECT_EQ(binomial(12, 4), oracle::binom(12, 4));
  EXPECT_EQ(factorial(10), 3628800);
}

TEST(QuadSurd, GoldenRatioPowersAreFibonacci) {
  // phi^n = (L_n + F_n sqrt5) / 2
  const QuadSurd phi = QuadSurd::golden_ratio();
  long f0 = 0, f1 = 1, l0 = 2, l1 = 1;
  for (int n = 1; n < 20; ++n) {
    const QuadSurd p = phi.pow(n);
    EXPECT_EQ(p.a, q(l1, 2));
    EXPECT_EQ(p.b, q(f1, 2));
    std::tie(f0, f1) = std::make_pair(f1, f0 + f1);
    std::tie(l0, l1) = std::make_pair(l1, l0 + l1);
  }
  EXPECT_EQ(phi * phi.inverse(), QuadSurd(1, 0));
  EXPECT_EQ(QuadSurd(0, 1).div_sqrt5(), QuadSurd(1, 0));
  EXPECT_THROW(phi.rational_part(), SeriesError);
  EXPECT_THROW(QuadSurd(0, 0).inverse(), SeriesError);
}

TEST(PowerSeries, ProductTracksValuations) {
  const PowerSeries a = PowerSeries::identity(Var::g, 5);
  const PowerSeries b = poly({0, 0, 1, 1});
  const PowerSeries p = a * b;
  // b is known to order 3 and a starts at g^1, so the product is known to 4.
  EXPECT_EQ(p.order(), 4);
  EXPECT_EQ(p[3], 1);
  EXPECT_EQ(p[4], 1);
}

TEST(PowerSeries, VariableMismatchThrows) {
  EXPECT_THROW(PowerSeries::one(Var::g, 3) + PowerSeries::one(Var::G, 3), SeriesError);
  EXPECT_THROW(PowerSeries::one(Var::g, 3)[4], SeriesError);
}

TEST(PowerSeries, GeometricSeriesOfRootedBlocks) {
  // h/(1-h) with h = G + G^2 + 3G^3, against expanding h + h^2 + h^3.
  const PowerSeries h = poly({0, 1, 1, 3}, Var::G);
  const PowerSeries q = h / (Rational(1) - h);
  oracle::Poly ho = {0, 1, 1, 3}, acc = oracle::zero(3), hp = ho;
  for (int k = 1; k <= 3; ++k) {
    acc = oracle::add(acc, hp);
    hp = oracle::mul(hp, ho, 3);
  }
  EXPECT_EQ(q, from(acc, Var::G));
  EXPECT_EQ(q[3], 6);
}

TEST(PowerSeries, DivisionByVanishingSeries) {
  const PowerSeries g = PowerSeries::identity(Var::g, 4);
  EXPECT_EQ((g * g) / g, poly({0, 1, 0, 0}));
  EXPECT_THROW(PowerSeries::one(Var::g, 4) / g, SeriesError);
  EXPECT_THROW(PowerSeries::one(Var::g, 4) / PowerSeries::zero(Var::g, 4), SeriesError);
}

TEST(PowerSeries, ComposeGeometric) {
  const PowerSeries geo = poly({1, 1, 1, 1}, Var::t);
  const PowerSeries inner = poly({0, 1, 1, 0});
  const oracle::Poly expect = oracle::substitute({1, 1, 1, 1}, {0, 1, 1, 0}, 3);
  EXPECT_EQ(compose(geo, inner), from(expect));
  EXPECT_EQ(compose(geo, inner), poly({1, 1, 2, 3}));
  EXPECT_THROW(compose(geo, poly({1, 1})), SeriesError);
}

TEST(PowerSeries, RevertGivesCatalan) {
  // f = z + f^2 by fixed point.
  oracle::Poly f = oracle::zero(6);
  for (int it = 0; it < 7; ++it) {
    oracle::Poly next = oracle::mul(f, f, 6);
    next[1] += 1;
    f = next;
  }
  const PowerSeries r = revert(poly({0, 1, -1, 0, 0, 0, 0}), Var::g);
  EXPECT_EQ(r, from(f));
  EXPECT_EQ(r[4], 5);
}

TEST(PowerSeries, RevertCubicParametrization) {
  // G = C/(1+C)^3 in the variable C.
  const PowerSeries c = PowerSeries::identity(Var::C, 8);
  const PowerSeries g = c / pow(Rational(1) + c, 3);
  const PowerSeries inv = revert(g, Var::G);
  EXPECT_EQ(inv, from(oracle::c_of_G(8), Var::G));
  EXPECT_EQ(inv.truncated(4), poly({0, 1, 3, 12, 55}, Var::G));
  EXPECT_THROW(revert(poly({1, 1}), Var::g), SeriesError);
  EXPECT_THROW(revert(poly({0, 0, 1}), Var::g), SeriesError);
}

TEST(PowerSeries, SquareRoot) {
  const PowerSeries s = sqrt_one(poly({1, -4, 0, 0}));
  EXPECT_EQ(s, poly({1, -2, -2, -4}));
  const oracle::Poly sq = oracle::mul({1, -2, -2, -4}, {1, -2, -2, -4}, 3);
  EXPECT_EQ(from(sq), poly({1, -4, 0, 0}));
  EXPECT_THROW(sqrt_one(poly({4, 1})), SeriesError);
}

TEST(PowerSeries, ExactShifts) {
  EXPECT_THROW(poly({1, 2, 3}).shifted_down(1), SeriesError);
  EXPECT_EQ(poly({0, 2, 3}).shifted_down(1), poly({2, 3}));
  EXPECT_EQ(poly({2, 3}).shifted_up(2), poly({0, 0, 2, 3}));
}

TEST(BiSeries, ProductAndEvaluation) {
  const int D = 4, N = 6;
  const BiSeries t = BiSeries::t(D, Var::G, N);
  const PowerSeries G = PowerSeries::identity(Var::G, N);
  const BiSeries f = t * t + BiSeries::constant(G, D);
  // f(t = G) = G + G^2
  const PowerSeries v = eval_t(f, G);
  EXPECT_EQ(v[1], 1);
  EXPECT_EQ(v[2], 1);
  EXPECT_EQ(v[3], 0);
  EXPECT_EQ(div_by_t(f - BiSeries::constant(G, D)), t.truncated(D - 1, N));
  EXPECT_THROW(div_by_t(f), SeriesError);
}

TEST(BiSeries, QuotientAndRoot) {
  const int D = 5, N = 5;
  const BiSeries t = BiSeries::t(D, Var::G, N);
  const PowerSeries one = PowerSeries::one(Var::G, N);
  const BiSeries u = BiSeries::constant(one, D) + t * PowerSeries::identity(Var::G, N);
  const BiSeries q = BiSeries::constant(one, D) / u;
  const BiSeries back = q * u;
  EXPECT_TRUE((back - BiSeries::constant(one, D)).is_zero());
  const BiSeries r = sqrt_one(u);
  EXPECT_TRUE((r * r - u).is_zero());
}

TEST(SeriesJson, RoundTrip) {
  const PowerSeries s(Var::x, {Rational(1), Rational(-3, 7), Rational(0), Rational(22)});
  const std::string text = to_json(s);
  EXPECT_NE(text.find("\"-3/7\""), std::string::npos);
  EXPECT_NE(text.find("\"variable\":\"x\""), std::string::npos);
  EXPECT_EQ(power_series_from_json(text), s);
  EXPECT_THROW(power_series_from_json("{\"variable\":\"q\",\"order\":0,\"coefficients\":[\"1\"]}"), SeriesError);
}
