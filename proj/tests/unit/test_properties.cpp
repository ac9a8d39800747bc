#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qp/power_series.hpp"

using namespace qp;

namespace {

constexpr int kOrder = 12;
constexpr int kTrials = 250;
constexpr std::uint64_t kSeed = 977;

class RandomSeries : public ::testing::Test {
 protected:
  std::mt19937_64 rng{kSeed};

  Rational coefficient() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  }

  PowerSeries series(int valuation = 0) {
    std::vector<Rational> c(kOrder + 1, Rational(0));
    for (int i = valuation; i <= kOrder; ++i) c[static_cast<std::size_t>(i)] = coefficient();
    return PowerSeries(Var::g, std::move(c));
  }

  PowerSeries unit() {
    PowerSeries s = series();
    return s - s[0] + Rational(1);
  }

  PowerSeries invertible_map() {
    PowerSeries s = series(1);
    while (s[1] == 0) s = series(1);
    return s;
  }
};

oracle::Poly as_poly(const PowerSeries& s) { return oracle::Poly(s.coefficients().begin(), s.coefficients().end()); }

}  // namespace

TEST_F(RandomSeries, RingAxioms) {
  for (int i = 0; i < kTrials; ++i) {
    const PowerSeries a = series(), b = series(), c = series();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(as_poly(a * b), oracle::mul(as_poly(a), as_poly(b), kOrder));
  }
}

TEST_F(RandomSeries, Inverses) {
  for (int i = 0; i < kTrials; ++i) {
    const PowerSeries u = unit();
    const PowerSeries inv = PowerSeries::one(Var::g, kOrder) / u;
    ASSERT_EQ(as_poly(inv), oracle::inverse(as_poly(u), kOrder));
    ASSERT_EQ(u * inv, PowerSeries::one(Var::g, kOrder));
  }
}

TEST_F(RandomSeries, RevertThenCompose) {
  const PowerSeries id = PowerSeries::identity(Var::g, kOrder);
  for (int i = 0; i < kTrials; ++i) {
    const PowerSeries s = invertible_map();
    const PowerSeries r = revert(s, Var::g);
    ASSERT_EQ(compose(s, r), id);
    ASSERT_EQ(compose(r, s), id);
    ASSERT_EQ(as_poly(compose(s, r)), oracle::substitute(as_poly(s), as_poly(r), kOrder));
  }
}

TEST_F(RandomSeries, SquareRootSquares) {
  for (int i = 0; i < kTrials; ++i) {
    const PowerSeries u = unit();
    const PowerSeries r = sqrt_one(u);
    ASSERT_EQ(r * r, u);
    ASSERT_EQ(r[0], 1);
  }
}
