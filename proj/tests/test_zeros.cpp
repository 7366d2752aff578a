#include <qmeixner/zeros.hpp>

#include "oracle/float_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qmeixner;

namespace {
Polynomial roots_poly(std::initializer_list<Rational> roots) {
  Polynomial p = Polynomial::constant(Rational(1));
  for (const auto& r : roots) p = p * Polynomial::linear(r);
  return p;
}
bool contains(const IsolatingInterval& iv, double v, double slack) {
  return iv.lo.convert_to<double>() - slack <= v && v <= iv.hi.convert_to<double>() + slack;
}
}  // namespace

TEST(Sturm, CountsHalfOpenIntervals) {
  const Polynomial p = roots_poly({Rational(1), Rational(2), Rational(3)});
  EXPECT_EQ(count_real_roots(p, Rational(0), Rational(5, 2)), 2);
  EXPECT_EQ(count_real_roots(p, Rational(1), Rational(3)), 2);
  EXPECT_EQ(count_real_roots(p, std::nullopt, std::nullopt), 3);
  EXPECT_EQ(count_real_roots(Polynomial({Rational(1), Rational(0), Rational(1)}), std::nullopt, std::nullopt), 0);
}

TEST(Sturm, RepeatedRootsCountOnce) {
  const Polynomial p = roots_poly({Rational(1), Rational(1), Rational(1), Rational(-2), Rational(-2)});
  EXPECT_EQ(count_real_roots(p, std::nullopt, std::nullopt), 2);
}

TEST(Refine, SquareRootOfTwo) {
  const Polynomial p({Rational(-2), Rational(0), Rational(1)});
  const auto iv = refine(p, {Rational(1), Rational(2), std::nullopt, 1}, pow2(-20));
  EXPECT_LE(iv.width(), pow2(-20));
  EXPECT_LT(iv.lo * iv.lo, Rational(2));
  EXPECT_GT(iv.hi * iv.hi, Rational(2));
}

TEST(Refine, Errors) {
  const Polynomial p({Rational(-2), Rational(0), Rational(1)});
  try {
    refine(p, {Rational(2), Rational(3), std::nullopt, 1}, Rational(1, 10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSignChange);
  }
  EXPECT_THROW(refine(p, {Rational(1), Rational(2), std::nullopt, 1}, Rational(0)), Error);
}

TEST(Isolate, ExactMidpointRoots) {
  const ZeroSet zs = isolate_zeros(roots_poly({Rational(-1), Rational(0), Rational(1)}));
  ASSERT_EQ(zs.size(), 3u);
  for (std::size_t i = 0; i + 1 < zs.size(); ++i) EXPECT_LT(zs[i].hi, zs[i + 1].lo);
  bool found_zero = false;
  for (const auto& iv : zs.intervals)
    if (iv.exact && *iv.exact == 0) found_zero = true;
  EXPECT_TRUE(found_zero);
}

TEST(Isolate, Multiplicities) {
  const ZeroSet zs = isolate_zeros(roots_poly({Rational(1), Rational(1), Rational(1), Rational(-2), Rational(-2), Rational(5)}));
  ASSERT_EQ(zs.size(), 3u);
  EXPECT_EQ(zs.real_count, 6);
  EXPECT_EQ(zs[0].multiplicity, 2);
  EXPECT_EQ(zs[1].multiplicity, 3);
  EXPECT_EQ(zs[2].multiplicity, 1);
}

TEST(Isolate, CloseRoots) {
  const Rational eps = pow10(-30);
  const ZeroSet zs = refine_all(isolate_zeros(roots_poly({Rational(1, 3), Rational(1, 3) + eps, Rational(-7)})), pow10(-40));
  ASSERT_EQ(zs.size(), 3u);
  EXPECT_LT(zs[1].hi, zs[2].lo);
}

TEST(MeixnerZeros, MatchEigenvalueOracle) {
  for (int n = 1; n <= 10; ++n)
    for (auto [bn, bd] : {std::pair{1, 2}, {2, 1}, {5, 1}, {-1, 2}, {-3, 2}})
      for (auto [cn, cd] : {std::pair{1, 5}, {1, 2}, {4, 5}}) {
        const MeixnerParams p{n, Rational(bn, bd), Rational(cn, cd)};
        const ZeroSet zs = zeros_of(p, pow10(-12));
        const auto ref = oracle::meixner_zeros(n, double(bn) / bd, double(cn) / cd);
        ASSERT_EQ(zs.size(), ref.size()) << to_string(p);
        for (std::size_t i = 0; i < ref.size(); ++i)
          EXPECT_TRUE(contains(zs[i], ref[i], 1e-6 * std::max(1.0, std::abs(ref[i])))) << to_string(p) << " zero " << i;
      }
}

TEST(MeixnerZeros, OrthogonalRegimeHasSimplePositiveZeros) {
  for (int n = 1; n <= 10; ++n) {
    const ZeroSet zs = isolate_zeros(meixner_coeffs({n, Rational(3, 2), Rational(1, 3)}));
    EXPECT_EQ(static_cast<int>(zs.size()), n);
    EXPECT_EQ(zs.real_count, n);
    EXPECT_EQ(count_real_roots(meixner_coeffs({n, Rational(3, 2), Rational(1, 3)}), std::nullopt, Rational(0)), 0);
  }
}

TEST(MeixnerZeros, TinyFirstZero) {
  const ZeroSet zs = isolate_zeros(meixner_coeffs({10, Rational(-199, 100), Rational(1, 10)}));
  IsolatingInterval iv = zs[0];
  while (!(iv.width() < pow10(-20))) qmeixner::detail::bisect_once(zs.reduced, iv);
  EXPECT_GT(iv.lo, Rational(35485, 1000) * pow10(-15));
  EXPECT_LT(iv.hi, Rational(35495, 1000) * pow10(-15));
}

TEST(Quadratic, DoubleRoot) {
  const auto q = quadratic_zeros({2, Rational(-9, 8), Rational(1, 2)});
  EXPECT_EQ(q.kind, QuadraticZeros::Kind::Double);
  EXPECT_EQ(q.discriminant, Rational(0));
  ASSERT_TRUE(q.double_root);
  EXPECT_EQ(*q.double_root, Rational(3, 8));
  ASSERT_EQ(q.zeros.size(), 1u);
  EXPECT_EQ(q.zeros[0].exact, Rational(3, 8));
  EXPECT_EQ(q.zeros[0].multiplicity, 2);
}

TEST(Quadratic, ComplexPair) {
  const auto q = quadratic_zeros({2, Rational(-7, 4), Rational(3, 4)});
  EXPECT_EQ(q.kind, QuadraticZeros::Kind::ComplexPair);
  EXPECT_EQ(q.zeros.size(), 0u);
  EXPECT_THROW(quadratic_zeros({3, Rational(1), Rational(1, 2)}), Error);
}

TEST(Quadratic, ClassificationMatchesSturmOnRandomParams) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> bn(-400, 300), cn(1, 99);
  for (int trial = 0; trial < 50; ++trial) {
    const MeixnerParams p{2, Rational(bn(rng), 100), Rational(cn(rng), 100)};
    const auto q = quadratic_zeros(p);
    const Polynomial m = meixner_coeffs(p);
    // Discriminant of the monic quadratic, computed from its coefficients.
    const Rational disc = m[1] * m[1] - 4 * m[0];
    const int distinct = count_real_roots(m, std::nullopt, std::nullopt);
    const int expected = disc.sign() > 0 ? 2 : (disc.sign() == 0 ? 1 : 0);
    EXPECT_EQ(distinct, expected) << to_string(p);
    const auto kind = disc.sign() > 0 ? QuadraticZeros::Kind::TwoReal
                                      : (disc.sign() == 0 ? QuadraticZeros::Kind::Double : QuadraticZeros::Kind::ComplexPair);
    EXPECT_EQ(q.kind, kind) << to_string(p);
    EXPECT_EQ(q.discriminant.sign(), disc.sign());
  }
}
