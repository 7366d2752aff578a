#include <qmeixner/meixner.hpp>

#include "oracle/float_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qmeixner;

namespace {
Rational R(long p, long q = 1) { return Rational(p, q); }
}  // namespace

TEST(Meixner, LowDegrees) {
  EXPECT_EQ(meixner_eval_recurrence({0, R(7, 3), R(1, 2)}, R(11)), R(1));
  // M_1 = x - beta c/(1-c)
  EXPECT_EQ(meixner_eval_recurrence({1, R(-3, 2), R(1, 2)}, R(0)), R(3, 2));
  EXPECT_EQ(meixner_coeffs({2, R(2), R(1, 2)}), Polynomial({R(6), R(-7), R(1)}));
}

TEST(Meixner, MonicAndFamily) {
  const MeixnerParams p{6, R(-7, 5), R(4, 5)};
  const auto fam = meixner_family(p);
  ASSERT_EQ(fam.size(), 7u);
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(fam[static_cast<std::size_t>(k)].degree(), k);
    EXPECT_EQ(fam[static_cast<std::size_t>(k)].leading(), R(1));
  }
  EXPECT_EQ(fam.back(), meixner_coeffs(p));
}

TEST(Meixner, SubleadingCoefficient) {
  // Sum of zeros = n(n - 1 + (n - 1 + 2 beta) c) / (2 (1 - c)), from the Jacobi-matrix trace.
  for (int n : {1, 2, 5, 9}) {
    const MeixnerParams p{n, R(-13, 7), R(3, 10)};
    const Rational trace = Rational(n) * (Rational(n - 1) + (Rational(n - 1) + 2 * p.beta) * p.c) / (2 * (1 - p.c));
    EXPECT_EQ(meixner_coeffs(p)[static_cast<std::size_t>(n - 1)], -trace) << n;
  }
}

TEST(Meixner, Validation) {
  EXPECT_THROW(meixner_coeffs({2, R(1), R(1)}), Error);
  EXPECT_THROW(meixner_coeffs({2, R(1), R(0)}), Error);
  EXPECT_THROW(meixner_coeffs({-1, R(1), R(1, 2)}), Error);
  try {
    validate({3, R(1), R(1)});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
  }
}

TEST(Meixner, SeriesPole) {
  const MeixnerParams p{3, R(-1), R(1, 2)};
  EXPECT_TRUE(series_has_pole(p));
  EXPECT_FALSE(series_has_pole({3, R(-3), R(1, 2)}));
  EXPECT_FALSE(series_has_pole({3, R(-1, 2), R(1, 2)}));
  try {
    meixner_eval_series(p, R(5, 2));
    FAIL() << "expected a pole";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Pole);
  }
  // The recurrence is still defined there.
  EXPECT_NO_THROW(meixner_eval_recurrence(p, R(5, 2)));
}

TEST(Meixner, SeriesMatchesRecurrenceOnRandomSamples) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> deg(0, 12), num(-400, 400), den(1, 60), cnum(1, 99);
  int checked = 0;
  while (checked < 1000) {
    const MeixnerParams p{deg(rng), R(num(rng), den(rng)), R(cnum(rng), 100) * (rng() % 5 == 0 ? -3 : 1)};
    if (p.c == 1 || series_has_pole(p)) continue;
    const Rational x(num(rng), den(rng));
    ASSERT_EQ(meixner_eval_series(p, x), meixner_eval_recurrence(p, x)) << to_string(p) << " x=" << to_string(x);
    ++checked;
  }
}

TEST(Meixner, AgreesWithFloatingPointOracle) {
  for (int n : {1, 3, 6, 9})
    for (double beta : {-1.5, -0.5, 0.75, 3.0})
      for (double c : {0.2, 0.5, 0.8})
        for (double x : {-1.25, 0.0, 0.5, 2.0, 7.5}) {
          const MeixnerParams p{n, parse_rational(std::to_string(beta)), parse_rational(std::to_string(c))};
          const double exact = meixner_eval_recurrence(p, parse_rational(std::to_string(x))).convert_to<double>();
          const double ref = oracle::meixner_value(n, beta, c, x);
          EXPECT_NEAR(exact, ref, 1e-9 * std::max(1.0, std::abs(ref))) << to_string(p) << " x=" << x;
        }
}
