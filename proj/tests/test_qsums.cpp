#include <qmeixner/qsums.hpp>

#include "oracle/float_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qmeixner;

namespace {
Rational R(long p, long q = 1) { return Rational(p, q); }

void expect_pattern(const QSumReport& rep) {
  const int top = rep.params.n - rep.order_r;
  ASSERT_EQ(static_cast<int>(rep.moments.size()), top + 1);
  for (const auto& mo : rep.moments) {
    if (mo.m < top) {
      EXPECT_LE(abs(mo.sum), mo.tail_bound) << to_string(rep.params) << " m=" << mo.m;
      EXPECT_EQ(mo.cls, MomentClass::Vanishes);
    } else {
      EXPECT_GT(abs(mo.sum), 2 * mo.tail_bound) << to_string(rep.params) << " m=" << mo.m;
      EXPECT_EQ(mo.cls, MomentClass::Nonzero);
    }
  }
  EXPECT_TRUE(rep.consistent());
}
}  // namespace

TEST(QOrder, ByRegime) {
  EXPECT_EQ(quasi_orth_order_by_expansion(R(3, 2), R(1, 2), 5), 0);
  EXPECT_EQ(quasi_orth_order_by_expansion(R(-1, 2), R(1, 2), 5), 1);
  EXPECT_EQ(quasi_orth_order_by_expansion(R(-3, 2), R(1, 2), 5), 2);
  EXPECT_EQ(quasi_orth_order_by_expansion(R(-3, 2), R(1, 2), 1), 1);
  EXPECT_EQ(quasi_orth_order_by_expansion(R(-3, 2), R(1, 2), 0), 0);
}

TEST(QOrder, Errors) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Degenerate;
  };
  EXPECT_EQ(code([] { quasi_orth_order_by_expansion(R(-1), R(1, 2), 4); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code([] { quasi_orth_order_by_expansion(R(-5, 2), R(1, 2), 4); }), ErrorCode::Unsupported);
  EXPECT_EQ(code([] { quasi_orth_order_by_expansion(R(1, 2), R(3, 2), 4); }), ErrorCode::InvalidParams);
}

TEST(Weight, Values) {
  EXPECT_EQ(meixner_weight(R(2), R(1, 2), 0), R(1));
  EXPECT_EQ(meixner_weight(R(2), R(1, 2), 3), R(1, 8) * 4);  // (2)_3/3! = 4
}

TEST(QSums, ThreeRegimes) {
  expect_pattern(quasi_orth_sums({4, R(3, 2), R(1, 2)}, 0, 200));
  expect_pattern(quasi_orth_sums({3, R(-1, 2), R(1, 2)}, 1, 200));
  expect_pattern(quasi_orth_sums({5, R(-3, 2), R(1, 5)}, 2, 200));
  expect_pattern(quasi_orth_sums({4, R(-3, 2), R(1, 5)}, 2, 200));
  expect_pattern(quasi_orth_sums({2, R(1), R(1, 2)}, 0, 200));
  EXPECT_EQ(quasi_orth_order_by_expansion(R(-1, 2), R(1, 2), 4), 1);
  EXPECT_EQ(quasi_orth_order_by_expansion(R(-3, 2), R(1, 2), 4), 2);
}

TEST(QSums, AdaptiveTruncation) {
  const MeixnerParams p{4, R(-3, 2), R(9, 10)};
  const long X = choose_truncation(p, 2);
  EXPECT_GE(X, 200);
  const auto rep = quasi_orth_sums(p, 2, X);
  EXPECT_LT(rep.largest_tail(), rep.largest_sum() * R(1, 1000000000000LL));
  expect_pattern(rep);
  if (X > 200) {
    const auto before = quasi_orth_sums(p, 2, X - 1);
    EXPECT_FALSE(before.largest_tail() < before.largest_sum() * R(1, 1000000000000LL));
  }
}

TEST(QSums, TailNotBounded) {
  try {
    quasi_orth_sums({6, R(1, 2), R(9, 10)}, 0, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TailNotBounded);
  }
  EXPECT_THROW(quasi_orth_sums({3, R(-3, 2), R(1, 2)}, 1, 100), Error);  // weight at beta + 1 < 0
}

TEST(QSums, TailBoundIsValid) {
  // Summing much further must stay within the bound of the shorter truncation.
  const MeixnerParams p{3, R(2), R(1, 2)};
  const auto short_rep = quasi_orth_sums(p, 0, 40);
  const auto long_rep = quasi_orth_sums(p, 0, 400);
  for (std::size_t m = 0; m < short_rep.moments.size(); ++m)
    EXPECT_LE(abs(long_rep.moments[m].sum - short_rep.moments[m].sum), short_rep.moments[m].tail_bound);
}

TEST(Norm, ApproximatelyMatchesClosedForm) {
  // sum_x M_n(x)^2 w(x) against n! (beta)_n c^n / (1-c)^(beta+2n), beta > 0.
  for (int n : {0, 1, 3, 6})
    for (auto [bn, bd, cn, cd] : {std::array{1, 2, 1, 5}, {3, 1, 1, 2}, {5, 2, 4, 5}}) {
      const MeixnerParams p{n, R(bn, bd), R(cn, cd)};
      Rational sum(0), w(1);
      for (long x = 0; x <= 500; ++x) {
        const Rational v = meixner_eval_recurrence(p, Rational(x));
        sum += v * v * w;
        w *= p.c * (p.beta + x) / (x + 1);
      }
      const double ref = oracle::monic_norm(n, double(bn) / bd, double(cn) / cd);
      EXPECT_NEAR(sum.convert_to<double>() / ref, 1.0, 1e-9) << to_string(p);
    }
}
