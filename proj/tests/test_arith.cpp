#include "oracles.hpp"
#include "relfree/arith.hpp"
#include "relfree/sampling.hpp"

#include <gtest/gtest.h>

using namespace relfree;

namespace {

LaurentPolynomial random_laurent(Sampler& s, std::size_t rank, std::int64_t modulus) {
  LaurentPolynomial p(rank, modulus);
  const auto terms = s.uniform(0, 4);
  for (std::int64_t t = 0; t < terms; ++t) {
    ExponentVector e(rank);
    for (auto& x : e) x = s.uniform(-2, 2);
    p.add_term(std::move(e), s.uniform(-5, 5));
  }
  return p;
}

}  // namespace

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1}), (IntPolynomial{-1, 1}));
  EXPECT_EQ(poly_gcd(IntPolynomial{1, -3, 1}, IntPolynomial{-1, 1}), (IntPolynomial{1}));
  EXPECT_EQ(poly_gcd(IntPolynomial{}, IntPolynomial{2, 2}), (IntPolynomial{1, 1}));
  EXPECT_EQ(poly_gcd(IntPolynomial{}, IntPolynomial{}), IntPolynomial{});
}

TEST(PolyGcd, RationalEuclidOracle) {
  // (x²-3x+1, x-1): Euclid over Q ends in a nonzero constant
  EXPECT_EQ(oracle::rational_euclid_gcd({1, -3, 1}, {-1, 1}), std::vector<Integer>{1});
  Sampler s(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long long> f, g;
    for (int i = 0, d = static_cast<int>(s.uniform(0, 4)); i <= d; ++i) f.push_back(s.uniform(-4, 4));
    for (int i = 0, d = static_cast<int>(s.uniform(0, 4)); i <= d; ++i) g.push_back(s.uniform(-4, 4));
    std::vector<Integer> fi(f.begin(), f.end()), gi(g.begin(), g.end());
    const IntPolynomial got = poly_gcd(IntPolynomial(fi), IntPolynomial(gi));
    EXPECT_EQ(got.coefficients(), oracle::rational_euclid_gcd(f, g));
  }
}

TEST(PolyGcd, DividesAndIsGreatest) {
  Sampler s(11);
  auto rand_poly = [&](int max_deg) {
    std::vector<Integer> c;
    for (int i = 0, d = static_cast<int>(s.uniform(0, max_deg)); i <= d; ++i) c.emplace_back(s.uniform(-3, 3));
    return IntPolynomial(c);
  };
  for (int trial = 0; trial < 500; ++trial) {
    const IntPolynomial common = rand_poly(2), a = rand_poly(3), b = rand_poly(3);
    const IntPolynomial f = common * a, g = common * b;
    const IntPolynomial d = poly_gcd(f, g);
    if (f.is_zero() && g.is_zero()) {
      EXPECT_TRUE(d.is_zero());
      continue;
    }
    EXPECT_NO_THROW(f.exact_divide(d));
    EXPECT_NO_THROW(g.exact_divide(d));
    if (!common.is_zero()) EXPECT_NO_THROW(d.exact_divide(common.primitive_part()));
    EXPECT_GT(d.leading(), 0);
    EXPECT_EQ(d.content(), 1);
  }
}

TEST(IntPolynomial, ExactDivideRejectsRemainder) {
  EXPECT_THROW((IntPolynomial{1, 0, 1}).exact_divide(IntPolynomial{-1, 1}), std::domain_error);
  EXPECT_THROW((IntPolynomial{1, 1}).exact_divide(IntPolynomial{}), std::domain_error);
  EXPECT_EQ((IntPolynomial{-1, 0, 1}).exact_divide(IntPolynomial{1, 1}), (IntPolynomial{-1, 1}));
}

TEST(IntPolynomial, Printing) {
  EXPECT_EQ((IntPolynomial{1, -3, 1}).to_string(), "x^2 - 3*x + 1");
  EXPECT_EQ((IntPolynomial{0, -1}).to_string(), "-x");
  EXPECT_EQ(IntPolynomial{}.to_string(), "0");
}

TEST(Laurent, ReduceModExamples) {
  const auto t1 = LaurentPolynomial::variable(2, 1);
  EXPECT_TRUE(laurent_reduce_mod(Integer(2) * t1, 2).is_zero());

  LaurentPolynomial p = LaurentPolynomial::constant(2, 3);
  p.add_term({0, -1}, 1);
  LaurentPolynomial expected = LaurentPolynomial::constant(2, 1, 2);
  expected.add_term({0, -1}, 1);
  EXPECT_EQ(laurent_reduce_mod(p, 2), expected);
  EXPECT_EQ(laurent_reduce_mod(p, 2).to_string(), "1 + t2^-1");

  EXPECT_EQ(laurent_reduce_mod(p, 0), p);
  EXPECT_THROW(laurent_reduce_mod(p, 1), std::domain_error);
  EXPECT_THROW(laurent_reduce_mod(expected, 3), std::domain_error);
}

TEST(Laurent, PrintingOrder) {
  LaurentPolynomial p = LaurentPolynomial::constant(2, 1);
  p.add_term({-1, 1}, -2);
  EXPECT_EQ(p.to_string(), "1 - 2*t1^-1*t2");
  LaurentPolynomial q(3);
  q.add_term({0, 0, 2}, 1);
  q.add_term({1, 0, 0}, -1);
  q.add_term({0, 1, -1}, 7);
  EXPECT_EQ(q.to_string(), "-t1 + 7*t2*t3^-1 + t3^2");
  EXPECT_EQ(LaurentPolynomial(2).to_string(), "0");
}

TEST(Laurent, ResiduesStayInRange) {
  LaurentPolynomial p(1, 5);
  p.add_term({0}, -1);
  EXPECT_EQ(p.coefficient({0}), 4);
  p.add_term({0}, 1);
  EXPECT_TRUE(p.is_zero());
}

TEST(Laurent, RingAxiomsRandomized) {
  Sampler s(3);
  for (std::int64_t modulus : {0, 2, 3, 5}) {
    for (int trial = 0; trial < 2500; ++trial) {
      const std::size_t rank = static_cast<std::size_t>(s.uniform(1, 3));
      const auto f = random_laurent(s, rank, modulus);
      const auto g = random_laurent(s, rank, modulus);
      const auto h = random_laurent(s, rank, modulus);
      ASSERT_EQ((f + g) * h, f * h + g * h);
      ASSERT_EQ(f * g, g * f);
      ASSERT_EQ((f * g) * h, f * (g * h));
      ASSERT_TRUE((f - f).is_zero());
    }
  }
}

TEST(Laurent, ReductionIsRingHomomorphism) {
  Sampler s(5);
  for (std::int64_t k : {2, 3, 5, 6}) {
    for (int trial = 0; trial < 500; ++trial) {
      const auto p = random_laurent(s, 2, 0);
      const auto q = random_laurent(s, 2, 0);
      ASSERT_EQ((p * q).reduce_mod(k), p.reduce_mod(k) * q.reduce_mod(k));
      ASSERT_EQ((p + q).reduce_mod(k), p.reduce_mod(k) + q.reduce_mod(k));
    }
  }
}

TEST(Laurent, MixedRingsRejected) {
  EXPECT_THROW(LaurentPolynomial(2, 0) + LaurentPolynomial(2, 3), std::invalid_argument);
  EXPECT_THROW(LaurentPolynomial(2) * LaurentPolynomial(3), std::invalid_argument);
  EXPECT_THROW(LaurentPolynomial(2, 1), std::domain_error);
}
